"""Variation app"""
from django.apps import AppConfig


class VariationConfig(AppConfig):
    name = 'variation'
    verbose_name = 'Vitali and total variation'
