from django.apps import AppConfig


class ExtendConfig(AppConfig):
    name = 'extend'
