from django.apps import AppConfig


class DerivationsConfig(AppConfig):
    name = 'derivations'
