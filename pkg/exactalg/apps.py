from django.apps import AppConfig


class ExactalgConfig(AppConfig):
    name = 'exactalg'
