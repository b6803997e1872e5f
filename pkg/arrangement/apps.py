from django.apps import AppConfig


class ArrangementConfig(AppConfig):
    name = 'arrangement'
