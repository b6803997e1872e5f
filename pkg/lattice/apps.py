from django.apps import AppConfig


class LatticeConfig(AppConfig):
    name = 'lattice'
