from django.apps import AppConfig


class RadiiConfig(AppConfig):
    name = 'radii'
    verbose_name = 'Radii of convergence'
