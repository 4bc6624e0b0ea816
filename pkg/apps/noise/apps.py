from django.apps import AppConfig


class NoiseConfig(AppConfig):
    name = "apps.noise"
    verbose_name = "Pauli Noise"
