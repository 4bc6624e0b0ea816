from django.apps import AppConfig


class LeConfig(AppConfig):
    name = "apps.le"
    verbose_name = "Localizable Entanglement Bounds"
