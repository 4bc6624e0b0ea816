from django.apps import AppConfig


class StabConfig(AppConfig):
    name = "apps.stab"
    verbose_name = "Stabilizer Tableaus"
