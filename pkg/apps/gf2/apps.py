from django.apps import AppConfig


class Gf2Config(AppConfig):
    name = "apps.gf2"
    verbose_name = "GF(2) Linear Algebra"
