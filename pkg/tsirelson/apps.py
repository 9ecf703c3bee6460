from django.apps import AppConfig


class TsirelsonConfig(AppConfig):
    name = 'tsirelson'
    verbose_name = "Extremal Tsirelson inequalities"
