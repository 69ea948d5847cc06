from django.apps import AppConfig


class DimensionsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'dimensions'
    verbose_name = 'Dimensões de medição e de informação'
