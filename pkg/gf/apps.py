from django.apps import AppConfig


class GfConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'gf'
    verbose_name = 'Field tower'
