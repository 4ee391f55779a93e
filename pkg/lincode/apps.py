from django.apps import AppConfig


class LincodeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'lincode'
    verbose_name = 'Random linear codes'
