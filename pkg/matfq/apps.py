from django.apps import AppConfig


class MatfqConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'matfq'
    verbose_name = 'Matrices over F_q and F_q^s'
