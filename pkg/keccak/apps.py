from django.apps import AppConfig


class KeccakConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'keccak'
    verbose_name = 'Keccak permutation and SHA-3 functions'
