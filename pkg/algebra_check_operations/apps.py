from django.apps import AppConfig


class AlgebraCheckOperationsConfig(AppConfig):
    name = "algebra_check_operations"
