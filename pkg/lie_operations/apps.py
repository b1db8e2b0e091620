from django.apps import AppConfig


class LieOperationsConfig(AppConfig):
    name = "lie_operations"
