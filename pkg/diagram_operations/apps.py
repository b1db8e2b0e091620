from django.apps import AppConfig


class DiagramOperationsConfig(AppConfig):
    name = "diagram_operations"
