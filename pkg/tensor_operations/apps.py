from django.apps import AppConfig


class TensorOperationsConfig(AppConfig):
    name = "tensor_operations"
