from django.apps import AppConfig


class PartitionFunctionOperationsConfig(AppConfig):
    name = "partition_function_operations"
