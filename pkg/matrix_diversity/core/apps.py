from django.apps import AppConfig

from matrix_diversity.core.services.telemetry import ExperimentTelemetry


class CoreConfig(AppConfig):
    name = "matrix_diversity.core"

    def ready(self) -> None:
        ExperimentTelemetry().configure_azure_monitor()
        return super().ready()
