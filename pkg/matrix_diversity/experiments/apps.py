from django.apps import AppConfig


class ExperimentsConfig(AppConfig):
    name = "matrix_diversity.experiments"
