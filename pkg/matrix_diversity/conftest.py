from unittest import TestCase
from unittest.mock import MagicMock

import pytest

from matrix_diversity.core.services.telemetry import ExperimentTelemetry

# Show long diffs in failed test output
TestCase.maxDiff = None


@pytest.fixture(autouse=True)
def mock_telemetry(request, monkeypatch):
    if "skip_telemetry_mock" in request.keywords:
        return
    mock_telemetry = MagicMock()
    monkeypatch.setattr(ExperimentTelemetry, "exception", mock_telemetry)
    monkeypatch.setattr(ExperimentTelemetry, "run_completed", mock_telemetry)
    monkeypatch.setattr(ExperimentTelemetry, "training_diverged", mock_telemetry)
    return mock_telemetry
