"""Shared fixtures and hypothesis profiles."""

import os

import pytest
from hypothesis import HealthCheck, settings

from src.cli.documents import from_object, save_document

settings.register_profile("default", max_examples=40, deadline=None)
settings.register_profile("ci", max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("acceptance", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def write_doc(tmp_path):
    """Saves an in-memory value as a document and returns its path."""

    def _write(value, name="doc"):
        path = tmp_path / f"{name}.yaml"
        save_document(from_object(value, name=name), path)
        return str(path)

    return _write
