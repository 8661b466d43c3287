"""Test cases for logging and metrics helpers.

Test Cases:
    LOG-001: JSON log lines carry the command's correlation id
    LOG-002: Failed commands log the error type and re-raise
    MET-001: Metrics are written in the Prometheus text format
"""
import json
import logging

import pytest

from middleware.logging_middleware import StructuredCommandLogging, install_handlers
from monitoring import CIRCUITS_CHECKED, get_system_metrics, write_metrics


@pytest.fixture
def log_file(tmp_path):
    path = tmp_path / "sonc.log"
    install_handlers(level=logging.INFO, filename=str(path), json_lines=True)
    yield path
    install_handlers()


def records(path):
    for handler in logging.getLogger("sonc_separation").handlers:
        handler.flush()
    return [json.loads(line) for line in path.read_text().splitlines()]


def test_command_logging_json_lines(log_file):
    """Test JSON command records with a correlation id."""
    with StructuredCommandLogging("bound", seed=1) as log:
        log.exit_code = 0
    start, finish = records(log_file)
    assert start["message"].startswith("Command started")
    assert finish["message"].startswith("Command finished")
    assert start["correlation_id"] == finish["correlation_id"] == log.correlation_id
    context = json.loads(finish["message"].split(" - ", 1)[1])
    assert context["command"] == "bound"
    assert context["exit_code"] == 0
    assert context["seed"] == 1


def test_command_logging_records_errors(log_file):
    """Test the error record of a failing command."""
    with pytest.raises(RuntimeError):
        with StructuredCommandLogging("attack"):
            raise RuntimeError("boom")
    failed = records(log_file)[-1]
    assert failed["levelname"] == "ERROR"
    context = json.loads(failed["message"].split(" - ", 1)[1])
    assert context["error"] == "boom"
    assert context["error_type"] == "RuntimeError"


def test_records_outside_commands_get_null_id(log_file):
    """Test records logged outside a command."""
    logging.getLogger("sonc_separation.circuit").warning("plain record")
    assert records(log_file)[-1]["correlation_id"] == "null"


def test_write_metrics(tmp_path):
    """Test writing metrics to a file."""
    CIRCUITS_CHECKED.labels(verdict="nonnegative").inc()
    path = tmp_path / "metrics.prom"
    write_metrics(str(path))
    content = path.read_text()
    assert 'sonc_circuits_checked_total{verdict="nonnegative"}' in content
    assert "system_memory_usage_bytes" in content
    assert get_system_metrics()["memory_used_mb"] > 0
