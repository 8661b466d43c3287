"""Tests for settings loading and environment variable overrides."""
import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from config import EnvironmentType, Settings


def test_settings_defaults():
    """Test default settings."""
    with patch.dict(os.environ, {}, clear=True):
        settings = Settings(_env_file=None)
    assert settings.ENV == EnvironmentType.DEVELOPMENT
    assert settings.LOG_LEVEL == "WARNING"
    assert settings.MAX_U_DENOMINATOR == 2 ** 20
    assert settings.RATIONALIZE_DENOMINATOR == 2 ** 32
    assert settings.PROJECTION_HALVINGS == 64
    assert settings.SAMPLING_RETRIES == 100


def test_settings_from_env_variables():
    """Test loading settings from environment variables."""
    test_env = {
        "SONC_SEP_ENV": "testing",
        "SONC_SEP_THREADS": "3",
        "SONC_SEP_LOG_LEVEL": "debug",
        "SONC_SEP_ATTACK_BUDGET": "500",
        "SONC_SEP_GRID_RESOLUTION": "9",
        "SONC_SEP_LOG_JSON": "true",
    }

    with patch.dict(os.environ, test_env):
        settings = Settings(_env_file=None)
        assert settings.ENV == EnvironmentType.TESTING
        assert settings.THREADS == 3
        assert settings.LOG_LEVEL == "DEBUG"
        assert settings.ATTACK_BUDGET == 500
        assert settings.GRID_RESOLUTION == 9
        assert settings.LOG_JSON is True
        assert settings.thread_count() == 3


def test_unprefixed_variables_are_ignored():
    """Test that unprefixed variables are ignored."""
    with patch.dict(os.environ, {"THREADS": "7"}):
        assert Settings(_env_file=None).THREADS is None


@pytest.mark.parametrize(
    "name,value",
    [
        ("SONC_SEP_THREADS", "0"),
        ("SONC_SEP_GRID_RESOLUTION", "4"),
        ("SONC_SEP_LOG_LEVEL", "LOUD"),
        ("SONC_SEP_ENV", "staging"),
        ("SONC_SEP_VERIFY_INTERVAL", "0"),
    ],
)
def test_invalid_settings(name, value):
    """Test invalid settings."""
    with patch.dict(os.environ, {name: value}):
        with pytest.raises(ValidationError):
            Settings(_env_file=None)


def test_thread_count_defaults_to_physical_cpus():
    """Test the default thread count."""
    with patch("config.psutil.cpu_count", return_value=None):
        assert Settings(_env_file=None, THREADS=None).thread_count() == 1
    with patch("config.psutil.cpu_count", return_value=6):
        assert Settings(_env_file=None, THREADS=None).thread_count() == 6
