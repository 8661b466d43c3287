import psutil
import logging
from typing import Dict, Any
from prometheus_client import CollectorRegistry, Counter, Histogram, Gauge, write_to_textfile

# Initialize logger
logger = logging.getLogger("sonc_separation")

REGISTRY = CollectorRegistry()

# Prometheus metrics
CIRCUITS_CHECKED = Counter(
    'sonc_circuits_checked_total',
    'Circuit polynomials checked, by verdict',
    ['verdict'],
    registry=REGISTRY
)

CERTIFICATES_VERIFIED = Counter(
    'sonc_certificates_verified_total',
    'SONC certificates verified, by outcome',
    ['ok'],
    registry=REGISTRY
)

ATTACK_ITERATIONS = Counter(
    'sonc_attack_iterations_total',
    'Coordinate-search iterations run by the attack',
    registry=REGISTRY
)

SOUNDNESS_ALARMS = Counter(
    'sonc_soundness_alarms_total',
    'Verified SONC candidates that beat the certified bound',
    registry=REGISTRY
)

COMMAND_DURATION = Histogram(
    'sonc_command_duration_seconds',
    'Command wall-clock duration in seconds',
    ['command'],
    registry=REGISTRY
)

SYSTEM_CPU_USAGE = Gauge(
    'system_cpu_usage_percent',
    'Current system CPU usage percentage',
    registry=REGISTRY
)

SYSTEM_MEMORY_USAGE = Gauge(
    'system_memory_usage_bytes',
    'Current system memory usage in bytes',
    registry=REGISTRY
)

# PUBLIC_INTERFACE
def get_system_metrics() -> Dict[str, Any]:
    """
    Get current system metrics.

    Returns:
        Dict containing system metrics
    """
    cpu_percent = psutil.cpu_percent()
    memory = psutil.virtual_memory()

    # Update Prometheus gauges
    SYSTEM_CPU_USAGE.set(cpu_percent)
    SYSTEM_MEMORY_USAGE.set(memory.used)

    return {
        "cpu_usage_percent": cpu_percent,
        "cpu_count_physical": psutil.cpu_count(logical=False),
        "memory_usage_percent": memory.percent,
        "memory_available_mb": memory.available / (1024 * 1024),
        "memory_used_mb": memory.used / (1024 * 1024)
    }

# PUBLIC_INTERFACE
def write_metrics(path: str) -> None:
    """
    Write the registry in the Prometheus text format.

    Args:
        path: Destination file, replaced atomically
    """
    get_system_metrics()
    write_to_textfile(path, REGISTRY)
    logger.debug(f"Metrics written to {path}")
