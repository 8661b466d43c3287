import json
import logging
import sys
import time
import uuid
from logging.handlers import RotatingFileHandler
from typing import Any, Dict, Optional

from pythonjsonlogger import jsonlogger

logger = logging.getLogger("sonc_separation")


class CorrelationIdFilter(logging.Filter):
    """Give records logged outside a command a null correlation id."""

    def filter(self, record: logging.LogRecord) -> bool:
        if not hasattr(record, "correlation_id"):
            record.correlation_id = "null"
        return True


# PUBLIC_INTERFACE
def install_handlers(
    level: int = logging.WARNING,
    fmt: str = "%(asctime)s - %(name)s - %(levelname)s - %(correlation_id)s - %(message)s",
    filename: Optional[str] = None,
    json_lines: bool = False,
) -> None:
    """
    Configure the sonc_separation logger.

    Records go to stderr so stdout only carries command results, and to a
    rotating file when a filename is given.

    Args:
        level: Logging level
        fmt: Format string for plain text records
        filename: Optional log file path
        json_lines: Emit one JSON object per record instead of plain text
    """
    if json_lines:
        formatter: logging.Formatter = jsonlogger.JsonFormatter(fmt)
    else:
        formatter = logging.Formatter(fmt)

    handlers = [logging.StreamHandler(sys.stderr)]
    if filename:
        handlers.append(
            RotatingFileHandler(
                filename,
                maxBytes=10*1024*1024,  # 10MB
                backupCount=5
            )
        )

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    for handler in handlers:
        handler.setFormatter(formatter)
        handler.addFilter(CorrelationIdFilter())
        logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False


class StructuredCommandLogging:
    """
    Context manager for structured logging of one CLI command.

    Attributes:
        command: Name of the subcommand being run
        context: Structured fields logged with every record of the command
        exit_code: Set by the caller before leaving the block
    """

    def __init__(self, command: str, **fields: Any):
        self.command = command
        self.correlation_id = str(uuid.uuid4())
        self.context: Dict[str, Any] = {"correlation_id": self.correlation_id, "command": command, **fields}
        self.exit_code: Optional[int] = None
        self.logger = logger
        self._start = 0.0

    @property
    def extra(self) -> Dict[str, str]:
        return {"correlation_id": self.correlation_id}

    @property
    def duration(self) -> float:
        return time.time() - self._start

    def __enter__(self) -> "StructuredCommandLogging":
        self._start = time.time()
        self.log_start(self.context)
        return self

    def __exit__(self, exc_type, exc, tb) -> bool:
        self.context["duration"] = f"{self.duration:.3f}s"
        if exc is not None:
            self.context["error"] = str(exc)
            self.context["error_type"] = exc_type.__name__
            self.log_error(self.context)
        else:
            self.context["exit_code"] = self.exit_code
            self.log_finish(self.context)
        return False

    def log_start(self, context: dict) -> None:
        """Log structured command start information."""
        self.logger.info(f"Command started - {json.dumps(context, default=str)}", extra=self.extra)

    def log_finish(self, context: dict) -> None:
        """Log structured command completion information."""
        self.logger.info(f"Command finished - {json.dumps(context, default=str)}", extra=self.extra)

    def log_error(self, context: dict) -> None:
        """Log structured error information."""
        self.logger.error(f"Command failed - {json.dumps(context, default=str)}", extra=self.extra)
