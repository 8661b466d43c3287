"""Rendering of command results as json, csv or text."""
import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_ALARM = 3

FORMATS = ("json", "csv", "text")


@dataclass
class CommandResult:
    """
    What a command hands back to the CLI.

    Attributes:
        exit_code: Verdict-derived exit code
        payload: Schema instance rendered for json and text output
        rows: Tabular rows preferred over the payload for csv output
        columns: CSV header for rows, needed when rows may be empty
    """

    exit_code: int
    payload: BaseModel
    rows: Optional[List[Dict[str, Any]]] = field(default=None)
    columns: Optional[List[str]] = field(default=None)


def _flatten(value: Any, prefix: str = "") -> Dict[str, Any]:
    if isinstance(value, dict):
        out: Dict[str, Any] = {}
        for key, item in value.items():
            out.update(_flatten(item, f"{prefix}.{key}" if prefix else str(key)))
        return out
    if isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        out = {}
        for i, item in enumerate(value):
            out.update(_flatten(item, f"{prefix}[{i}]"))
        return out
    if isinstance(value, list):
        return {prefix: ", ".join(str(item) for item in value)}
    return {prefix: value}


def _to_csv(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    buffer = io.StringIO()
    header: List[str] = list(columns or [])
    for row in rows:
        header.extend(k for k in row if k not in header)
    writer = csv.DictWriter(buffer, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


# PUBLIC_INTERFACE
def render(result: CommandResult, fmt: str) -> str:
    """
    Render a command result.

    Args:
        result: The command result
        fmt: One of json, csv, text

    Returns:
        The text to print, newline-terminated

    Raises:
        ValueError: When fmt is unknown
    """
    data = json.loads(result.payload.json())
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        rows = result.rows if result.rows is not None else [_flatten(data)]
        return _to_csv(rows, result.columns)
    if fmt == "text":
        return "".join(f"{key}: {value}\n" for key, value in _flatten(data).items())
    raise ValueError(f"Unknown output format {fmt!r}; expected one of {FORMATS}")


def table_csv(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    return _to_csv(rows, columns)
