"""Journal export parsing and canonical log records.

Input is an exported journal in JSON form: either one JSON object per line
or a single JSON array of objects. Each object carries the attributes below
(`priority` holds the severity); only `message` is required. Parsing is
per-record fault tolerant: malformed entries are collected with their line
number and the rest of the stream is still processed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from datetime import datetime
from enum import IntEnum
from hashlib import sha256
from pathlib import Path
from typing import Any, Iterable, Iterator, Sequence

from .errors import EmptyInput, MalformedEntry

# Canonical attribute order for serialization, rendering, and duplicate keys.
FIELD_ORDER = (
    "id",
    "hostname",
    "ip",
    "comm",
    "cmdline",
    "exe",
    "message",
    "selinux_context",
    "systemd_unit",
    "systemd_slice",
    "realtime_datetime",
)

_STRING_FIELDS = (
    "hostname",
    "ip",
    "comm",
    "cmdline",
    "exe",
    "message",
    "selinux_context",
    "systemd_unit",
    "systemd_slice",
)


class SeverityLevel(IntEnum):
    """Syslog severity scale; lower value means more severe."""

    EMERGENCY = 0
    ALERT = 1
    CRITICAL = 2
    ERROR = 3
    WARNING = 4
    NOTICE = 5
    INFO = 6
    DEBUG = 7

    @property
    def description(self) -> str:
        return self.name.capitalize()


@dataclass(frozen=True)
class LogRecord:
    """One normalized journal entry; optional fields are None when absent."""

    id: int | str | None = None
    hostname: str | None = None
    ip: str | None = None
    comm: str | None = None
    cmdline: str | None = None
    exe: str | None = None
    message: str = ""
    selinux_context: str | None = None
    systemd_unit: str | None = None
    systemd_slice: str | None = None
    realtime_datetime: datetime | None = None
    severity: SeverityLevel | None = None

    def __post_init__(self) -> None:
        if not self.message or not self.message.strip():
            raise ValueError("message must be non-empty")
        if self.severity is not None and not isinstance(self.severity, SeverityLevel):
            object.__setattr__(self, "severity", SeverityLevel(self.severity))

    @property
    def labeled(self) -> bool:
        return self.severity is not None

    def without_label(self) -> LogRecord:
        if self.severity is None:
            return self
        return replace(self, severity=None)


_RECORD_FIELD_NAMES = {f.name for f in fields(LogRecord)}


def coerce_severity(value: Any) -> SeverityLevel:
    """Normalize an exported priority value to a SeverityLevel.

    Accepts integers, floats with a zero fractional part (the export encodes
    e.g. 7 as 7.0), and strings of either. Anything else, including values
    outside 0..7, is rejected.
    """
    if isinstance(value, bool):
        raise ValueError(f"priority must be a number, got {value!r}")
    if isinstance(value, str):
        text = value.strip()
        try:
            value = int(text) if "." not in text else float(text)
        except ValueError:
            raise ValueError(f"priority {text!r} is not numeric") from None
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"priority {value!r} has a fractional part")
        value = int(value)
    if not isinstance(value, int):
        raise ValueError(f"priority must be a number, got {value!r}")
    if not 0 <= value <= 7:
        raise ValueError(f"priority {value} outside the syslog range 0..7")
    return SeverityLevel(value)


def _coerce_id(value: Any) -> int | str:
    if isinstance(value, bool):
        raise ValueError(f"id must be an integer or string, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if value.is_integer():
            return int(value)
        raise ValueError(f"id {value!r} has a fractional part")
    if isinstance(value, str):
        return value
    raise ValueError(f"id must be an integer or string, got {type(value).__name__}")


def _coerce_timestamp(value: Any) -> datetime:
    if not isinstance(value, str):
        raise ValueError(
            f"realtime_datetime must be a datetime string, got {type(value).__name__}"
        )
    try:
        return datetime.fromisoformat(value.strip())
    except ValueError:
        raise ValueError(f"unparseable realtime_datetime {value!r}") from None


def record_from_object(obj: Any) -> LogRecord:
    """Build a LogRecord from one exported JSON object.

    Raises ValueError with a human-readable reason on any malformed field.
    Unknown attributes are ignored; empty strings for optional fields are
    normalized to absent.
    """
    if not isinstance(obj, dict):
        raise ValueError(f"entry is not an object, got {type(obj).__name__}")

    values: dict[str, Any] = {}
    for name in _STRING_FIELDS:
        raw = obj.get(name)
        if raw is None or raw == "":
            continue
        if not isinstance(raw, str):
            raise ValueError(f"{name} must be a string, got {type(raw).__name__}")
        values[name] = raw

    message = values.get("message")
    if message is None or not message.strip():
        raise ValueError("missing or empty message")

    if obj.get("id") is not None:
        values["id"] = _coerce_id(obj["id"])
    if obj.get("realtime_datetime") not in (None, ""):
        values["realtime_datetime"] = _coerce_timestamp(obj["realtime_datetime"])
    if obj.get("priority") is not None:
        try:
            values["severity"] = coerce_severity(obj["priority"])
        except ValueError as exc:
            raise ValueError(str(exc)) from None

    return LogRecord(**values)


def record_to_object(record: LogRecord) -> dict[str, Any]:
    """Serialize a record to the canonical export object (integer priority)."""
    obj: dict[str, Any] = {}
    for name in FIELD_ORDER:
        value = getattr(record, name)
        if value is None:
            continue
        if isinstance(value, datetime):
            value = value.isoformat(sep=" ")
        obj[name] = value
    if record.severity is not None:
        obj["priority"] = int(record.severity)
    return obj


@dataclass
class ParseResult:
    """Parsed records plus the per-line errors encountered along the way."""

    records: list[LogRecord]
    errors: list[MalformedEntry]

    @property
    def ok(self) -> bool:
        return not self.errors


def _iter_objects(source: Any) -> Iterator[tuple[int, Any]]:
    """Yield (line_number, object) pairs from any accepted input shape."""
    if isinstance(source, (str, bytes)):
        text = source.decode("utf-8") if isinstance(source, bytes) else source
        stripped = text.lstrip()
        if stripped.startswith("["):
            for i, obj in enumerate(json.loads(text), start=1):
                yield i, obj
            return
        source = text.splitlines()
    elif isinstance(source, Path):
        source = source.read_text(encoding="utf-8").splitlines()
    elif hasattr(source, "read"):
        yield from _iter_objects(source.read())
        return

    if isinstance(source, Iterable):
        for i, item in enumerate(source, start=1):
            if isinstance(item, dict):
                yield i, item
                continue
            line = item.decode("utf-8") if isinstance(item, bytes) else str(item)
            if not line.strip():
                continue
            yield i, ("__json__", line)
        return
    raise TypeError(f"unsupported input type {type(source).__name__}")


def parse_journal_export(source: Any) -> ParseResult:
    """Parse an exported journal into normalized records.

    Accepts a path, file object, string/bytes blob, iterable of JSON lines,
    or an iterable of already-decoded objects. Malformed entries never abort
    the stream; they are returned alongside the good records. Raises
    EmptyInput when the input contains no entries at all.
    """
    records: list[LogRecord] = []
    errors: list[MalformedEntry] = []
    seen_any = False

    for line_no, item in _iter_objects(source):
        seen_any = True
        if isinstance(item, tuple) and len(item) == 2 and item[0] == "__json__":
            try:
                item = json.loads(item[1])
            except json.JSONDecodeError as exc:
                errors.append(MalformedEntry(line_no, f"invalid JSON: {exc.msg}"))
                continue
        try:
            records.append(record_from_object(item))
        except ValueError as exc:
            errors.append(MalformedEntry(line_no, str(exc)))

    if not seen_any:
        raise EmptyInput("journal export contains no entries")
    return ParseResult(records, errors)


def render_value(value: Any) -> str:
    """Render one field value for keys and document text.

    Integers stay bare; datetimes use their canonical string form; all other
    values are single-quoted with backslash escapes for embedded quotes.
    """
    if isinstance(value, (SeverityLevel, int)) and not isinstance(value, bool):
        return str(int(value))
    if isinstance(value, datetime):
        value = value.isoformat(sep=" ")
    text = str(value).replace("\\", "\\\\").replace("'", "\\'")
    return f"'{text}'"


def duplicate_key(record: LogRecord) -> str:
    """Canonical content key: every field except `id`, severity included."""
    parts = []
    for name in FIELD_ORDER[1:]:
        value = getattr(record, name)
        if value is not None:
            parts.append(f"'{name}': {render_value(value)}")
    if record.severity is not None:
        parts.append(f"'priority': {int(record.severity)}")
    return "{" + ", ".join(parts) + "}"


def dedup(records: Sequence[LogRecord]) -> tuple[list[LogRecord], int]:
    """Drop content duplicates, keeping the first occurrence in input order.

    Two records are duplicates when they agree on every field except `id`.
    Returns (kept, dropped_count).
    """
    seen: set[str] = set()
    kept: list[LogRecord] = []
    for record in records:
        key = duplicate_key(record)
        if key in seen:
            continue
        seen.add(key)
        kept.append(record)
    return kept, len(records) - len(kept)


def serialize_records(records: Iterable[LogRecord]) -> str:
    """One canonical JSON object per line, trailing newline included."""
    return "".join(
        json.dumps(record_to_object(r), ensure_ascii=False) + "\n" for r in records
    )


def write_records(records: Iterable[LogRecord], path: Path | str) -> None:
    Path(path).write_text(serialize_records(records), encoding="utf-8")


def read_records(path: Path | str) -> list[LogRecord]:
    """Read a canonical record file, raising on the first malformed entry."""
    result = parse_journal_export(Path(path))
    if result.errors:
        raise result.errors[0]
    return result.records


def records_content_hash(records: Iterable[LogRecord]) -> str:
    """SHA-256 over the canonical serialization; stable record-set identity."""
    digest = sha256()
    for record in records:
        line = json.dumps(record_to_object(record), ensure_ascii=False)
        digest.update(line.encode("utf-8"))
        digest.update(b"\n")
    return digest.hexdigest()


def assign_missing_ids(records: Sequence[LogRecord]) -> list[LogRecord]:
    """Fill absent ids with positional `row-<n>` ids (1-based)."""
    out = []
    for n, record in enumerate(records, start=1):
        out.append(record if record.id is not None else replace(record, id=f"row-{n}"))
    return out
