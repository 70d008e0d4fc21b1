# src/utils.py
import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from src.kontsevich.exactnum import format_rational
from src.kontsevich.exceptions import MbarUsageError

OUTPUT_FORMATS = ("text", "csv", "json")


def _plain(value: Any) -> Any:
    """Rationals print exactly as strings; everything else as is."""
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


def render_value(value: Any, fmt: str = "text", **context: Any) -> str:
    """Render a single result.

    Text output is the bare value so it can be piped; csv and json carry the
    query ``context`` next to it.
    """
    if fmt == "text":
        return str(_plain(value))
    if fmt == "json":
        return json.dumps({k: _plain(v) for k, v in {**context, "value": value}.items()}, indent=2)
    return render_records([{**context, "value": value}], fmt)


def render_records(records: Sequence[Dict[str, Any]], fmt: str = "text") -> str:
    """
    Render a list of flat records.

    Args:
        records: Rows with identical keys, in output order.
        fmt: One of ``text`` (tab separated, no header), ``csv`` (with header)
            or ``json`` (a list of objects).

    Returns:
        The rendered document without a trailing newline.
    """
    if fmt not in OUTPUT_FORMATS:
        raise MbarUsageError(f"Unknown output format {fmt!r}; expected one of {', '.join(OUTPUT_FORMATS)}")
    rows: List[Dict[str, Any]] = [{k: _plain(v) for k, v in record.items()} for record in records]

    if fmt == "json":
        return json.dumps(rows, indent=2)
    if fmt == "csv":
        if not rows:
            return ""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    return "\n".join("\t".join(str(v) for v in row.values()) for row in rows)
