"""
Table Rendering

LEARNING: One payload, two views

What we're building:
- render_table(report): the JSON report flattened to aligned "key  value" lines
- Nested dicts become dotted keys; lists of dicts (check cases) become one
  block per entry
"""

from typing import Any, Dict, Iterator, List, Tuple


def _flatten(value: Any, prefix: str = "") -> Iterator[Tuple[str, str]]:
    if isinstance(value, dict):
        if not value:
            yield prefix, "{}"
        for key in sorted(value, key=str):
            yield from _flatten(value[key], f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for i, item in enumerate(value):
            yield from _flatten(item, f"{prefix}[{i}]")
    elif isinstance(value, list):
        yield prefix, "[" + ", ".join(str(v) for v in value) + "]"
    elif value is None:
        yield prefix, "-"
    else:
        yield prefix, str(value)


def render_table(report: Dict) -> str:
    """
    Aligned text view of a RunReport dict.

    Args:
        report: RunReport.to_dict() output

    Returns:
        Multi-line string, command first
    """
    rows: List[Tuple[str, str]] = [("command", report.get("command", ""))]
    for section in ("parameters", "outputs"):
        rows.extend(_flatten(report.get(section, {}), section))
    if "wall_time" in report:
        rows.append(("wall_time", f"{report['wall_time']} s"))
    width = max(len(key) for key, _ in rows)
    return "\n".join(f"{key.ljust(width)}  {value}" for key, value in rows)
