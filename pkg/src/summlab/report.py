"""Tabular experiment output with deterministic CSV/JSON serialization.

CSV is the canonical format: `#`-prefixed metadata lines, one header row,
comma separator, LF line endings, floats printed with 17 significant
digits so identical configs produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["Report", "format_value"]


def format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, complex):
        return f"{v.real:.17g}{v.imag:+.17g}j"
    return str(v)


@dataclass
class Report:
    columns: list
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def add_row(self, *values):
        if len(values) != len(self.columns):
            raise ValueError(f"expected {len(self.columns)} values, got {len(values)}")
        self.rows.append(tuple(values))

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]

    def to_csv(self) -> str:
        lines = [f"# {k}={format_value(v)}" for k, v in self.metadata.items()]
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(format_value(v) for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "metadata": {k: format_value(v) for k, v in self.metadata.items()},
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
        }
        return json.dumps(payload, indent=2) + "\n"

    def write(self, path: str, fmt: str = "csv"):
        text = self.to_csv() if fmt == "csv" else self.to_json()
        with open(path, "w", newline="") as fh:
            fh.write(text)
