"""Text and JSON formats.

The text layout is the usual Betti diagram: one column per homological
position, row label ``j - i``, ``-`` for zero, optional ``Tot:`` row with
column sums.  Lines holding only ``...`` mark elided all-zero rows.
"""
from __future__ import annotations

import json
import re
from dataclasses import asdict, is_dataclass
from typing import Sequence

from .betti import BettiTable, DiagonalReport, Profile
from .errors import ValidationError

__all__ = [
    "parse_betti_text",
    "render_betti_text",
    "format_hvector",
    "to_jsonable",
    "from_jsonable",
    "dumps",
    "loads",
    "read_input",
]

_ROW = re.compile(r"^\s*(\d+|Tot)\s*:\s*(.*)$")


def parse_betti_text(text: str, num_vars: int = 4) -> BettiTable:
    """Read a diagram in the row/column layout; a ``Tot:`` row is checked."""
    columns = None
    entries = {}
    totals = None
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or set(stripped) <= {"-"} or stripped == "...":
            continue
        if columns is None:
            try:
                columns = [int(tok) for tok in stripped.split()]
            except ValueError:
                raise ValidationError("header row of column indices", lineno) from None
            if columns != list(range(len(columns))):
                raise ValidationError("columns numbered 0, 1, 2, ...", columns)
            continue
        m = _ROW.match(line)
        if not m:
            raise ValidationError("malformed row", (lineno, line))
        label, body = m.groups()
        tokens = body.split()
        if len(tokens) != len(columns):
            raise ValidationError("row width", (lineno, len(tokens), len(columns)))
        values = []
        for tok in tokens:
            if tok == "-":
                values.append(0)
            elif tok.isdigit():
                values.append(int(tok))
            else:
                raise ValidationError("entry is '-' or a nonnegative integer", (lineno, tok))
        if label == "Tot":
            totals = values
            continue
        row = int(label)
        for i, v in enumerate(values):
            if v:
                if (i, row + i) in entries:
                    raise ValidationError("duplicate row", (lineno, row))
                entries[(i, row + i)] = v
    if columns is None:
        raise ValidationError("empty diagram")
    table = BettiTable(entries, num_vars)
    if totals is not None:
        sums = [sum(v for (i, _), v in entries.items() if i == c) for c in range(len(columns))]
        if sums != totals:
            raise ValidationError("Tot row matches column sums", (totals, sums))
    return table


def render_betti_text(t: BettiTable, width: int = 5) -> str:
    ncols = t.length + 1
    rows = [j - i for (i, j) in t.entries] or [0]
    lo, hi = 0, max(rows)
    label_w = max(len(str(hi)), 3) + 1
    head = " " * (label_w + 1) + "".join(f"{c:>{width}}" for c in range(ncols))
    rule = "-" * len(head)
    lines = [head, rule]
    for row in range(lo, hi + 1):
        cells = []
        for c in range(ncols):
            v = t[(c, row + c)]
            cells.append(f"{v if v else '-':>{width}}")
        lines.append(f"{str(row) + ':':>{label_w}} " + "".join(cells))
    lines.append(rule)
    lines.append(f"{'Tot:':>{label_w}} " + "".join(f"{v:>{width}}" for v in t.totals()))
    return "\n".join(lines) + "\n"


def format_hvector(h: Sequence[int]) -> str:
    return "[" + ", ".join(str(v) for v in h) + "]"


# --- JSON ---------------------------------------------------------------------

def to_jsonable(obj):
    """Plain JSON data for any domain value."""
    from .bdl import BdlSequence, BdlStep
    from .curves import CurveData, NumericalCharacter
    from .liaison import CanonicalSequence
    from .algorithms import AcmVerdict, HilbertBurchMatrix

    if isinstance(obj, BettiTable):
        return {"num_vars": obj.num_vars, "entries": [[i, j, m] for (i, j), m in obj.entries.items()]}
    if isinstance(obj, Profile):
        return {"s": list(obj.s), "r": list(obj.r)}
    if isinstance(obj, BdlSequence):
        return [list(st) for st in obj]
    if isinstance(obj, BdlStep):
        return list(obj)
    if isinstance(obj, DiagonalReport):
        return {"entries": [list(e) for e in obj.entries], "negatives": [list(e) for e in obj.negatives]}
    if isinstance(obj, NumericalCharacter):
        return list(obj.values)
    if isinstance(obj, CanonicalSequence):
        return {"a": obj.a, "b": obj.b, "gs": list(obj.gs), "shift": obj.shift}
    if isinstance(obj, HilbertBurchMatrix):
        return {"diagonal": list(obj.diagonal), "superdiagonal": list(obj.superdiagonal)}
    if isinstance(obj, AcmVerdict):
        out = obj.criteria()
        out["numerically_acm"] = obj.numerically_acm
        out["witness"] = to_jsonable(obj.witness) if obj.witness else None
        return out
    if isinstance(obj, CurveData):
        out = asdict(obj)
        out["hvector"] = list(obj.hvector)
        out["hyperplane_hvector"] = list(obj.hyperplane_hvector)
        return out
    if isinstance(obj, tuple) and hasattr(obj, "_asdict"):
        return {k: to_jsonable(v) for k, v in obj._asdict().items()}
    if is_dataclass(obj):
        return {k: to_jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def from_jsonable(kind: str, data):
    """Inverse of ``to_jsonable`` for the named domain type."""
    from .bdl import BdlSequence
    from .curves import CurveData, NumericalCharacter
    from .liaison import CanonicalSequence
    from .algorithms import AcmVerdict, HilbertBurchMatrix
    from .hilbert import hvector

    try:
        if kind == "table":
            return BettiTable({(i, j): m for i, j, m in data["entries"]}, data.get("num_vars", 4))
        if kind == "profile":
            return Profile(data["s"], data["r"])
        if kind == "hvector":
            return hvector(data)
        if kind == "sequence":
            return BdlSequence(data)
        if kind == "diagonal":
            return DiagonalReport(tuple(map(tuple, data["entries"])), tuple(map(tuple, data["negatives"])))
        if kind == "character":
            return NumericalCharacter(data)
        if kind == "canonical":
            return CanonicalSequence(data["a"], data["b"], tuple(data["gs"]))
        if kind == "witness":
            return HilbertBurchMatrix(tuple(data["diagonal"]), tuple(data["superdiagonal"]))
        if kind == "verdict":
            w = data.get("witness")
            return AcmVerdict(data["o_sequence"], data["counting"], data["diagonal"],
                              from_jsonable("witness", w) if w else None)
        if kind == "curve":
            fields = dict(data)
            fields["hvector"] = tuple(fields["hvector"])
            fields["hyperplane_hvector"] = tuple(fields["hyperplane_hvector"])
            return CurveData(**fields)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"malformed {kind} JSON", str(exc)) from exc
    raise ValueError(f"unknown kind {kind!r}")


def dumps(obj, **kw) -> str:
    return json.dumps(to_jsonable(obj), **kw)


def loads(text: str, kind: str):
    return from_jsonable(kind, json.loads(text))


def read_input(text: str, num_vars: int = 4):
    """Sniff an input document: JSON table, JSON h-vector, or a text diagram.

    Returns ``("table", BettiTable)`` or ``("hvector", tuple)``.
    """
    stripped = text.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValidationError("valid JSON", str(exc)) from exc
        if isinstance(data, dict):
            return "table", from_jsonable("table", data)
        if isinstance(data, list) and all(isinstance(v, int) for v in data):
            return "hvector", from_jsonable("hvector", data)
        raise ValidationError("JSON table object or integer array", type(data).__name__)
    return "table", parse_betti_text(text, num_vars)
