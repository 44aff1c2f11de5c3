"""Matrix file formats.

JSON::

    {"rows": 2, "cols": 2, "data": [{"re": 1.0, "im": 2.0}, ...]}

with ``data`` in row-major order. Text: one row per line, entries separated
by whitespace, each entry a real literal, an imaginary literal (``2i``,
``-i``) or ``a+bi`` / ``a-bi``. Blank lines and ``#`` comments are skipped.

Both writers emit ``repr``-exact floats, so reading back what was written
reproduces every finite double bit for bit (signed zeros included).
"""

from __future__ import annotations

import json
import math
import re
from typing import Union

import numpy as np

from .errors import DimensionMismatch, NonFiniteEntry, ParseError
from .matrix import as_matrix

FORMATS = ("json", "text")

_UREAL = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"^[+-]?{_UREAL}$")
_IMAG_RE = re.compile(rf"^(?P<sign>[+-]?)(?P<mag>{_UREAL})?[ij]$")
_CPLX_RE = re.compile(rf"^(?P<re>[+-]?{_UREAL})(?P<sign>[+-])(?P<mag>{_UREAL})?[ij]$")


def parse_complex(token: str) -> complex:
    """Parse one text-format entry; raises ``ValueError`` on bad syntax."""
    if _REAL_RE.match(token):
        return complex(float(token), 0.0)
    m = _IMAG_RE.match(token)
    if m:
        mag = float(m.group("mag")) if m.group("mag") else 1.0
        return complex(0.0, -mag if m.group("sign") == "-" else mag)
    m = _CPLX_RE.match(token)
    if m:
        mag = float(m.group("mag")) if m.group("mag") else 1.0
        return complex(float(m.group("re")), -mag if m.group("sign") == "-" else mag)
    raise ValueError(f"not a complex literal: {token!r}")


def _parse_text(text: str) -> np.ndarray:
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        row = []
        for m in re.finditer(r"\S+", line):
            try:
                row.append(parse_complex(m.group()))
            except ValueError as exc:
                raise ParseError(str(exc), line=lineno, column=m.start() + 1) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DimensionMismatch(f"ragged rows: line {lineno} has {len(row)} entries, expected {width}")
        rows.append(row)
    if not rows:
        raise ParseError("no matrix rows found")
    return np.array(rows, dtype=np.complex128)


def _reject_constant(name):
    raise NonFiniteEntry(f"non-finite JSON number {name}")


def _parse_json(text: str) -> np.ndarray:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return matrix_from_json(doc)


def matrix_from_json(doc) -> np.ndarray:
    if not isinstance(doc, dict) or not {"rows", "cols", "data"} <= doc.keys():
        raise ParseError('JSON matrix must be an object with "rows", "cols" and "data"')
    rows, cols, data = doc["rows"], doc["cols"], doc["data"]
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise ParseError('"rows" and "cols" must be positive integers')
    if not isinstance(data, list):
        raise ParseError('"data" must be an array')
    if len(data) != rows * cols:
        raise DimensionMismatch(f"expected {rows * cols} entries for {rows}x{cols}, got {len(data)}")
    out = np.empty(rows * cols, dtype=np.complex128)
    for i, entry in enumerate(data):
        if not isinstance(entry, dict) or "re" not in entry:
            raise ParseError(f"entry {i} must be an object with \"re\" and optional \"im\"")
        re_, im = entry["re"], entry.get("im", 0.0)
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (re_, im)):
            raise ParseError(f"entry {i} has non-numeric parts")
        out[i] = complex(float(re_), float(im))
    return as_matrix(out.reshape(rows, cols))


def detect_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "text"


def parse_matrix(source: Union[bytes, str], fmt: str | None = None) -> np.ndarray:
    """Parse a matrix from *source*; ``fmt=None`` sniffs the format."""
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    fmt = fmt or detect_format(source)
    if fmt == "json":
        return _parse_json(source)
    if fmt == "text":
        return as_matrix(_parse_text(source))
    raise ValueError(f"unknown format {fmt!r}")


def matrix_to_json(a) -> dict:
    a = as_matrix(a)
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "data": [{"re": float(z.real), "im": float(z.imag)} for z in a.ravel()],
    }


def format_complex(z: complex) -> str:
    re_, im = float(z.real), float(z.imag)
    if im == 0.0 and not math.copysign(1.0, im) < 0:
        return repr(re_)
    sign = "-" if math.copysign(1.0, im) < 0 else "+"
    return f"{re_!r}{sign}{abs(im)!r}i"


def serialize_matrix(a, fmt: str = "json") -> str:
    a = as_matrix(a)
    if fmt == "json":
        return json.dumps(matrix_to_json(a))
    if fmt == "text":
        return "\n".join(" ".join(format_complex(z) for z in row) for row in a) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
