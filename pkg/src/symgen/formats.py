"""Input and output formats: Hodge diamond files and series serialization.

Hodge diamond files are plain text::

    # comment lines and trailing comments are allowed
    dim 1
    theory hodge        # optional; "hodge" (default) or "b-side"
    1 0
    0 1

Row p of the matrix holds h^{p,0} ... h^{p,d} (read as h^{-p,q} under the
b-side tag).

Series serialize three ways: pretty text (one ``q^k: ...`` line per power),
a canonical JSON object with exact "num/den" coefficient strings, and CSV
with one row per (q-power, u-exponent) term.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import QSeries, YPolynomial
from .errors import HodgeParseError
from .hodge import THEORY_BSIDE, THEORY_HODGE, HodgeDiamond

_TOKEN = re.compile(r"\S+")


def _tokens(line):
    """Non-whitespace tokens of a line with their 1-based start columns."""
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def parse_hodge_text(text: str, source: str = "<string>") -> HodgeDiamond:
    """Parse the Hodge diamond file format, reporting line/column on errors."""
    rows = []
    dim = None
    theory = THEORY_HODGE
    expect = "dim"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        if expect == "dim":
            if toks[0][0] != "dim":
                raise HodgeParseError(f"expected 'dim <d>', found {toks[0][0]!r}", lineno, toks[0][1])
            if len(toks) != 2 or not toks[1][0].lstrip("-").isdigit():
                column = toks[1][1] if len(toks) > 1 else toks[0][1]
                raise HodgeParseError("'dim' needs a single integer argument", lineno, column)
            dim = int(toks[1][0])
            if dim < 0:
                raise HodgeParseError(f"dimension must be >= 0, got {dim}", lineno, toks[1][1])
            expect = "theory-or-row"
            continue
        if expect == "theory-or-row" and toks[0][0] == "theory":
            if len(toks) != 2 or toks[1][0] not in (THEORY_HODGE, THEORY_BSIDE):
                column = toks[1][1] if len(toks) > 1 else toks[0][1]
                raise HodgeParseError(
                    f"'theory' must be {THEORY_HODGE!r} or {THEORY_BSIDE!r}", lineno, column
                )
            theory = toks[1][0]
            expect = "row"
            continue
        expect = "row"
        if len(rows) == dim + 1:
            raise HodgeParseError(
                f"matrix already has {dim + 1} rows; unexpected extra content", lineno, toks[0][1]
            )
        if len(toks) != dim + 1:
            raise HodgeParseError(
                f"row {len(rows)} needs {dim + 1} entries, found {len(toks)}", lineno, toks[0][1]
            )
        row = []
        for tok, column in toks:
            if not tok.lstrip("-").isdigit():
                raise HodgeParseError(f"entry {tok!r} is not an integer", lineno, column)
            value = int(tok)
            if value < 0:
                raise HodgeParseError(f"entry {value} is negative", lineno, column)
            row.append(value)
        rows.append(tuple(row))
    if dim is None:
        raise HodgeParseError(f"{source} has no 'dim' line")
    if len(rows) != dim + 1:
        raise HodgeParseError(f"{source} has {len(rows)} matrix rows, expected {dim + 1}")
    return HodgeDiamond(dim, tuple(rows), theory=theory)


def load_hodge_file(path) -> HodgeDiamond:
    with open(path, encoding="utf-8") as handle:
        return parse_hodge_text(handle.read(), source=str(path))


# -- series output -----------------------------------------------------------


def series_text_lines(series: QSeries) -> list[str]:
    return [f"q^{k}: {c}" for k, c in enumerate(series.coeffs)]


def series_to_json_obj(series: QSeries) -> dict:
    return {
        "variable": "q",
        "trunc": series.trunc,
        "coefficients": [
            [[a, f"{c.numerator}/{c.denominator}"] for a, c in poly.pairs()]
            for poly in series.coeffs
        ],
    }


def series_json(series: QSeries) -> str:
    return json.dumps(series_to_json_obj(series))


def series_from_json_obj(obj) -> QSeries:
    if obj.get("variable") != "q":
        raise ValueError(f"expected a q-series, got variable {obj.get('variable')!r}")
    trunc = int(obj["trunc"])
    coeffs = []
    for pairs in obj["coefficients"]:
        coeffs.append(YPolynomial({int(a): Fraction(text) for a, text in pairs}))
    return QSeries(coeffs, trunc)


def series_from_json(text: str) -> QSeries:
    return series_from_json_obj(json.loads(text))


def series_csv_lines(series: QSeries) -> list[str]:
    lines = ["q_power,u_exp,numerator,denominator"]
    for k, poly in enumerate(series.coeffs):
        for a, c in poly.pairs():
            lines.append(f"{k},{a},{c.numerator},{c.denominator}")
    return lines


def render_series(series: QSeries, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(series_text_lines(series))
    if fmt == "json":
        return series_json(series)
    if fmt == "csv":
        return "\n".join(series_csv_lines(series))
    raise ValueError(f"unknown format {fmt!r}")
