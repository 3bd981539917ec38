"""Text format for hypergraphs and JSON/TSV report serialization.

File layout::

    # comment
    n 6 k 3
    1 2 3
    3 4:- 5

The header gives the vertex count and the asserted uniformity (``0`` for
none). Every further line is one edge of 1-based vertex tokens, each with an
optional ``:+`` or ``:-`` sign suffix.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

import numpy as np

from .errors import InputError, ParseError
from .hypergraph import HypergraphLike, OrientedHypergraph, as_oriented, is_uniform

REPORT_DECIMALS = 12


def _parse_token(token: str, lineno: int) -> tuple[int, int]:
    name, _, suffix = token.partition(":")
    if suffix not in ("", "+", "-"):
        raise ParseError(f"bad sign suffix in {token!r}", lineno)
    try:
        vertex = int(name)
    except ValueError:
        raise ParseError(f"bad vertex token {token!r}", lineno) from None
    return vertex, -1 if suffix == "-" else 1


def parse_hypergraph(text: str) -> OrientedHypergraph:
    header = None
    edges = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 4 or tokens[0] != "n" or tokens[2] != "k":
                raise ParseError("expected header 'n <count> k <uniformity|0>'", lineno)
            try:
                header = int(tokens[1]), int(tokens[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if header[0] < 1 or header[1] < 0:
                raise ParseError("header counts out of range", lineno)
            continue
        edge = []
        for token in tokens:
            vertex, sign = _parse_token(token, lineno)
            if not 1 <= vertex <= header[0]:
                raise ParseError(f"vertex {vertex} outside 1..{header[0]}", lineno)
            edge.append((vertex - 1, sign))
        edges.append(edge)
        lines.append(lineno)
    if header is None:
        raise ParseError("missing header")
    n, k = header
    try:
        g = OrientedHypergraph.build(n, edges)
    except (InputError, ValueError) as exc:
        bad = _offending_line(exc, lines)
        raise ParseError(str(exc), bad) from exc
    if k:
        for j, size in enumerate(g.cardinalities):
            if size != k:
                raise ParseError(f"edge has {size} vertices, header asserts k={k}", lines[j])
    return g


def _offending_line(exc: Exception, lines: list[int]):
    text = str(exc)
    if text.startswith("edge "):
        try:
            return lines[int(text.split()[1].rstrip(":"))]
        except (ValueError, IndexError):
            pass
    return None


def read_hypergraph(path: Union[str, Path]) -> OrientedHypergraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_hypergraph(text)


def format_hypergraph(g: HypergraphLike, comment: str | None = None) -> str:
    g = as_oriented(g)
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"n {g.n} k {is_uniform(g) or 0}")
    for edge in g.edges:
        out.append(" ".join(f"{v + 1}" if s == 1 else f"{v + 1}:-" for v, s in edge))
    return "\n".join(out) + "\n"


def write_hypergraph(g: HypergraphLike, path: Union[str, Path], comment: str | None = None):
    Path(path).write_text(format_hypergraph(g, comment))


def _clean(value: Any) -> Any:
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, (np.floating, float)):
        x = round(float(value), REPORT_DECIMALS)
        if not math.isfinite(x):
            return None
        return 0.0 if x == 0 else x
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.ndarray):
        return [_clean(x) for x in value.tolist()]
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(x) for x in value]
    return value


def report_json(report: dict) -> str:
    return json.dumps(_clean(report), indent=2) + "\n"


def _flatten(prefix: str, value: Any, rows: list):
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), item, rows)
    elif isinstance(value, list) and value and all(isinstance(x, (dict, list)) for x in value):
        for i, item in enumerate(value):
            _flatten(f"{prefix}.{i}", item, rows)
    elif isinstance(value, list):
        rows.append((prefix, " ".join(json.dumps(x) for x in value)))
    else:
        rows.append((prefix, json.dumps(value)))


def report_tsv(report: dict) -> str:
    rows: list = []
    _flatten("", _clean(report), rows)
    return "key\tvalue\n" + "".join(f"{k}\t{v}\n" for k, v in rows)
