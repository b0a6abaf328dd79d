"""Group documents: lossless JSON serialization of Schottky descriptions.

Rationals travel as strings ("323/12") so no standards-conforming JSON
reader can damage them; matrices and intervals round-trip exactly.  Output
is deterministic: fixed key order, no timestamps.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .arith import format_rational, parse_rational
from .families import GeneratorId
from .hyperbolic import MobiusMatrix
from .schottky import Entry, SchottkyDescription

FORMAT_VERSION = 1


class DocumentError(Exception):
    """Rejected document; carries what failed and where."""

    def __init__(self, reason: str, witness=None, detail: str = ""):
        self.reason = reason
        self.witness = witness
        message = f"invalid group document ({reason})"
        if witness is not None:
            message += f" at {witness!r}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


def _id_to_json(gid: GeneratorId | None):
    if gid is None:
        return None
    return {
        "family": gid.family,
        "n": gid.n,
        "j": gid.j,
        "s": gid.s,
        "m": gid.m,
        "sign": gid.sign,
    }


def _id_from_json(obj) -> GeneratorId | None:
    if obj is None:
        return None
    try:
        return GeneratorId(
            obj["family"], obj["n"], obj.get("j"), obj.get("s"), obj.get("m"),
            obj.get("sign", 1),
        )
    except (TypeError, KeyError) as exc:
        raise DocumentError("bad-id-metadata", detail=str(exc)) from None


def _kind_to_json(kind: tuple | None):
    if kind is None:
        return "custom"
    family, level, depth = kind
    out = {"family": family, "level": level}
    if depth is not None:
        out["depth"] = depth
    return out


def _kind_from_json(obj) -> tuple | None:
    if obj == "custom" or obj is None:
        return None
    if not isinstance(obj, dict) or "family" not in obj or "level" not in obj:
        raise DocumentError("bad-kind", witness=obj)
    return (obj["family"], obj["level"], obj.get("depth"))


def save(desc: SchottkyDescription) -> str:
    """Serialize a description (entry order preserved) to JSON text."""
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": _kind_to_json(desc.kind),
        "entries": [
            {
                "index": e.index,
                "id": _id_to_json(e.meta),
                "matrix": [
                    format_rational(e.transform.a),
                    format_rational(e.transform.b),
                    format_rational(e.transform.c),
                    format_rational(e.transform.d),
                ],
                "interval": [
                    format_rational(e.interval[0]),
                    format_rational(e.interval[1]),
                ],
            }
            for e in desc.entries
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _parse_rational_field(text, witness) -> Fraction:
    if not isinstance(text, str):
        raise DocumentError(
            "rational-not-a-string", witness=witness, detail=repr(text)
        )
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError("bad-rational", witness=witness, detail=str(exc)) from None


def load(text: str) -> SchottkyDescription:
    """Parse and re-validate a document; any invariant failure rejects it.

    Checks, in order: JSON shape and format_version; per-entry field shape
    and rational syntax; positive determinant; interval orientation;
    symmetric index set; inverse matching across +-k; interval endpoints
    equal to the isometric circle's endpoints.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("json-syntax", detail=str(exc)) from None
    if not isinstance(doc, dict):
        raise DocumentError("not-an-object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise DocumentError("format-version", witness=doc.get("format_version"))
    kind = _kind_from_json(doc.get("kind"))
    raw_entries = doc.get("entries")
    if not isinstance(raw_entries, list) or not raw_entries:
        raise DocumentError("no-entries")

    entries: list[Entry] = []
    for pos, raw in enumerate(raw_entries):
        if not isinstance(raw, dict):
            raise DocumentError("entry-not-an-object", witness=pos)
        index = raw.get("index")
        if not isinstance(index, int) or index == 0:
            raise DocumentError("bad-index", witness=index)
        matrix = raw.get("matrix")
        if not isinstance(matrix, list) or len(matrix) != 4:
            raise DocumentError("bad-matrix-shape", witness=index)
        a, b, c, d = (_parse_rational_field(t, index) for t in matrix)
        if a * d - b * c <= 0:
            raise DocumentError(
                "determinant-not-positive", witness=index, detail=f"det={a * d - b * c}"
            )
        interval = raw.get("interval")
        if not isinstance(interval, list) or len(interval) != 2:
            raise DocumentError("bad-interval-shape", witness=index)
        lo, hi = (_parse_rational_field(t, index) for t in interval)
        if not lo < hi:
            raise DocumentError("interval-not-ordered", witness=index)
        entries.append(
            Entry(index, MobiusMatrix(a, b, c, d), (lo, hi), _id_from_json(raw.get("id")))
        )

    by_index = {}
    for e in entries:
        if e.index in by_index:
            raise DocumentError("duplicate-index", witness=e.index)
        by_index[e.index] = e
    for k, e in by_index.items():
        if -k not in by_index:
            raise DocumentError("index-set-not-symmetric", witness=k)
        if not by_index[-k].transform.proj_eq(e.transform.inverse()):
            raise DocumentError("inverse-mismatch", witness=k)
    for e in entries:
        try:
            circle = e.transform.isometric_circle()
        except ValueError as exc:
            raise DocumentError(
                "no-isometric-circle", witness=e.index, detail=str(exc)
            ) from None
        if (circle.left, circle.right) != e.interval:
            raise DocumentError("interval-circle-mismatch", witness=e.index)

    return SchottkyDescription(tuple(entries), kind=kind)
