"""Tiny spec-string grammar for the CLI.

A spec is a kind token followed by key=value tokens and bare flags, e.g.

    "standard triple=2,5,29 p=2 q=5"
    "limit a=2 q=1 barycentric"
    "sequence a=5 n=3 side=c"
    "family a=1 q=1 b=2 c=5"
    "vertices 0,0;1/2,2;1/2,0"

Parsing is up front with position-annotated errors; computation starts only
after the whole spec validates.
"""

from __future__ import annotations

from .geometry import Triangle
from .exact import parse_scalar
from .markov import parse_triple
from .triangles import (
    LimitSpec,
    StandardPositionSpec,
    limit_triangle,
    open_problem_triangle,
    sequence_triangle,
    standard_triangle,
    to_barycentric,
)


class SpecError(ValueError):
    pass


_KINDS = ("standard", "sequence", "limit", "family", "vertices")
_FLAGS = ("barycentric",)
_KEYS = ("triple", "p", "a", "q", "n", "b", "c", "axis", "side")


def _parse_tokens(spec: str):
    tokens = spec.split()
    if not tokens:
        raise SpecError("empty spec")
    kind = tokens[0]
    if kind not in _KINDS:
        raise SpecError(f"token 1: unknown kind {kind!r}; expected one of {_KINDS}")
    kv = {}
    flags = set()
    for pos, token in enumerate(tokens[1:], start=2):
        if token in _FLAGS:
            flags.add(token)
            continue
        if "=" not in token:
            if kind == "vertices" and "vertex_list" not in kv:
                kv["vertex_list"] = token
                continue
            raise SpecError(f"token {pos}: expected key=value, got {token!r}")
        key, _, value = token.partition("=")
        if key not in _KEYS and not (kind == "vertices" and key == "vertices"):
            raise SpecError(f"token {pos}: unknown key {key!r}")
        if key in kv:
            raise SpecError(f"token {pos}: duplicate key {key!r}")
        kv[key] = value
    return kind, kv, flags


def _int(kv, key, pos_kind):
    try:
        return int(kv[key])
    except ValueError:
        raise SpecError(f"{pos_kind} spec: {key}={kv[key]!r} is not an integer")


def parse_triangle_spec(spec: str) -> Triangle:
    kind, kv, flags = _parse_tokens(spec)
    if kind == "standard":
        if "triple" not in kv:
            raise SpecError("standard spec requires triple=p1,p2,p3")
        triple = parse_triple(kv["triple"])
        index = 1
        if "p" in kv or "a" in kv:
            value = _int(kv, "p" if "p" in kv else "a", "standard")
            matches = [i for i in (1, 2, 3) if triple.entry(i) == value]
            if not matches:
                raise SpecError(f"standard spec: {value} is not an entry of {triple}")
            index = matches[0]
        q = _int(kv, "q", "standard") if "q" in kv else None
        axis = _int(kv, "axis", "standard") if "axis" in kv else None
        tri = standard_triangle(StandardPositionSpec(triple, index, q, axis))
        return to_barycentric(tri) if "barycentric" in flags else tri
    if kind in ("sequence", "limit"):
        if "a" not in kv:
            raise SpecError(f"{kind} spec requires a=<Markov number>")
        lspec = LimitSpec(
            a=_int(kv, "a", kind),
            q=_int(kv, "q", kind) if "q" in kv else None,
            side=kv.get("side", "c"),
            barycentric="barycentric" in flags,
        )
        if kind == "limit":
            return limit_triangle(lspec)
        if "n" not in kv:
            raise SpecError("sequence spec requires n=<step>")
        return sequence_triangle(lspec, _int(kv, "n", kind))
    if kind == "family":
        for key in ("a", "q", "b", "c"):
            if key not in kv:
                raise SpecError(f"family spec requires {key}=<integer>")
        return open_problem_triangle(
            _int(kv, "a", kind), _int(kv, "q", kind), _int(kv, "b", kind), _int(kv, "c", kind)
        )
    # kind == "vertices"
    raw = kv.get("vertices") or kv.get("vertex_list")
    if not raw:
        raise SpecError("vertices spec requires x1,y1;x2,y2;x3,y3")
    points = raw.split(";")
    if len(points) != 3:
        raise SpecError(f"vertices spec needs 3 points, got {len(points)}")
    verts = {}
    for label, point in enumerate(points, start=1):
        coords = point.split(",")
        if len(coords) != 2:
            raise SpecError(f"point {label}: expected x,y, got {point!r}")
        try:
            verts[label] = (parse_scalar(coords[0]), parse_scalar(coords[1]))
        except ValueError as exc:
            raise SpecError(f"point {label}: {exc}")
    return Triangle(verts)
