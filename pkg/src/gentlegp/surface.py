"""Combinatorial triangulations of unpunctured marked surfaces and the
gentle algebras they generate."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gentle import GentleAlgebra, validate_gentle
from .gp import singularity_descriptor
from .quiver import Arrow, QuiverPresentation


class TriangulationError(ValueError):
    pass


@dataclass(frozen=True)
class Triangulation:
    internal_arcs: tuple[str, ...]
    boundary_arcs: tuple[str, ...]
    triangles: tuple[tuple[str, str, str], ...]  # sides in cyclic orientation

    def is_internal(self, arc):
        return arc in self.internal_arcs


def _validate(internal, boundary, triangles):
    arcs = set(internal) | set(boundary)
    if len(arcs) != len(internal) + len(boundary):
        raise TriangulationError("an arc id appears in both arc lists")
    counts = {a: 0 for a in arcs}
    for tri in triangles:
        if len(set(tri)) != 3:
            raise TriangulationError(
                f"self-folded triangle {tri}: sides must be distinct")
        for side in tri:
            if side not in counts:
                raise TriangulationError(f"unknown arc {side!r} in {tri}")
            counts[side] += 1
    for arc in internal:
        if counts[arc] != 2:
            raise TriangulationError(
                f"internal arc {arc!r} lies in {counts[arc]} triangles, "
                "expected 2")
    for arc in boundary:
        if counts[arc] != 1:
            raise TriangulationError(
                f"boundary segment {arc!r} lies in {counts[arc]} triangles, "
                "expected 1")


def make_triangulation(internal, boundary, triangles) -> Triangulation:
    internal = tuple(internal)
    boundary = tuple(boundary)
    triangles = tuple(tuple(t) for t in triangles)
    _validate(internal, boundary, triangles)
    return Triangulation(internal, boundary, triangles)


_SECTION = re.compile(
    r"arcs\s*:(?P<arcs>.*?);?\s*boundary\s*:(?P<boundary>.*?);?\s*"
    r"triangles\s*:(?P<triangles>.*)", re.S)
_TRIANGLE = re.compile(r"\(\s*([^(),]+?)\s*,\s*([^(),]+?)\s*,\s*([^(),]+?)\s*\)")


def parse_triangulation(text: str) -> Triangulation:
    """Format: ``arcs: x, y; boundary: b1, b2; triangles: (s1,s2,s3); ...``
    with sides listed in cyclic orientation order; ``#`` comments."""
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    m = _SECTION.search(body)
    if not m:
        raise TriangulationError(
            "expected sections 'arcs:', 'boundary:', 'triangles:'")
    internal = [s.strip() for s in m.group("arcs").split(",") if s.strip()]
    boundary = [s.strip() for s in m.group("boundary").split(",") if s.strip()]
    tri_text = m.group("triangles")
    triangles = [tuple(g.strip() for g in t) for t in _TRIANGLE.findall(tri_text)]
    leftover = _TRIANGLE.sub("", tri_text).replace(";", "").replace(",", "").strip()
    if leftover:
        raise TriangulationError(f"unparsed triangle text: {leftover!r}")
    return make_triangulation(internal, boundary, triangles)


def serialize_triangulation(t: Triangulation) -> str:
    tris = "; ".join(f"({a},{b},{c})" for a, b, c in t.triangles)
    return (f"arcs: {', '.join(t.internal_arcs)};\n"
            f"boundary: {', '.join(t.boundary_arcs)};\n"
            f"triangles: {tris}\n")


@dataclass(frozen=True)
class InnerTriangleReport:
    count: int
    triangles: tuple


def inner_triangles(t: Triangulation) -> InnerTriangleReport:
    """Triangles all of whose sides are internal arcs."""
    inner = tuple(tri for tri in t.triangles
                  if all(t.is_internal(s) for s in tri))
    return InnerTriangleReport(len(inner), inner)


def algebra_presentation(t: Triangulation) -> QuiverPresentation:
    """Vertices are internal arcs; each triangle contributes an arrow
    between cyclically adjacent internal sides, and its compositions of
    same-triangle arrows are the relations."""
    arrows = []
    relations = set()
    for tri in t.triangles:
        tri_arrows = []  # (name, src, dst) within this triangle
        for i in range(3):
            s, d = tri[i], tri[(i + 1) % 3]
            if t.is_internal(s) and t.is_internal(d):
                name = f"{s}_{d}"
                arrows.append(Arrow(name, s, d))
                tri_arrows.append((name, s, d))
        # compositions of consecutive arrows from the same triangle vanish
        for n1, s1, d1 in tri_arrows:
            for n2, s2, d2 in tri_arrows:
                if n1 != n2 and d1 == s2:
                    relations.add((n2, n1))  # first n1 then n2 is zero
    return QuiverPresentation(tuple(t.internal_arcs), tuple(arrows),
                              frozenset(relations))


def algebra_from_triangulation(t: Triangulation) -> GentleAlgebra:
    return validate_gentle(algebra_presentation(t))


@dataclass(frozen=True)
class InnerCountReport:
    holds: bool
    inner_count: int
    descriptor: tuple[int, ...]


def verify_inner_triangle_count(t: Triangulation) -> InnerCountReport:
    """The number of singularity-category factors must equal the number
    of inner triangles, every factor of length three."""
    a = algebra_from_triangulation(t)
    desc = singularity_descriptor(a).cycle_lengths
    report = inner_triangles(t)
    holds = len(desc) == report.count and all(l == 3 for l in desc)
    return InnerCountReport(holds, report.count, desc)
