"""Gentle-algebra validation, path basis, critical cycles, radical summands.

The validated algebra is purely combinatorial: a finite basis of
relation-free paths plus composition data.  Everything homological lives
in :mod:`gentlegp.reps`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .quiver import Path, PresentationError, QuiverPresentation


@dataclass(frozen=True)
class GentleViolation:
    axiom: str  # G1 | G2-admissible | G3 | G4 | infinite-dimensional
    witness: tuple

    def describe(self):
        return f"{self.axiom}: witness {self.witness}"


class NotGentleError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        msgs = "; ".join(v.describe() for v in self.violations)
        super().__init__(f"presentation is not gentle: {msgs}")


@dataclass(frozen=True)
class CriticalCycle:
    """Repetition-free cycle of arrows with every consecutive composition
    in the relation ideal; stored in canonical rotation (lexicographically
    least arrow first, traversal order)."""

    arrows: tuple[str, ...]

    @property
    def length(self):
        return len(self.arrows)

    @property
    def name(self):
        """Right-to-left reading of the cycle, as path-algebra products
        are conventionally written."""
        return "".join(reversed(self.arrows))

    @staticmethod
    def from_arrows(arrows):
        arrows = tuple(arrows)
        least = min(range(len(arrows)), key=lambda i: arrows[i])
        return CriticalCycle(arrows[least:] + arrows[:least])


def gentle_violations(p: QuiverPresentation) -> list[GentleViolation]:
    """All violations of the gentle axioms, each with a witness."""
    violations = []
    amap = p.arrow_map

    for v in p.vertices:
        n_out = len(p.arrows_out(v))
        n_in = len(p.arrows_in(v))
        if n_out > 2 or n_in > 2:
            violations.append(GentleViolation("G1", (v,)))

    # G3: per arrow, at most one forbidden continuation / predecessor
    for b in p.arrows:
        succ = [l for (l, e) in p.relations if e == b.name]
        pred = [e for (l, e) in p.relations if l == b.name]
        if len(succ) > 1 or len(pred) > 1:
            violations.append(GentleViolation("G3", (b.name,)))

    # G4: per arrow, at most one allowed continuation / predecessor
    for b in p.arrows:
        succ = [a.name for a in p.arrows_out(b.target)
                if (a.name, b.name) not in p.relations]
        pred = [a.name for a in p.arrows_in(b.source)
                if (b.name, a.name) not in p.relations]
        if len(succ) > 1 or len(pred) > 1:
            violations.append(GentleViolation("G4", (b.name,)))

    # admissibility / finite dimensionality: no relation-free cycle in the
    # allowed-composition graph (nodes = arrows)
    cycle = _find_cycle(p, forbidden=False)
    if cycle is not None:
        violations.append(GentleViolation("infinite-dimensional", tuple(cycle)))

    return violations


def _find_cycle(p, forbidden):
    """A cycle in the composition graph on arrows.

    forbidden=False: edges are allowed compositions (relation-free);
    forbidden=True: edges are compositions lying in the ideal.
    """
    succ = {}
    for a in p.arrows:
        nxt = []
        for b in p.arrows_out(a.target):
            in_ideal = (b.name, a.name) in p.relations
            if in_ideal == forbidden:
                nxt.append(b.name)
        succ[a.name] = nxt
    color = {name: 0 for name in succ}
    stack_path = []

    def dfs(u):
        color[u] = 1
        stack_path.append(u)
        for w in succ[u]:
            if color[w] == 1:
                i = stack_path.index(w)
                return stack_path[i:]
            if color[w] == 0:
                found = dfs(w)
                if found is not None:
                    return found
        stack_path.pop()
        color[u] = 2
        return None

    for name in succ:
        if color[name] == 0:
            found = dfs(name)
            if found is not None:
                return found
    return None


@dataclass(frozen=True)
class GentleAlgebra:
    presentation: QuiverPresentation
    path_basis: tuple[Path, ...]
    _basis_set: frozenset = field(repr=False)

    @staticmethod
    def from_presentation(p: QuiverPresentation) -> "GentleAlgebra":
        violations = gentle_violations(p)
        if violations:
            raise NotGentleError(violations)
        basis = _enumerate_basis_paths(p)
        return GentleAlgebra(p, tuple(basis),
                             frozenset(b.arrows for b in basis if b.arrows))

    @property
    def vertices(self):
        return self.presentation.vertices

    @property
    def arrows(self):
        return self.presentation.arrows

    @property
    def arrow_map(self):
        return self.presentation.arrow_map

    @property
    def relations(self):
        return self.presentation.relations

    def dimension(self):
        return len(self.path_basis)

    def basis_paths_from(self, v):
        return [p for p in self.path_basis if p.source == v]

    def basis_paths_to(self, v):
        return [p for p in self.path_basis if p.target == v]

    def left_multiply(self, arrow_name, path: Path):
        """Compose ``path`` then ``arrow``; None encodes zero in the algebra."""
        a = self.arrow_map[arrow_name]
        if a.source != path.target:
            return None
        if path.arrows and (arrow_name, path.arrows[-1]) in self.relations:
            return None
        return Path(path.arrows + (arrow_name,), path.source, a.target)

    def allowed_continuations(self, arrow_name):
        """Arrows b with 'first arrow_name then b' composable and not in I."""
        a = self.arrow_map[arrow_name]
        return [b.name for b in self.presentation.arrows_out(a.target)
                if (b.name, arrow_name) not in self.relations]


def validate_gentle(p: QuiverPresentation) -> GentleAlgebra:
    """Validate the gentle axioms; raises NotGentleError with all violations."""
    return GentleAlgebra.from_presentation(p)


def _enumerate_basis_paths(p: QuiverPresentation):
    """All relation-free paths, lazy paths included, by breadth-first
    extension.  Finite because validation rejected relation-free cycles."""
    amap = p.arrow_map
    basis = [p.lazy_path(v) for v in p.vertices]
    frontier = [Path((a.name,), a.source, a.target) for a in p.arrows]
    while frontier:
        basis.extend(frontier)
        nxt = []
        for path in frontier:
            last = path.arrows[-1]
            for a in p.arrows_out(path.target):
                if (a.name, last) not in p.relations:
                    nxt.append(Path(path.arrows + (a.name,),
                                    path.source, a.target))
        frontier = nxt
        if len(basis) > 100000:
            raise AssertionError(
                "path basis exploded; admissibility check failed")
    basis.sort(key=lambda q: (len(q.arrows), q.source, q.arrows))
    return basis


def algebra_dimension(a: GentleAlgebra) -> int:
    return a.dimension()


def critical_cycles(a: GentleAlgebra) -> list[CriticalCycle]:
    """The set C of repetition-free cycles whose consecutive compositions
    all lie in the ideal, canonically rotated and sorted.

    By (G3) the forbidden-composition graph is a partial permutation on
    arrows, so its cycles are disjoint and each arrow lies on at most one.
    """
    succ = {}
    for later, earlier in a.relations:
        succ[earlier] = later  # unique by G3
    cycles = []
    seen = set()
    for start in sorted(succ):
        if start in seen:
            continue
        chain = [start]
        pos = {start: 0}
        cur = start
        while cur in succ:
            cur = succ[cur]
            if cur in pos:
                arc = chain[pos[cur]:]
                cycles.append(CriticalCycle.from_arrows(arc))
                seen.update(arc)
                break
            if cur in seen:
                break
            pos[cur] = len(chain)
            chain.append(cur)
        seen.update(chain)
    cycles.sort(key=lambda c: c.arrows)
    return cycles


def cycle_of_arrow(a: GentleAlgebra, arrow_name: str):
    """The critical cycle containing the arrow, or None."""
    for c in critical_cycles(a):
        if arrow_name in c.arrows:
            return c
    return None


def radical_summand_word(a: GentleAlgebra, arrow_name: str):
    """Arrows of the maximal directed string carried by the left ideal
    generated by ``arrow_name``, in traversal order (the generating arrow
    itself excluded).  Empty tuple means the summand is simple."""
    if arrow_name not in a.arrow_map:
        raise PresentationError(f"unknown arrow {arrow_name!r}")
    word = []
    cur = arrow_name
    while True:
        cont = a.allowed_continuations(cur)
        if not cont:
            break
        # unique by G4
        cur = cont[0]
        word.append(cur)
    return tuple(word)


def radical_summand_vertices(a: GentleAlgebra, arrow_name: str):
    """Vertices visited by the radical-summand string, start first."""
    arr = a.arrow_map[arrow_name]
    verts = [arr.target]
    for name in radical_summand_word(a, arrow_name):
        verts.append(a.arrow_map[name].target)
    return verts
