"""Words over {arrow, inverse arrow}; string and band modules.

A word is read left to right: letter i connects walk vertex v_{i-1} to
v_i, forwards for a direct letter and backwards for an inverse one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gentle import GentleAlgebra
from .linalg import Matrix, QQ
from .quiver import PresentationError
from .reps import Representation


@dataclass(frozen=True)
class Letter:
    arrow: str
    direct: bool

    def inverse(self):
        return Letter(self.arrow, not self.direct)

    def __str__(self):
        return self.arrow if self.direct else f"{self.arrow}^-1"


def parse_letters(text: str):
    """CLI word syntax: comma-separated, `a` direct, `a^-1` inverse."""
    letters = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError("empty letter in word")
        if tok.endswith("^-1"):
            letters.append(Letter(tok[:-3].strip(), False))
        else:
            letters.append(Letter(tok, True))
    return tuple(letters)


@dataclass(frozen=True)
class StringWord:
    """A valid string: letters plus the visited walk vertices.

    len(vertices) == len(letters) + 1; a lazy word has no letters and one
    vertex.
    """

    letters: tuple[Letter, ...]
    vertices: tuple[str, ...]

    def __len__(self):
        return len(self.letters)

    @property
    def is_lazy(self):
        return not self.letters

    def inverse(self):
        return StringWord(tuple(l.inverse() for l in reversed(self.letters)),
                          tuple(reversed(self.vertices)))

    def sort_key(self):
        return tuple((l.arrow, not l.direct) for l in self.letters)

    def canonical(self):
        """The lexicographically smaller of the word and its inverse."""
        inv = self.inverse()
        return self if self.sort_key() <= inv.sort_key() else inv

    def display(self):
        if self.is_lazy:
            return f"e_{self.vertices[0]}"
        return ",".join(str(l) for l in self.letters)


def lazy_word(a: GentleAlgebra, vertex: str) -> StringWord:
    if vertex not in a.vertices:
        raise PresentationError(f"unknown vertex {vertex!r}")
    return StringWord((), (vertex,))


def _letter_endpoints(a: GentleAlgebra, letter: Letter):
    arr = a.arrow_map.get(letter.arrow)
    if arr is None:
        raise PresentationError(f"unknown arrow {letter.arrow!r}")
    return (arr.source, arr.target) if letter.direct else (arr.target, arr.source)


def check_string(a: GentleAlgebra, letters) -> tuple[bool, str | None]:
    """Validity of a letter sequence, with the first failure reason."""
    letters = tuple(letters)
    if not letters:
        return True, None
    prev_end = None
    for i, l in enumerate(letters):
        start, end = _letter_endpoints(a, l)
        if prev_end is not None and start != prev_end:
            return False, f"letters {i} and {i+1} do not form a walk"
        prev_end = end
        if i == 0:
            continue
        p = letters[i - 1]
        if p.arrow == l.arrow and p.direct != l.direct:
            return False, f"letter {i+1} immediately undoes letter {i}"
        if p.direct and l.direct:
            if (l.arrow, p.arrow) in a.relations:
                return False, (f"direct letters {p.arrow},{l.arrow} "
                               f"form a relation")
        elif not p.direct and not l.direct:
            if (p.arrow, l.arrow) in a.relations:
                return False, (f"inverse letters {p.arrow}^-1,{l.arrow}^-1 "
                               f"reverse a relation")
        elif p.direct and not l.direct:
            if p.arrow == l.arrow:
                return False, f"letter {i+1} immediately undoes letter {i}"
        else:
            if p.arrow == l.arrow:
                return False, f"letter {i+1} immediately undoes letter {i}"
    return True, None


def is_valid_string(a: GentleAlgebra, letters) -> bool:
    return check_string(a, letters)[0]


def make_string(a: GentleAlgebra, letters) -> StringWord:
    ok, reason = check_string(a, letters)
    if not ok:
        raise ValueError(f"invalid string word: {reason}")
    letters = tuple(letters)
    if not letters:
        raise ValueError("use lazy_word for empty words")
    verts = [_letter_endpoints(a, letters[0])[0]]
    for l in letters:
        verts.append(_letter_endpoints(a, l)[1])
    return StringWord(letters, tuple(verts))


def directed_word(a: GentleAlgebra, start_vertex, arrow_names) -> StringWord:
    names = tuple(arrow_names)
    if not names:
        return lazy_word(a, start_vertex)
    return make_string(a, [Letter(n, True) for n in names])


def contains_peak(w: StringWord) -> bool:
    """True iff two distinct arrows of the walk point into a common
    vertex: a direct letter immediately followed by an inverse one."""
    for p, l in zip(w.letters, w.letters[1:]):
        if p.direct and not l.direct:
            return True
    return False


def string_module(a: GentleAlgebra, w: StringWord, field=QQ) -> Representation:
    """The representation with one basis vector per walk vertex."""
    n = len(w.vertices)
    dims = {v: 0 for v in a.vertices}
    index = []  # (vertex, slot within that vertex)
    for v in w.vertices:
        index.append((v, dims[v]))
        dims[v] += 1
    mats = {arr.name: Matrix.zeros(field, dims[arr.target], dims[arr.source])
            for arr in a.arrows}
    for i, l in enumerate(w.letters):
        if l.direct:
            src, dst = index[i], index[i + 1]
        else:
            src, dst = index[i + 1], index[i]
        mats[l.arrow].rows[dst[1]][src[1]] = field.one
    return Representation(a, field, dims, mats)


@dataclass(frozen=True)
class BandWord:
    """A cyclic word: letter i connects vertex i-1 to vertex i, indices
    mod the length; every rotation is a valid string, both letter
    directions occur, and the word is not a proper power."""

    letters: tuple[Letter, ...]
    vertices: tuple[str, ...]  # one per letter; vertex i = end of letter i


def make_band(a: GentleAlgebra, letters) -> BandWord:
    letters = tuple(letters)
    if len(letters) < 2:
        raise ValueError("a band needs at least two letters")
    if all(l.direct for l in letters) or not any(l.direct for l in letters):
        raise ValueError("a band must mix direct and inverse letters")
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and letters[d:] + letters[:d] == letters:
            raise ValueError("a band must not be a proper power")
    for r in range(n):
        rot = letters[r:] + letters[:r]
        ok, reason = check_string(a, rot)
        if not ok:
            raise ValueError(f"rotation {r} is not a string: {reason}")
        # cyclic closure: last letter must compose with the first
        ok, reason = check_string(a, (rot[-1], rot[0]))
        if not ok:
            raise ValueError(f"cyclic closure fails: {reason}")
    start = _letter_endpoints(a, letters[0])[0]
    verts = []
    for l in letters:
        verts.append(_letter_endpoints(a, l)[1])
    if verts[-1] != start:
        raise ValueError("band walk does not close up")
    return BandWord(letters, tuple(verts))


def band_module(a: GentleAlgebra, b: BandWord, lam, size: int,
                field=QQ) -> Representation:
    """Band representation: every letter acts by the identity between
    adjacent blocks except a designated direct letter, which acts by the
    size x size Jordan block with eigenvalue lam.

    The designated letter is the lexicographically least direct letter of
    the word (ties broken by position)."""
    lam = field.of(lam)
    if lam == field.zero:
        raise ValueError("band parameter must be nonzero")
    if size < 1:
        raise ValueError("band size must be positive")
    n = len(b.letters)
    special = min((i for i in range(n) if b.letters[i].direct),
                  key=lambda i: b.letters[i].arrow)

    dims = {v: 0 for v in a.vertices}
    block_base = []  # base offset of block i inside its vertex
    for i in range(n):
        v = b.vertices[i]
        block_base.append(dims[v] * size)
        dims[v] += 1
    dims = {v: d * size for v, d in dims.items()}

    jordan = Matrix.zeros(field, size, size)
    for i in range(size):
        jordan.rows[i][i] = lam
        if i + 1 < size:
            jordan.rows[i][i + 1] = field.one

    mats = {arr.name: Matrix.zeros(field, dims[arr.target], dims[arr.source])
            for arr in a.arrows}
    for i, l in enumerate(b.letters):
        prev_block = (i - 1) % n
        if l.direct:
            src_block, dst_block = prev_block, i
        else:
            src_block, dst_block = i, prev_block
        block = jordan if i == special else Matrix.identity(field, size)
        m = mats[l.arrow]
        r0 = block_base[dst_block]
        c0 = block_base[src_block]
        for r in range(size):
            for c in range(size):
                m.rows[r0 + r][c0 + c] = field.add(
                    m.rows[r0 + r][c0 + c], block.rows[r][c])
    return Representation(a, field, dims, mats)


def enumerate_strings(a: GentleAlgebra, max_letters: int):
    """All valid string words with at most max_letters letters, one
    representative per {w, w^-1} pair, lazy words included."""
    out = [lazy_word(a, v) for v in a.vertices]
    frontier = []
    for arr in a.arrows:
        w = StringWord((Letter(arr.name, True),), (arr.source, arr.target))
        frontier.append(w)
        wi = StringWord((Letter(arr.name, False),), (arr.target, arr.source))
        frontier.append(wi)
    for length in range(1, max_letters + 1):
        out.extend(frontier)
        if length == max_letters:
            break
        nxt = []
        for w in frontier:
            end = w.vertices[-1]
            last = w.letters[-1]
            for arr in a.arrows:
                for direct in (True, False):
                    start = arr.source if direct else arr.target
                    if start != end:
                        continue
                    cand = Letter(arr.name, direct)
                    ok, _ = check_string(a, (last, cand))
                    if not ok:
                        continue
                    nxt.append(StringWord(
                        w.letters + (cand,),
                        w.vertices + (arr.target if direct else arr.source,)))
        frontier = nxt
    # dedupe words equal to their own canonical form may still collide
    seen = set()
    unique = []
    for w in out:
        c = w.canonical()
        key = (c.sort_key(), c.vertices)
        if key not in seen:
            seen.add(key)
            unique.append(c)
    unique.sort(key=lambda w: (len(w.letters), w.sort_key(), w.vertices))
    return unique
