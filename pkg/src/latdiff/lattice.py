"""Bounded finite lattices stored as dense meet/join tables.

Elements are the integers ``0..n-1``.  A :class:`Lattice` carries the full
``n x n`` meet and join tables so every lookup in the enumeration kernel is a
pair of tuple indexings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence


class LatticeError(ValueError):
    """Base class for invalid lattice input."""


class InvalidSizeError(LatticeError):
    pass


class CycleError(LatticeError):
    pass


class NoBottomError(LatticeError):
    pass


class NoTopError(LatticeError):
    pass


class NotALatticeError(LatticeError):
    """A pair of elements lacks a unique meet or join."""

    def __init__(self, pair, op, message=None):
        self.pair = tuple(pair)
        self.op = op
        super().__init__(message or f"elements {pair[0]} and {pair[1]} have no unique {op}")


class AxiomError(LatticeError):
    pass


Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PosetSpec:
    size: int
    covers: tuple[tuple[int, int], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 1:
            raise InvalidSizeError(f"poset size must be positive, got {self.size}")
        object.__setattr__(self, "covers", tuple((int(a), int(b)) for a, b in self.covers))
        for a, b in self.covers:
            if not (0 <= a < self.size and 0 <= b < self.size):
                raise LatticeError(f"cover ({a}, {b}) out of range for size {self.size}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.size:
                raise LatticeError("label count does not match size")


@dataclass(frozen=True)
class Lattice:
    """An immutable bounded finite lattice.

    Construction validates every lattice axiom exhaustively; this is O(n^3)
    and negligible at the sizes the engine is meant for.
    """

    size: int
    meet: Table
    join: Table
    bottom: int
    top: int
    labels: tuple[str, ...] = field(default=(), compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.size < 1:
            raise InvalidSizeError(f"lattice size must be positive, got {self.size}")
        object.__setattr__(self, "meet", tuple(tuple(int(v) for v in row) for row in self.meet))
        object.__setattr__(self, "join", tuple(tuple(int(v) for v in row) for row in self.join))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.size)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        problems = axiom_violations(self)
        if problems:
            raise AxiomError(problems[0])

    def __repr__(self):
        return f"Lattice({self.name or 'anonymous'}, n={self.size})"

    @property
    def elements(self) -> range:
        return range(self.size)

    def leq(self, x: int, y: int) -> bool:
        return leq(self, x, y)

    def label(self, x: int) -> str:
        return self.labels[x]


def axiom_violations(l: Lattice) -> list[str]:
    """Return human-readable descriptions of every failed axiom family.

    Only the first failure of each family is reported.
    """
    n, m, j = l.size, l.meet, l.join
    out = []
    if len(m) != n or len(j) != n or any(len(r) != n for r in m) or any(len(r) != n for r in j):
        return [f"tables must be {n}x{n}"]
    if any(not 0 <= v < n for row in m + j for v in row):
        return ["table entry out of range"]
    if not (0 <= l.bottom < n and 0 <= l.top < n):
        return ["bottom/top out of range"]

    def first(pred, items, msg):
        for it in items:
            if not pred(*it):
                out.append(msg.format(*it))
                return

    pairs = list(product(range(n), repeat=2))
    triples = list(product(range(n), repeat=3))
    first(lambda x: m[x][x] == x and j[x][x] == x, ((x,) for x in range(n)), "idempotency fails at {}")
    first(lambda x, y: m[x][y] == m[y][x], pairs, "meet not commutative at ({}, {})")
    first(lambda x, y: j[x][y] == j[y][x], pairs, "join not commutative at ({}, {})")
    first(lambda x, y, z: m[m[x][y]][z] == m[x][m[y][z]], triples, "meet not associative at ({}, {}, {})")
    first(lambda x, y, z: j[j[x][y]][z] == j[x][j[y][z]], triples, "join not associative at ({}, {}, {})")
    first(lambda x, y: m[x][j[x][y]] == x and j[x][m[x][y]] == x, pairs, "absorption fails at ({}, {})")
    first(lambda x: m[l.bottom][x] == l.bottom, ((x,) for x in range(n)), "bottom is not below {}")
    first(lambda x: j[l.top][x] == l.top, ((x,) for x in range(n)), "top is not above {}")
    return out


def leq(l: Lattice, x: int, y: int) -> bool:
    """Order induced by meet: ``x <= y`` iff ``x ^ y == x``."""
    if not (0 <= x < l.size and 0 <= y < l.size):
        raise IndexError(f"element out of range for lattice of size {l.size}: ({x}, {y})")
    return l.meet[x][y] == x


def order_matrix(l: Lattice) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(l.meet[x][y] == x for y in range(l.size)) for x in range(l.size))


def is_distributive(l: Lattice) -> bool:
    m, j, r = l.meet, l.join, range(l.size)
    return all(m[x][j[y][z]] == j[m[x][y]][m[x][z]] for x in r for y in r for z in r)


def is_chain(l: Lattice) -> bool:
    m = l.meet
    return all(m[x][y] in (x, y) for x in range(l.size) for y in range(x + 1, l.size))


def atoms(l: Lattice) -> list[int]:
    return [x for x in range(l.size) if x != l.bottom and _covers(l, l.bottom, x)]


def is_quasi_antichain(l: Lattice) -> bool:
    """True for ``M_m`` shapes with ``m >= 2``: every middle element is an atom and a coatom."""
    middle = [x for x in range(l.size) if x not in (l.bottom, l.top)]
    if len(middle) < 2:
        return False
    return all(l.meet[x][y] == l.bottom and l.join[x][y] == l.top
               for x in middle for y in middle if x != y)


def _covers(l: Lattice, x: int, y: int) -> bool:
    """y covers x."""
    if x == y or l.meet[x][y] != x:
        return False
    return not any(z not in (x, y) and l.meet[x][z] == x and l.meet[z][y] == z for z in range(l.size))


def covers_of(l: Lattice) -> list[tuple[int, int]]:
    """Hasse diagram edges ``(a, b)`` with ``b`` covering ``a``, sorted."""
    return [(x, y) for x in range(l.size) for y in range(l.size) if _covers(l, x, y)]


# ---------------------------------------------------------------- builders

def build_chain(n: int) -> Lattice:
    """The ``n``-element chain ``a_0 < ... < a_{n-1}``."""
    if n < 1:
        raise InvalidSizeError(f"chain needs n >= 1, got {n}")
    r = range(n)
    return Lattice(
        size=n,
        meet=tuple(tuple(min(x, y) for y in r) for x in r),
        join=tuple(tuple(max(x, y) for y in r) for x in r),
        bottom=0,
        top=n - 1,
        labels=tuple(f"a{i}" for i in r),
        name=f"L{n}",
    )


def build_quasi_antichain(m: int) -> Lattice:
    """``M_m``: bottom 0, atoms ``1..m``, top ``m+1``."""
    if m < 2:
        raise InvalidSizeError(f"quasi-antichain needs m >= 2 atoms, got {m}; use build_chain")
    n, top = m + 2, m + 1

    def mt(x, y):
        if x == y or y == top:
            return x
        if x == top:
            return y
        return 0

    def jn(x, y):
        if x == y or y == 0:
            return x
        if x == 0:
            return y
        return top

    r = range(n)
    return Lattice(
        size=n,
        meet=tuple(tuple(mt(x, y) for y in r) for x in r),
        join=tuple(tuple(jn(x, y) for y in r) for x in r),
        bottom=0,
        top=top,
        labels=("0",) + tuple(f"b{i}" for i in range(1, m + 1)) + ("1",),
        name=f"M{m}",
    )


def build_boolean(k: int) -> Lattice:
    """Boolean lattice of subsets of a ``k``-set, elements as bitmasks."""
    if k < 0:
        raise InvalidSizeError(f"boolean rank must be >= 0, got {k}")
    n = 1 << k
    r = range(n)
    return Lattice(
        size=n,
        meet=tuple(tuple(x & y for y in r) for x in r),
        join=tuple(tuple(x | y for y in r) for x in r),
        bottom=0,
        top=n - 1,
        labels=tuple("{" + ",".join(str(b) for b in range(k) if x >> b & 1) + "}" for x in r),
        name=f"B{k}",
    )


def build_pentagon() -> Lattice:
    """N5 with 0 < a < c < 1 and 0 < b < 1, indexed 0, a=1, b=2, c=3, 1=4."""
    spec = PosetSpec(5, ((0, 1), (1, 3), (3, 4), (0, 2), (2, 4)), ("0", "a", "b", "c", "1"))
    l = build_from_covers(spec)
    return _renamed(l, "N5")


def _renamed(l: Lattice, name: str) -> Lattice:
    return Lattice(l.size, l.meet, l.join, l.bottom, l.top, l.labels, name)


def build_from_covers(spec: PosetSpec) -> Lattice:
    """Build a lattice from a Hasse diagram, rejecting anything that is not a lattice."""
    n = spec.size
    up = [[x == y for y in range(n)] for x in range(n)]
    for a, b in spec.covers:
        if a == b:
            raise CycleError(f"cover ({a}, {b}) is a self-loop")
        up[a][b] = True
    for k in range(n):
        for i in range(n):
            if up[i][k]:
                row_k = up[k]
                row_i = up[i]
                for jj in range(n):
                    if row_k[jj]:
                        row_i[jj] = True
    for a in range(n):
        for b in range(a + 1, n):
            if up[a][b] and up[b][a]:
                raise CycleError(f"cover relation has a cycle through {a} and {b}")

    bottoms = [x for x in range(n) if all(up[x])]
    if not bottoms:
        minimal = [x for x in range(n) if not any(up[y][x] for y in range(n) if y != x)]
        raise NoBottomError(f"no bottom element; minimal elements are {minimal}")
    tops = [x for x in range(n) if all(up[y][x] for y in range(n))]
    if not tops:
        maximal = [x for x in range(n) if not any(up[x][y] for y in range(n) if y != x)]
        raise NoTopError(f"no top element; maximal elements are {maximal}")

    def extremum(x, y, lower):
        if lower:
            bounds = [z for z in range(n) if up[z][x] and up[z][y]]
            best = [z for z in bounds if all(up[w][z] for w in bounds)]
        else:
            bounds = [z for z in range(n) if up[x][z] and up[y][z]]
            best = [z for z in bounds if all(up[z][w] for w in bounds)]
        if len(best) != 1:
            raise NotALatticeError((x, y), "meet" if lower else "join")
        return best[0]

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            meet[x][y] = meet[y][x] = extremum(x, y, True)
            join[x][y] = join[y][x] = extremum(x, y, False)
    return Lattice(n, meet, join, bottoms[0], tops[0], spec.labels or (), "")


def relabel(l: Lattice, perm: Sequence[int]) -> Lattice:
    """Transport ``l`` along the bijection ``x -> perm[x]``."""
    n = l.size
    if sorted(perm) != list(range(n)):
        raise ValueError("relabeling must be a permutation of the elements")
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    meet = [[perm[l.meet[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
    join = [[perm[l.join[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
    labels = [l.labels[inv[a]] for a in range(n)]
    return Lattice(n, meet, join, perm[l.bottom], perm[l.top], labels, l.name)


def same_tables(a: Lattice, b: Lattice) -> bool:
    return a.size == b.size and a.meet == b.meet and a.join == b.join and a.bottom == b.bottom and a.top == b.top


def find_forbidden_sublattice(l: Lattice) -> Optional[tuple[str, tuple[int, ...]]]:
    """Search directly for an M3 or N5 sublattice.

    Returns ``("M3", (z, x, y, w, o))`` or ``("N5", (z, a, b, c, o))`` for the
    first hit in index order, or ``None``.  Independent of the triple check in
    :func:`is_distributive`.
    """
    n, m, j = l.size, l.meet, l.join
    lt = [[x != y and m[x][y] == x for y in range(n)] for x in range(n)]
    for z in range(n):
        for o in range(n):
            if not lt[z][o]:
                continue
            mid = [x for x in range(n) if lt[z][x] and lt[x][o]]
            for x in mid:
                for y in mid:
                    if y <= x or m[x][y] != z or j[x][y] != o:
                        continue
                    for w in mid:
                        if w <= y:
                            continue
                        if m[x][w] == z and m[y][w] == z and j[x][w] == o and j[y][w] == o:
                            return "M3", (z, x, y, w, o)
            for a in mid:
                for c in mid:
                    if not lt[a][c]:
                        continue
                    for b in mid:
                        if b in (a, c):
                            continue
                        if m[a][b] == z and m[c][b] == z and j[a][b] == o and j[c][b] == o:
                            return "N5", (z, a, b, c, o)
    return None


def describe(l: Lattice) -> str:
    return l.name or f"lattice(n={l.size})"


def from_tables(meet: Iterable[Iterable[int]], join: Iterable[Iterable[int]], bottom: int, top: int,
                labels: Sequence[str] = (), name: str = "") -> Lattice:
    meet = tuple(tuple(r) for r in meet)
    return Lattice(len(meet), meet, tuple(tuple(r) for r in join), bottom, top, tuple(labels), name)
