"""Exhaustive enumeration of operators satisfying a weight identity.

The search assigns ``image[0], image[1], ...`` in index order.  Each unordered
pair ``(x, y)`` is checked exactly once, at the first step where ``d(x)``,
``d(y)`` and ``d(x ^ y)`` are all known, so the pruning is both sound and
complete for any lattice.  Values are tried in increasing order, which makes
the emission order lexicographic.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

from .formulas import checked
from .lattice import Lattice
from .operators import Operator, Weight, check_weight, weight_pairs

DEFAULT_BUDGET = 10
BUDGET_ENV = "LATDIFF_BUDGET"


class BudgetExceededError(RuntimeError):
    def __init__(self, n, budget):
        self.n, self.budget = n, budget
        super().__init__(f"lattice size {n} exceeds the enumeration budget of {budget} elements "
                         f"(raise it with --force or {BUDGET_ENV})")


class ConstraintError(ValueError):
    pass


def size_budget(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class CountQuery:
    """What to count: operators of ``weight`` on ``lattice`` with fixed images.

    ``constraints`` holds ``(element, image)`` pairs; ``extra`` holds
    ``(element, lower)`` pairs meaning ``lower <= d(element)``.
    """

    lattice: Lattice
    weight: Weight = Weight.ONE
    constraints: tuple[tuple[int, int], ...] = ()
    extra: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "weight", Weight(self.weight))
        object.__setattr__(self, "constraints", tuple((int(a), int(b)) for a, b in self.constraints))
        object.__setattr__(self, "extra", tuple((int(a), int(b)) for a, b in self.extra))
        n = self.lattice.size
        seen = {}
        for j, i in self.constraints:
            if not (0 <= j < n and 0 <= i < n):
                raise ConstraintError(f"constraint d({j}) = {i} out of range for size {n}")
            if seen.setdefault(j, i) != i:
                raise ConstraintError(f"conflicting constraints on d({j})")
        for x, y in self.extra:
            if not (0 <= x < n and 0 <= y < n):
                raise ConstraintError(f"constraint d({x}) >= {y} out of range for size {n}")

    def allowed(self) -> list[list[int]]:
        l = self.lattice
        cand = [list(range(l.size)) for _ in range(l.size)]
        for j, i in self.constraints:
            cand[j] = [v for v in cand[j] if v == i]
        for x, y in self.extra:
            cand[x] = [v for v in cand[x] if l.meet[y][v] == y]
        return cand


@dataclass
class CountReport:
    count: int
    method: str
    elapsed: float = 0.0
    overflow: bool = False

    def merge(self, other: "CountReport") -> "CountReport":
        if other.method != self.method:
            raise ValueError("cannot merge reports produced by different methods")
        return CountReport(self.count + other.count, self.method,
                           self.elapsed + other.elapsed, self.overflow or other.overflow)


def _schedule(l: Lattice, weight: int) -> list[list[tuple[int, int, int]]]:
    steps: list[list[tuple[int, int, int]]] = [[] for _ in range(l.size)]
    for x, y in weight_pairs(l, weight):
        m = l.meet[x][y]
        steps[max(x, y, m)].append((x, y, m))
    return steps


def _search(l: Lattice, weight: int, allowed: Sequence[Sequence[int]], sink: Optional[list]) -> int:
    n = l.size
    meet, join = l.meet, l.join
    steps = _schedule(l, weight)
    img = [0] * n
    count = 0

    def ok(k):
        for x, y, mm in steps[k]:
            dx = img[x]
            dy = img[y]
            cross = join[meet[dx][y]][meet[x][dy]]
            if weight == 1:
                if img[mm] != join[cross][meet[dx][dy]]:
                    return False
            elif weight == 0:
                if img[mm] != cross:
                    return False
            elif join[img[mm]][meet[dx][dy]] != cross:
                return False
        return True

    def rec(k):
        nonlocal count
        for v in allowed[k]:
            img[k] = v
            if not ok(k):
                continue
            if k == n - 1:
                count += 1
                if sink is not None:
                    sink.append(tuple(img))
            else:
                rec(k + 1)

    rec(0)
    return count


def _unpruned(l: Lattice, weight: int, allowed: Sequence[Sequence[int]], sink: Optional[list]) -> int:
    count = 0
    for d in product(*allowed):
        if check_weight(l, d, weight):
            count += 1
            if sink is not None:
                sink.append(d)
    return count


def _partition(args):
    l, weight, allowed, collect, prune = args
    sink = [] if collect else None
    count = (_search if prune else _unpruned)(l, weight, allowed, sink)
    return count, sink


def enumerate_ops(q: CountQuery, emit: Optional[Callable[[Operator], None]] = None, *,
                  budget: Optional[int] = None, force: bool = False, prune: bool = True,
                  workers: int = 1) -> CountReport:
    """Count (and optionally emit, in lexicographic order) every operator matching ``q``.

    With ``workers > 1`` the search is split on the value of ``image[0]``;
    each partition runs the same sequential kernel and results are merged in
    partition order, so counts and emission order do not depend on ``workers``.
    """
    l = q.lattice
    limit = size_budget() if budget is None else budget
    if l.size > limit and not force:
        raise BudgetExceededError(l.size, limit)
    t0 = time.perf_counter()
    allowed = q.allowed()
    w = int(q.weight)
    collect = emit is not None
    if workers <= 1:
        sink = [] if collect else None
        count = (_search if prune else _unpruned)(l, w, allowed, sink)
        parts = [(count, sink)]
    else:
        jobs = [(l, w, [[v]] + allowed[1:], collect, prune) for v in allowed[0]]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_partition, jobs))
    total = 0
    for count, sink in parts:
        total += count
        if collect:
            for d in sink:
                emit(d)
    method = "brute" if prune else "brute-unpruned"
    return CountReport(checked(total), method, time.perf_counter() - t0)


def collect_ops(q: CountQuery, **kwargs) -> list[Operator]:
    out: list[Operator] = []
    enumerate_ops(q, out.append, **kwargs)
    return out


def operator_set(l: Lattice, weight=1, constraints: Iterable[tuple[int, int]] = (),
                 **kwargs) -> frozenset[Operator]:
    return frozenset(collect_ops(CountQuery(l, weight, tuple(constraints)), **kwargs))


def count_ops(l: Lattice, weight=1, constraints: Iterable[tuple[int, int]] = (),
              extra: Iterable[tuple[int, int]] = (), **kwargs) -> int:
    return enumerate_ops(CountQuery(l, weight, tuple(constraints), tuple(extra)), **kwargs).count


def all_maps(n: int) -> Iterable[Operator]:
    """Every self-map of an ``n``-element set, lexicographically."""
    return product(range(n), repeat=n)
