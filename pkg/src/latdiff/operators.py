"""Self-maps on a lattice: weight identities, structural predicates, named families.

An operator is a plain tuple ``d`` with ``d[x]`` the image of element ``x``.
It is bound to a lattice by length only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, Optional, Sequence

from .lattice import Lattice, atoms, is_chain, is_quasi_antichain

Operator = tuple[int, ...]


class Weight(IntEnum):
    ZERO = 0
    ONE = 1
    MINUS_ONE = -1


class OperatorError(ValueError):
    pass


class SizeMismatchError(OperatorError):
    pass


class FamilyError(OperatorError):
    """A named family was requested with parameters violating its side conditions."""


class UnsupportedShapeError(OperatorError):
    pass


def as_operator(l: Lattice, d: Sequence[int]) -> Operator:
    d = tuple(int(v) for v in d)
    if len(d) != l.size:
        raise SizeMismatchError(f"operator has {len(d)} entries, lattice has {l.size} elements")
    for x, v in enumerate(d):
        if not 0 <= v < l.size:
            raise OperatorError(f"image of {x} is {v}, outside 0..{l.size - 1}")
    return d


def identity(l: Lattice) -> Operator:
    return tuple(range(l.size))


# ------------------------------------------------------------ weight checks

def weight_pairs(l: Lattice, weight) -> list[tuple[int, int]]:
    """Unordered pairs that must be checked for ``weight``.

    All three identities are symmetric in ``x, y``.  The diagonal is vacuous
    only for weight 1; for weights 0 and -1 it forces ``d(x) <= x``.
    """
    w = Weight(weight)
    start = 1 if w is Weight.ONE else 0
    return [(x, y) for x in range(l.size) for y in range(x + start, l.size)]


def _identity_holds(m, j, d, x, y, w) -> bool:
    dx, dy = d[x], d[y]
    lhs = d[m[x][y]]
    cross = j[m[dx][y]][m[x][dy]]
    if w == 1:
        return lhs == j[cross][m[dx][dy]]
    if w == 0:
        return lhs == cross
    return j[lhs][m[dx][dy]] == cross


def weight_violation(l: Lattice, d: Sequence[int], weight) -> Optional[tuple[int, int]]:
    """First pair ``(x, y)`` where the weight identity fails, or ``None``."""
    d = as_operator(l, d)
    w = int(Weight(weight))
    m, j = l.meet, l.join
    for x, y in weight_pairs(l, w):
        if not _identity_holds(m, j, d, x, y, w):
            return x, y
    return None


def check_weight(l: Lattice, d: Sequence[int], weight) -> bool:
    return weight_violation(l, d, weight) is None


# ------------------------------------------------------------ properties

def _decreasing(l, d):
    return all(l.meet[d[x]][x] == d[x] for x in range(l.size))


def _increasing(l, d):
    return all(l.meet[x][d[x]] == x for x in range(l.size))


def _isotone(l, d):
    m, r = l.meet, range(l.size)
    return all(m[d[x]][d[y]] == d[x] for x in r for y in r if m[x][y] == x)


def _meet_hom(l, d):
    m, r = l.meet, range(l.size)
    return all(d[m[x][y]] == m[d[x]][d[y]] for x in r for y in r)


def _join_hom(l, d):
    j, r = l.join, range(l.size)
    return all(d[j[x][y]] == j[d[x]][d[y]] for x in r for y in r)


def _idempotent(l, d):
    return all(d[d[x]] == d[x] for x in range(l.size))


PROPERTIES: dict[str, Callable[[Lattice, Operator], bool]] = {
    "decreasing": _decreasing,
    "increasing": _increasing,
    "isotone": _isotone,
    "meet_homomorphism": _meet_hom,
    "join_homomorphism": _join_hom,
    "idempotent": _idempotent,
    "lattice_homomorphism": lambda l, d: _meet_hom(l, d) and _join_hom(l, d),
}


def check_property(l: Lattice, d: Sequence[int], prop: str) -> bool:
    try:
        fn = PROPERTIES[prop]
    except KeyError:
        raise ValueError(f"unknown property {prop!r}; expected one of {sorted(PROPERTIES)}") from None
    return fn(l, as_operator(l, d))


def property_flags(l: Lattice, d: Sequence[int]) -> dict[str, bool]:
    d = as_operator(l, d)
    return {name: fn(l, d) for name, fn in PROPERTIES.items()}


# ------------------------------------------------------------ named families

FAMILY_KINDS = (
    "constant", "tau", "psi", "lambda_a", "eta", "beta", "gamma",
    "theta", "alpha", "phi_a", "phi_b", "theta_m2_counterexample",
)


@dataclass(frozen=True)
class OperatorFamily:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise FamilyError(f"unknown family {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.params))})" if self.params else self.kind


_ARITY = {
    "constant": 1, "tau": 1, "psi": 1, "lambda_a": 1, "eta": 3, "beta": 2, "gamma": 3,
    "theta": 2, "alpha": 2, "phi_a": 0, "phi_b": 0, "theta_m2_counterexample": 0,
}


def _require(cond, msg):
    if not cond:
        raise FamilyError(msg)


def _atoms_of_quasi(l: Lattice, kind: str) -> list[int]:
    _require(is_quasi_antichain(l), f"{kind} is defined on quasi-antichains only")
    return atoms(l)


def make_named(l: Lattice, fam: OperatorFamily) -> Operator:
    """Materialize a named operator family on ``l``."""
    kind, p = fam.kind, fam.params
    _require(len(p) == _ARITY[kind], f"{kind} takes {_ARITY[kind]} parameter(s), got {len(p)}")
    for v in p:
        _require(0 <= v < l.size, f"parameter {v} out of range for {kind}")
    n, top, bot = l.size, l.top, l.bottom

    if kind == "constant":
        return (p[0],) * n
    if kind == "tau":
        _require(n >= 2, "tau needs a lattice with at least 2 elements")
        return tuple(p[0] if x == top else top for x in range(n))
    if kind == "psi":
        return tuple(l.join[x][p[0]] for x in range(n))

    if kind in ("phi_a", "phi_b", "theta_m2_counterexample"):
        _require(is_quasi_antichain(l) and n == 4, f"{kind} is defined on M2 only")
        o, a, b, one = bot, *atoms(l), top
        table = {
            "phi_a": {o: a, a: o, b: one, one: b},
            "phi_b": {o: b, a: one, b: o, one: a},
            "theta_m2_counterexample": {o: a, a: o, b: a, one: b},
        }[kind]
        return tuple(table[x] for x in range(n))

    at = _atoms_of_quasi(l, kind)
    if kind == "lambda_a":
        (a,) = p
        _require(a in at, "lambda_a needs a to be an atom")
        return tuple(bot if x in (a, top) else a for x in range(n))
    if kind in ("eta", "beta"):
        b, u = p[0], p[1]
        v = p[2] if kind == "eta" else b
        _require(b in at, f"{kind} needs b an atom")
        _require(u in at and u != b, f"{kind} needs u an atom different from b")
        _require(v in at and v != u, f"{kind} needs v an atom different from u")
        return tuple(b if x == top else v if x == u else top for x in range(n))
    if kind == "gamma":
        b, u, v = p
        _require(len(at) >= 3, "gamma needs at least 5 elements")
        _require(all(q in at for q in p) and len({b, u, v}) == 3, "gamma needs b, u, v mutually distinct atoms")
        return tuple(b if x == top else v if x == u else u if x == v else top for x in range(n))
    if kind == "theta":
        u, v = p
        _require(u in at and v in at and u != v, "theta needs distinct atoms u, v")
        return tuple(bot if x == top else v if x == u else top for x in range(n))
    if kind == "alpha":
        u, v = p
        _require(u in at and v in at and u != v, "alpha needs distinct atoms u, v")
        return tuple(bot if x == top else v if x == u else u if x == v else top for x in range(n))
    raise FamilyError(f"unhandled family {kind}")  # pragma: no cover


def named(l: Lattice, kind: str, *params: int) -> Operator:
    return make_named(l, OperatorFamily(kind, params))


# ------------------------------------------------------------ derived operators

def modify_at_top(l: Lattice, d: Sequence[int], u: int) -> Operator:
    """``d`` with the image of the top replaced by ``u``."""
    d = as_operator(l, d)
    if not 0 <= u < l.size:
        raise OperatorError(f"element {u} out of range")
    return d[:l.top] + (u,) + d[l.top + 1:]


def saturate_image(l: Lattice, d: Sequence[int]) -> Operator:
    """Case definition: keep ``d(x)`` below ``d(top)``, send everything else to top.

    No shape checks; see :func:`chain_saturate`.
    """
    c = d[l.top]
    return tuple(d[x] if l.meet[x][c] == x else l.top for x in range(l.size))


def floor_image(l: Lattice, d: Sequence[int]) -> Operator:
    """Case definition: ``d(top)`` below ``d(top)``, ``d(x)`` elsewhere.  No shape checks."""
    c = d[l.top]
    return tuple(c if l.meet[x][c] == x else d[x] for x in range(l.size))


def _chain_pre(l: Lattice, d: Sequence[int], what: str) -> Operator:
    if not is_chain(l):
        raise UnsupportedShapeError(f"{what} is only guaranteed on chains; {l.name or 'lattice'} is not a chain")
    d = as_operator(l, d)
    if not check_weight(l, d, 1):
        raise OperatorError(f"{what} needs a difference operator as input")
    return d


def chain_saturate(l: Lattice, d: Sequence[int]) -> Operator:
    return saturate_image(l, _chain_pre(l, d, "chain_saturate"))


def chain_floor(l: Lattice, d: Sequence[int]) -> Operator:
    return floor_image(l, _chain_pre(l, d, "chain_floor"))


def restrict_below_top(d: Sequence[int]) -> Optional[Operator]:
    """Restriction of a chain operator to ``L_{n-1}``, or ``None`` if it leaves it."""
    top = len(d) - 1
    r = tuple(d[:top])
    return None if any(v == top for v in r) else r


def format_operator(l: Lattice, d: Sequence[int], labels: bool = False) -> str:
    if labels:
        return "[" + ", ".join(l.labels[v] for v in d) + "]"
    return " ".join(str(v) for v in d)
