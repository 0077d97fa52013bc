"""Closed-form counts of difference operators on chains and quasi-antichains.

All arithmetic is exact.  Python integers never wrap, so the 128-bit width is
enforced explicitly: any value at or above ``2**127`` raises
:class:`CountOverflowError` instead of being returned.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

INT128_MAX = (1 << 127) - 1


class CountOverflowError(OverflowError):
    pass


class FormulaDomainError(ValueError):
    """Argument outside the range where a closed form is stated.

    ``known_value`` carries a separately established count when there is one.
    """

    def __init__(self, message, known_value=None, provenance=None):
        super().__init__(message)
        self.known_value = known_value
        self.provenance = provenance


def checked(value: int) -> int:
    if not -INT128_MAX - 1 <= value <= INT128_MAX:
        raise CountOverflowError(f"value {value} does not fit in a signed 128-bit integer")
    return value


def catalan(n: int) -> int:
    """``C(n) = binom(2n, n) / (n + 1)``; ``C(1) = 1, C(2) = 2, C(3) = 5``."""
    if n < 1:
        raise ValueError(f"catalan needs n >= 1, got {n}")
    num = checked(comb(2 * n, n))
    q, r = divmod(num, n + 1)
    assert r == 0
    return checked(q)


def omega_top_formula(n: int, j: int) -> int:
    """Number of difference operators on the ``n``-chain sending the top to ``a_j``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= j <= n - 1:
        raise ValueError(f"j must lie in 0..{n - 1}, got {j}")
    if j >= n - 2:
        return catalan(n)
    t = n - 2 - j
    return checked(catalan(n) + sum(comb(t, k) * catalan(n - k) for k in range(1, t + 1)))


def omega_recurrence(n: int, j: int) -> int:
    """Same count as :func:`omega_top_formula`, via the one-step recurrence on ``n``.

    Only defined for ``0 <= j <= n - 3``; the base cases ``j in {m-1, m-2}``
    of the recursion evaluate to ``C(m)``.
    """
    if n < 3:
        raise ValueError(f"recurrence needs n >= 3, got {n}")
    if not 0 <= j <= n - 3:
        raise ValueError(f"j must lie in 0..{n - 3}, got {j}")
    return _omega_rec(n, j)


@lru_cache(maxsize=None)
def _omega_rec(n: int, j: int) -> int:
    if j >= n - 2:
        return catalan(n)
    return checked(catalan(n) + sum(_omega_rec(n - 1, k) for k in range(j, n - 2)))


def chain_total(n: int) -> int:
    """Total number of difference operators on the ``n``-element chain."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    base = n * catalan(n)
    if n <= 2:
        return checked(base)
    extra = sum(comb(p, k) * catalan(n - k) for k in range(1, n - 1) for p in range(k, n - 1))
    return checked(base + extra)


def binomial_sum(n: int) -> int:
    """``sum_{k=1}^{n-2} (k+1) binom(n-2, k)``."""
    return checked(sum((k + 1) * comb(n - 2, k) for k in range(1, n - 1)))


def cubic_term(n: int) -> int:
    num = 3 * n ** 3 - 22 * n ** 2 + 61 * n - 50
    q, r = divmod(num, 2)
    assert r == 0
    return checked(q)


def quasi_derivation_total(n: int) -> int:
    """Number of derivations on the quasi-antichain with ``n`` elements (``n >= 4``)."""
    if n < 4:
        raise FormulaDomainError(f"quasi-antichain derivation count needs n >= 4, got {n}")
    return checked(2 + binomial_sum(n))


M2_TOTAL = 36


def quasi_total(n: int) -> int:
    """Number of difference operators on the ``n``-element quasi-antichain, ``n >= 5``."""
    if n == 4:
        raise FormulaDomainError(
            "closed form holds for n >= 5 only; the 4-element count comes from the M2 classification",
            known_value=M2_TOTAL,
            provenance="classification",
        )
    if n < 4:
        raise FormulaDomainError(f"quasi-antichains have n >= 4 elements, got {n}")
    return checked(cubic_term(n) + binomial_sum(n))


def quasi_slice_counts(n: int) -> dict[str, int]:
    """Per-case counts summing to :func:`quasi_total` for ``n >= 5``.

    Keys: ``d0=0``, ``d0=1,d1=1``, ``d0=1,d1=atom``, ``d0=1,d1=0``, ``d0=atom``.
    """
    if n < 5:
        raise FormulaDomainError(f"slice formulas need n >= 5, got {n}")
    m = n - 2
    return {
        "d0=0": quasi_derivation_total(n),
        "d0=1,d1=1": 1,
        "d0=1,d1=atom": m * (1 + (m - 1) ** 2 + comb(m - 1, 2)),
        "d0=1,d1=0": 1 + m * (m - 1) + comb(m, 2),
        "d0=atom": 3 * m,
    }


# Published tables, n -> value.
CHAIN_TABLE = {1: 1, 2: 4, 3: 17, 4: 73, 5: 316, 6: 1379, 7: 6065, 8: 26870, 9: 119848, 10: 537877}
QUASI_TABLE = {4: 36, 5: 59, 6: 133, 7: 275, 8: 538, 9: 1027, 10: 1959, 11: 3791}
QUASI_CUBIC_TABLE = {5: 40, 6: 86, 7: 164, 8: 283, 9: 452, 10: 680, 11: 976}
QUASI_BINOMIAL_TABLE = {5: 19, 6: 47, 7: 111, 8: 255, 9: 575, 10: 1279, 11: 2815}
