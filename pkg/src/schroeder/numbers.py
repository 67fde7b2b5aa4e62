"""Exact counting functions around the little and large Schroeder numbers.

Everything here works with Python ``int`` and :class:`fractions.Fraction`.
Formulas that divide (``1/j``, ``1/n!``, ``1/(alpha*n + 1)``, ...) are
evaluated as fractions and converted back to ``int`` through
:func:`exact_int`, which raises :class:`IntegralityError` instead of rounding.
Every such conversion is tallied; see :func:`integrality_stats`.

Partial Bell polynomials are evaluated in two independent ways: by their
definition as a sum over multi-indices (:func:`partial_bell`) and by closed
forms valid for the Schroeder sequence (:func:`bell_little_schroeder`,
:func:`bell_large_schroeder`).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

__all__ = [
    "IntegralityError",
    "exact_int",
    "integrality_stats",
    "reset_integrality_stats",
    "binomial",
    "factorial",
    "catalan",
    "little_schroeder",
    "large_schroeder",
    "sigma",
    "MultiIndex",
    "enum_multi_indices",
    "partial_bell",
    "factorial_weighted",
    "bell_little_schroeder",
    "bell_large_schroeder",
    "BellTransformParams",
    "bell_transform",
    "transform_special",
    "rational_schroeder_count",
    "blocks_count",
    "n_blocks_count",
    "colored_dyck_peak_count",
    "composition_count",
    "tree_count",
    "trees_with_unary",
    "map_count",
    "maps_with_components",
]


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out as a proper fraction."""

    def __init__(self, message: str, value: Fraction, index: int | None = None):
        super().__init__(message)
        self.value = value
        self.index = index


_stats_lock = threading.Lock()
_stats = {"checks": 0, "failures": 0}


def exact_int(value: Fraction | int, what: str = "value", index: int | None = None) -> int:
    """Return ``value`` as an ``int``, raising if it has a denominator."""
    value = Fraction(value)
    ok = value.denominator == 1
    with _stats_lock:
        _stats["checks"] += 1
        if not ok:
            _stats["failures"] += 1
    if not ok:
        raise IntegralityError(f"{what} = {value} is not an integer", value, index)
    return value.numerator


def integrality_stats() -> dict[str, int]:
    """Snapshot of ``{"checks": ..., "failures": ...}`` since the last reset."""
    with _stats_lock:
        return dict(_stats)


def reset_integrality_stats() -> None:
    with _stats_lock:
        _stats["checks"] = 0
        _stats["failures"] = 0


def _require_range(k: int, n: int, name: str) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"{name}: need 1 <= k <= n, got n={n}, k={k}")


# ---------------------------------------------------------------------------
# Basic sequences
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``.

    >>> binomial(9, 4)
    126
    >>> binomial(3, -1), binomial(3, 4)
    (0, 0)
    """
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return math.factorial(n)


def catalan(n: int) -> int:
    return exact_int(Fraction(binomial(2 * n, n), n + 1), f"C_{n}")


@lru_cache(maxsize=None)
def little_schroeder(n: int) -> int:
    """Little Schroeder number ``s_n`` (1, 1, 3, 11, 45, ...).

    Uses ``s_n = sum_{j=1}^{n} (1/j) C(n+j, j-1) C(n-1, j-1)`` for ``n >= 1``.
    """
    if n < 0:
        raise ValueError(f"little_schroeder: n must be nonnegative, got {n}")
    if n == 0:
        return 1
    total = sum(
        Fraction(binomial(n + j, j - 1) * binomial(n - 1, j - 1), j)
        for j in range(1, n + 1)
    )
    return exact_int(total, f"s_{n}")


def large_schroeder(n: int) -> int:
    """Large Schroeder number ``r_n``: ``r_0 = 1`` and ``r_n = 2 s_n`` after."""
    if n < 0:
        raise ValueError(f"large_schroeder: n must be nonnegative, got {n}")
    return 1 if n == 0 else 2 * little_schroeder(n)


def sigma(j: int) -> int:
    """Number of Schroeder paths to ``(j, j)`` touching the diagonal only at
    their endpoints (the unit diagonal step counts for ``j = 1``)."""
    if j < 1:
        raise ValueError(f"sigma: j must be positive, got {j}")
    return 2 * little_schroeder(j - 1)


# ---------------------------------------------------------------------------
# Partial Bell polynomials by definition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiIndex:
    """``counts[i]`` is the number of parts of size ``i + 1``."""

    n: int
    k: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if sum(self.counts) != self.k:
            raise ValueError(f"counts {self.counts} do not sum to k={self.k}")
        if sum((i + 1) * c for i, c in enumerate(self.counts)) != self.n:
            raise ValueError(f"counts {self.counts} do not weigh n={self.n}")


def enum_multi_indices(n: int, k: int) -> Iterator[MultiIndex]:
    """Yield every multi-index of ``pi(n, k)`` in lexicographic order of counts.

    >>> [m.counts for m in enum_multi_indices(4, 2)]
    [(0, 2, 0), (1, 0, 1)]
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"enum_multi_indices: need 0 <= k <= n, got n={n}, k={k}")
    length = n - k + 1

    def rec(i: int, parts_left: int, weight_left: int, acc: list[int]):
        if i == length:
            if parts_left == 0 and weight_left == 0:
                yield tuple(acc)
            return
        size = i + 1
        for c in range(min(parts_left, weight_left // size) + 1):
            acc.append(c)
            yield from rec(i + 1, parts_left - c, weight_left - c * size, acc)
            acc.pop()

    for counts in rec(0, k, n, []):
        yield MultiIndex(n, k, counts)


def partial_bell(n: int, k: int, z: Sequence) -> Fraction:
    """Evaluate ``B_{n,k}(z_1, ..., z_{n-k+1})`` from its defining sum.

    ``z[0]`` holds ``z_1``. Entries may be ``int`` or ``Fraction``.
    ``B_{0,0} = 1`` and ``B_{n,0} = 0`` for ``n > 0``.

    >>> partial_bell(3, 2, [1, 2])
    Fraction(6, 1)
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"partial_bell: need 0 <= k <= n, got n={n}, k={k}")
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    if len(z) < n - k + 1:
        raise ValueError(f"partial_bell: need {n - k + 1} arguments, got {len(z)}")
    scaled = [Fraction(z[i]) / factorial(i + 1) for i in range(n - k + 1)]
    total = Fraction(0)
    for mi in enum_multi_indices(n, k):
        term = Fraction(factorial(n))
        for i, c in enumerate(mi.counts):
            if c:
                term *= scaled[i] ** c / factorial(c)
        total += term
    return total


def factorial_weighted(n: int, seq=little_schroeder) -> list[int]:
    # (1! x_0, 2! x_1, ..., n! x_{n-1})
    return [factorial(i + 1) * seq(i) for i in range(n)]


# ---------------------------------------------------------------------------
# Closed forms for B_{n,k} at Schroeder numbers
# ---------------------------------------------------------------------------

def _convolution_sum(n: int, k: int) -> Fraction:
    # sum_{j=1}^{n-k} (1/j) C(n-k-1, j-1) C(n+j-1, j-1)
    return sum(
        (Fraction(binomial(n - k - 1, j - 1) * binomial(n + j - 1, j - 1), j)
         for j in range(1, n - k + 1)),
        Fraction(0),
    )


@lru_cache(maxsize=None)
def bell_little_schroeder(n: int, k: int) -> int:
    """``B_{n,k}(1! s_0, 2! s_1, ...)`` via the closed form.

    For ``k == n`` the value is ``(1! s_0)^n = 1``.
    """
    _require_range(k, n, "bell_little_schroeder")
    if k == n:
        return 1
    value = Fraction(factorial(n), factorial(k - 1)) * _convolution_sum(n, k)
    return exact_int(value, f"B_{{{n},{k}}}(s)")


def _bell_s(n: int, k: int) -> int:
    if k == 0:
        return 1 if n == 0 else 0
    return bell_little_schroeder(n, k)


def bell_large_schroeder(n: int, k: int) -> int:
    """``B_{n,k}(1! r_0, 2! r_1, ...)`` expressed through the little numbers.

    Since ``r = 2 s`` except ``r_0 = 2 s_0 - 1``, shifting the first argument
    by ``-1`` gives
    ``sum_{l=0}^{k} (-1)^l 2^(k-l) C(n, l) B_{n-l,k-l}(1! s_0, ...)``.
    """
    _require_range(k, n, "bell_large_schroeder")
    return sum(
        (-1) ** l * 2 ** (k - l) * binomial(n, l) * _bell_s(n - l, k - l)
        for l in range(k + 1)
    )


# ---------------------------------------------------------------------------
# Bell transforms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BellTransformParams:
    a: int
    b: int
    c: int
    d: int


def bell_transform(p: BellTransformParams, x: Sequence[int], N: int) -> list[int]:
    """First ``N`` terms ``y_1..y_N`` of the Bell transform ``Y_{a,b,c,d}(x)``.

    ``x[0]`` is ``x_1``. Raises :class:`IntegralityError` naming the first
    ``n`` whose ``y_n`` is not an integer.
    """
    if N < 1:
        raise ValueError(f"bell_transform: N must be positive, got {N}")
    if len(x) < N:
        raise ValueError(f"bell_transform: need x_1..x_{N}, got {len(x)} terms")
    z = [factorial(i + 1) * x[i] for i in range(N)]
    out = []
    for n in range(1, N + 1):
        total = Fraction(0)
        for k in range(1, n + 1):
            coeff = math.prod(p.a * n + p.b * k + p.c * j + p.d for j in range(1, k))
            if coeff:
                total += coeff * partial_bell(n, k, z)
        out.append(exact_int(total / factorial(n), f"y_{n}", index=n))
    return out


def transform_special(a: int, b: int, N: int) -> list[int]:
    """``Y_{a,b,-1,1}(s)`` for the little Schroeder sequence, closed form."""
    if a < 0 or b < 0:
        raise ValueError("transform_special: a and b must be nonnegative")
    out = []
    for n in range(1, N + 1):
        total = Fraction(binomial((a + b) * n, n - 1), n)
        for k in range(1, n):
            total += binomial(a * n + b * k, k - 1) * _convolution_sum(n, k)
        out.append(exact_int(total, f"y_{n}", index=n))
    return out


# ---------------------------------------------------------------------------
# Rational Schroeder paths and colored Dyck paths
# ---------------------------------------------------------------------------

def rational_schroeder_count(n: int, alpha: int) -> int:
    """Number of paths ``(0,0) -> (n, alpha n)`` with steps N, E, D weakly
    above ``y = alpha x``."""
    if n < 0 or alpha < 1:
        raise ValueError("rational_schroeder_count: need n >= 0, alpha >= 1")
    m = alpha * n
    total = sum(binomial(m + 1, n - l) * binomial(m + l, l) for l in range(n + 1))
    return exact_int(Fraction(total, m + 1), f"#S_{n}({alpha})")


def n_blocks_count(n: int, alpha: int) -> int:
    """Rational Schroeder paths assembled from ``n`` unit blocks (``D`` or ``NE``)."""
    if n < 1 or alpha < 1:
        raise ValueError("n_blocks_count: need n >= 1, alpha >= 1")
    value = Fraction(2 ** n, (alpha - 1) * n + 1) * binomial(alpha * n, n)
    return exact_int(value, f"n-block count ({n},{alpha})")


def blocks_count(n: int, alpha: int, k: int) -> int:
    """Paths in ``S_n(alpha)`` built from exactly ``k`` blocks."""
    _require_range(k, n, "blocks_count")
    if k == n:
        return n_blocks_count(n, alpha)
    value = 2 ** k * binomial((alpha - 1) * n + k, k - 1) * _convolution_sum(n, k)
    return exact_int(value, f"k-block count ({n},{alpha},{k})")


def colored_dyck_peak_count(a: int, b: int, c: Sequence[int], n: int, k: int) -> int:
    """Colored Dyck paths with ``k`` peaks, counted from the Bell polynomial.

    ``C(a n + b k, k - 1) (k-1)!/n! B_{n,k}(1! c_1, 2! c_2, ...)`` where
    ``c[0]`` is the number of colors for length 1.
    """
    _require_range(k, n, "colored_dyck_peak_count")
    if b not in (0, 1):
        raise ValueError(f"colored_dyck_peak_count: b must be 0 or 1, got {b}")
    if len(c) < n - k + 1:
        raise ValueError("colored_dyck_peak_count: color sequence too short")
    z = [factorial(i + 1) * c[i] for i in range(n - k + 1)]
    value = (binomial(a * n + b * k, k - 1) * Fraction(factorial(k - 1), factorial(n))
             * partial_bell(n, k, z))
    return exact_int(value, f"peak count ({a},{b},{n},{k})")


def composition_count(n: int, k: int) -> int:
    """Compositions of ``n`` into ``k`` parts, part ``j`` having ``s_{j-1}`` colors."""
    _require_range(k, n, "composition_count")
    value = Fraction(factorial(k), factorial(n)) * bell_little_schroeder(n, k)
    return exact_int(value, f"#CS_{{{n},{k}}}")


# ---------------------------------------------------------------------------
# Trees and maps
# ---------------------------------------------------------------------------

def _peak_form(top: int, n: int, k: int) -> int:
    value = binomial(top, k - 1) * Fraction(factorial(k - 1), factorial(n)) \
        * bell_little_schroeder(n, k)
    return exact_int(value, f"peak form C({top},{k - 1}) n={n}")


def tree_count(n: int) -> int:
    """Ordered rooted trees with ``n`` generators (leaves or unary nodes)."""
    if n < 1:
        raise ValueError(f"tree_count: n must be positive, got {n}")
    total = Fraction(1)
    for k in range(1, n):
        total += binomial(n, k - 1) * _convolution_sum(n, k)
    return exact_int(total, f"#T_{n}")


def trees_with_unary(n: int, k: int) -> int:
    """Trees with ``n`` generators and exactly ``k - 1`` unary nodes."""
    _require_range(k, n, "trees_with_unary")
    return _peak_form(n, n, k)


def map_count(n: int) -> int:
    """Simple rooted outerplanar maps with ``n + 1`` vertices."""
    if n < 1:
        raise ValueError(f"map_count: n must be positive, got {n}")
    total = Fraction(binomial(2 * n, n - 1), n)
    for k in range(1, n):
        total += binomial(n + k, k - 1) * _convolution_sum(n, k)
    return exact_int(total, f"#M_{n}")


def maps_with_components(n: int, k: int) -> int:
    """Maps in ``M_n`` with exactly ``k`` biconnected components."""
    _require_range(k, n, "maps_with_components")
    return _peak_form(n + k, n, k)
