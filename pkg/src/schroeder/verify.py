"""Self-checks: every closed form against its definition or an exhaustive count.

Each suite returns a :class:`SuiteResult`; a suite stops at its first
counterexample. :func:`run_suites` runs suites in a fixed order, optionally on
a thread pool, and returns results in that same order.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from . import numbers as nb
from . import reference as ref
from .maps import canonical_serialize, dissection_colors, enum_dissections, phi, phi_inv
from .paths import (
    diagonal_d_steps,
    enum_colored_compositions,
    enum_colored_dyck,
    enum_large_schroeder_paths,
    enum_rational_paths,
    comp_to_path,
    contacts,
    path_to_comp,
    sigma_colors,
    xi,
    xi_inv,
)
from .trees import enum_st, enum_trees_by_generators, psi, psi_inv, st_colors

__all__ = ["SuiteResult", "SUITES", "GROUPS", "DEFAULT_MAX_N", "run_suite", "run_suites",
           "weak_composition_sum"]


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    seconds: float
    counterexample: str | None = None

    def to_record(self) -> dict:
        return {
            "kind": "suite",
            "suite": self.name,
            "status": "pass" if self.passed else "fail",
            "checks": self.checks,
            "counterexample": self.counterexample,
        }


class _Fail(Exception):
    pass


class _Checker:
    def __init__(self):
        self.count = 0

    def __call__(self, ok: bool, what: str | Callable[[], str]):
        self.count += 1
        if not ok:
            raise _Fail(what() if callable(what) else what)


def weak_composition_sum(n: int, k: int) -> int:
    """``sum s_{m_1} ... s_{m_k}`` over ``m_1 + ... + m_k = n`` with ``m_i >= 0``."""
    def rec(left: int, parts: int):
        if parts == 0:
            yield () if left == 0 else None
            return
        for m in range(left + 1):
            for rest in rec(left - m, parts - 1):
                if rest is not None:
                    yield (m,) + rest

    total = 0
    for comp in rec(n, k):
        term = 1
        for m in comp:
            term *= nb.little_schroeder(m)
        total += term
    return total


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def _sequences(check: _Checker, max_n: int):
    for n, v in enumerate(ref.LITTLE_SCHROEDER):
        check(nb.little_schroeder(n) == v, f"s_{n} != {v}")
    for n, v in enumerate(ref.LARGE_SCHROEDER):
        check(nb.large_schroeder(n) == v, f"r_{n} != {v}")
    for j, v in enumerate(ref.SIGMA, start=1):
        check(nb.sigma(j) == v, f"sigma_{j} != {v}")
    for n, v in enumerate(ref.TREES, start=1):
        check(nb.tree_count(n) == v, f"#T_{n} != {v}")
    for n, v in enumerate(ref.MAPS, start=1):
        check(nb.map_count(n) == v, f"#M_{n} != {v}")


def _bell(check: _Checker, max_n: int):
    for n in range(1, max_n + 1):
        z = nb.factorial_weighted(n)
        for k in range(1, n + 1):
            check(nb.bell_little_schroeder(n, k) == nb.partial_bell(n, k, z),
                  f"B_{{{n},{k}}}(s): closed form != definition")


def _large_bell(check: _Checker, max_n: int):
    for n in range(1, max_n + 1):
        z = nb.factorial_weighted(n, nb.large_schroeder)
        for k in range(1, n + 1):
            check(nb.bell_large_schroeder(n, k) == nb.partial_bell(n, k, z),
                  f"B_{{{n},{k}}}(r): closed form != definition")


def _convolution(check: _Checker, max_n: int):
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            lhs = nb.exact_int(
                Fraction(nb.factorial(k), nb.factorial(n + k))
                * nb.partial_bell(n + k, k, nb.factorial_weighted(n + k)),
                "convolution lhs")
            check(lhs == weak_composition_sum(n, k), f"convolution fails at n={n}, k={k}")


def _transform(check: _Checker, max_n: int):
    s = [nb.little_schroeder(i) for i in range(max_n)]
    for a, b in product(range(3), repeat=2):
        direct = nb.bell_transform(nb.BellTransformParams(a, b, -1, 1), s, max_n)
        check(nb.transform_special(a, b, max_n) == direct,
              f"Y_{{{a},{b},-1,1}}(s): closed form != definition")


def _table1(check: _Checker, max_n: int):
    for alpha, row in ref.N_BLOCKS.items():
        for n, v in enumerate(row, start=1):
            check(nb.n_blocks_count(n, alpha) == v, f"n-block count ({n},{alpha}) != {v}")


def _compositions(check: _Checker, max_n: int):
    # max_n bounds n + k
    for m in range(1, max_n + 1):
        paths = list(enum_large_schroeder_paths(m - 1))
        by_k = Counter(diagonal_d_steps(p) + 1 for p in paths)
        for k in range(1, m + 1):
            comps = list(enum_colored_compositions(m, k))
            check(len(comps) == nb.composition_count(m, k), f"#CS_{{{m},{k}}} mismatch")
            check(len(comps) == by_k[k], f"composition/path cardinality mismatch at m={m}, k={k}")
            images = set()
            for c in comps:
                p = comp_to_path(c)
                check(diagonal_d_steps(p) == k - 1, lambda: f"{c} -> {p}: wrong diagonal count")
                check(path_to_comp(p) == c, lambda: f"round trip fails for {c}")
                images.add(p)
            check(len(images) == len(comps), f"comp_to_path not injective at m={m}, k={k}")
        for p in paths:
            check(comp_to_path(path_to_comp(p)) == p, lambda: f"round trip fails for {p}")


def _xi(check: _Checker, max_n: int, max_alpha: int = 3):
    for alpha in range(1, max_alpha + 1):
        for n in range(1, max_n + 1):
            paths = list(enum_rational_paths(n, alpha))
            dyck = list(enum_colored_dyck(n, alpha - 1, sigma_colors))
            total = nb.rational_schroeder_count(n, alpha)
            check(len(paths) == total == len(dyck), f"#S_{n}({alpha}) mismatch")
            images = set()
            blocks = Counter()
            for p in paths:
                q = xi(p, alpha)
                check(xi_inv(q, alpha) == p, lambda: f"xi_inv(xi({p})) != {p}")
                check(q.returns() == contacts(p, alpha), lambda: f"returns mismatch for {p}")
                images.add(q)
                blocks[q.peaks] += 1
            check(len(images) == len(paths), f"xi not injective at n={n}, alpha={alpha}")
            for q in dyck:
                check(xi(xi_inv(q, alpha), alpha) == q, lambda: f"xi(xi_inv({q})) != {q}")
            for k in range(1, n + 1):
                check(blocks[k] == nb.blocks_count(n, alpha, k),
                      f"{k}-block count mismatch at n={n}, alpha={alpha}")


def _trees(check: _Checker, max_n: int):
    for n in range(0, max_n + 2):
        check(sum(1 for _ in enum_st(n)) == nb.little_schroeder(n), f"#ST_{n} mismatch")
    s_seq = [nb.little_schroeder(j) for j in range(max_n)]
    for n in range(1, max_n + 1):
        trees = list(enum_trees_by_generators(n))
        dyck = list(enum_colored_dyck(n, None, st_colors))
        check(len(trees) == nb.tree_count(n) == len(dyck), f"#T_{n} mismatch")
        unary = Counter(t.unary + 1 for t in trees)
        for t in trees:
            check(len(t) <= 2 * n - 1, f"{t} has too many nodes")
            q = psi_inv(t)
            check(q.semilength == n, lambda: f"psi_inv({t}) has wrong semilength")
            check(psi(q) == t, lambda: f"psi(psi_inv({t})) != {t}")
        for q in dyck:
            t = psi(q)
            check(t.generators == n, lambda: f"psi({q}) has wrong generator count")
            check(psi_inv(t) == q, lambda: f"psi_inv(psi({q})) != {q}")
        for k in range(1, n + 1):
            check(unary[k] == nb.trees_with_unary(n, k)
                  == nb.colored_dyck_peak_count(1, 0, s_seq, n, k),
                  f"unary-node distribution mismatch at n={n}, k={k}")


def _maps(check: _Checker, max_n: int):
    for n in range(0, max_n + 2):
        check(sum(1 for _ in enum_dissections(n)) == nb.little_schroeder(n), f"#B_{n} mismatch")
    s_seq = [nb.little_schroeder(j) for j in range(max_n)]
    for n in range(1, max_n + 1):
        keys = set()
        comps = Counter()
        for q in enum_colored_dyck(n, 1, dissection_colors):
            m = phi_inv(q)
            check(m.n == n, lambda: f"phi_inv({q}) has wrong vertex count")
            check(phi(m) == q, lambda: f"phi(phi_inv({q})) != {q}")
            keys.add(canonical_serialize(m))
            comps[q.peaks] += 1
        check(len(keys) == nb.map_count(n), f"#M_{n}: {len(keys)} distinct maps")
        for k in range(1, n + 1):
            check(comps[k] == nb.maps_with_components(n, k)
                  == nb.colored_dyck_peak_count(1, 1, s_seq, n, k),
                  f"component distribution mismatch at n={n}, k={k}")
        check(nb.maps_with_components(n, n) == nb.catalan(n), f"k=n slice != C_{n}")


def _integrality(check: _Checker, max_n: int):
    stats = nb.integrality_stats()
    check(stats["checks"] > 0, "no integrality assertions were made")
    check(stats["failures"] == 0, f"{stats['failures']} integrality failures")


SUITES: dict[str, tuple[Callable[[_Checker, int], None], int]] = {
    "sequences": (_sequences, 0),
    "bell": (_bell, 12),
    "large-bell": (_large_bell, 10),
    "convolution": (_convolution, 10),
    "transform": (_transform, 6),
    "table1": (_table1, 0),
    "compositions": (_compositions, 8),
    "xi": (_xi, 4),
    "trees": (_trees, 5),
    "maps": (_maps, 4),
    "integrality": (_integrality, 0),
}

DEFAULT_MAX_N = {name: bound for name, (_, bound) in SUITES.items()}

GROUPS = {
    "all": list(SUITES),
    "bijections": ["compositions", "xi", "trees", "maps"],
    "formulas": ["sequences", "bell", "large-bell", "convolution", "transform", "table1"],
}


def run_suite(name: str, max_n: int | None = None) -> SuiteResult:
    func, default = SUITES[name]
    check = _Checker()
    start = time.perf_counter()
    try:
        func(check, default if max_n is None else max_n)
        ok, example = True, None
    except _Fail as exc:
        ok, example = False, str(exc)
    except nb.IntegralityError as exc:
        ok, example = False, str(exc)
    return SuiteResult(name, ok, check.count, time.perf_counter() - start, example)


def run_suites(names: list[str], max_n: int | None = None, workers: int = 1) -> list[SuiteResult]:
    """Run suites; ``integrality`` always runs last since it reads the tallies."""
    names = [n for n in names if n != "integrality"] + \
        (["integrality"] if "integrality" in names else [])
    body = [n for n in names if n != "integrality"]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda n: run_suite(n, max_n), body))
    else:
        results = [run_suite(n, max_n) for n in body]
    if "integrality" in names:
        results.append(run_suite("integrality"))
    return results
