"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines are repeated in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

import time
from collections import Counter
from contextlib import contextmanager
from fractions import Fraction
from itertools import product

import pytest

from schroeder import numbers as nb
from schroeder import reference as ref
from schroeder.maps import RotationSystem, canonical_serialize, enum_maps, phi, phi_inv
from schroeder.paths import (
    DOWN,
    Block,
    ColoredDyckPath,
    comp_to_path,
    diagonal_d_steps,
    enum_colored_compositions,
    enum_colored_dyck,
    enum_large_schroeder_paths,
    enum_rational_paths,
    path_to_comp,
    sigma_colors,
    xi,
    xi_inv,
)
from schroeder.trees import OrderedTree, enum_trees_by_generators, psi, psi_inv, st_colors
from schroeder.verify import weak_composition_sum

RESULTS: list[tuple[int, str]] = []
_BASELINE: dict[str, int] = {}


@pytest.fixture(scope="module", autouse=True)
def integrality_baseline():
    _BASELINE.update(nb.integrality_stats())
    yield


@contextmanager
def criterion(number: int, title: str, limit: float | None = None):
    """Time the block and record one PASS/FAIL line; a time ``limit`` is enforced."""
    start = time.perf_counter()
    detail = ""
    try:
        yield
    except AssertionError as exc:
        detail = f" -- {exc}" if str(exc) else " -- assertion failed"
        raise
    except Exception as exc:
        detail = f" -- {type(exc).__name__}: {exc}"
        raise
    finally:
        secs = time.perf_counter() - start
        late = limit is not None and secs >= limit
        ok = not detail and not late
        bound = f" < {limit:g} s" if limit is not None else ""
        if late:
            detail += f" -- exceeded {limit:g} s"
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({secs:.2f} s{bound}){detail}"
        RESULTS.append((number, line))
        print(line)
    assert limit is None or secs < limit, f"criterion {number} took {secs:.2f} s"


def test_c01_little_schroeder_terms():
    with criterion(1, "little Schroeder terms s_0..s_9", limit=1):
        values = [nb.little_schroeder(n) for n in range(10)]
        assert values == [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049], values


def test_c02_bell_little_vs_definition():
    with criterion(2, "closed form B_{n,k}(1!s_0, 2!s_1, ...) vs definition, k <= n <= 12",
                   limit=30):
        for n in range(1, 13):
            z = nb.factorial_weighted(n)
            for k in range(1, n + 1):
                assert nb.bell_little_schroeder(n, k) == nb.partial_bell(n, k, z), (n, k)


def test_c03_bell_large_vs_definition():
    with criterion(3, "closed form B_{n,k}(1!r_0, 2!r_1, ...) vs definition, k <= n <= 10",
                   limit=30):
        for n in range(1, 11):
            z = nb.factorial_weighted(n, nb.large_schroeder)
            for k in range(1, n + 1):
                assert nb.bell_large_schroeder(n, k) == nb.partial_bell(n, k, z), (n, k)


def test_c04_convolution():
    with criterion(4, "convolution k!/(n+k)! B_{n+k,k}(s) = sum over compositions, k <= n <= 10"):
        for n in range(1, 11):
            for k in range(1, n + 1):
                lhs = (Fraction(nb.factorial(k), nb.factorial(n + k))
                       * nb.partial_bell(n + k, k, nb.factorial_weighted(n + k)))
                assert nb.exact_int(lhs, "convolution") == weak_composition_sum(n, k), (n, k)


def test_c05_table1():
    with criterion(5, "n-block table, alpha = 1..5, n = 1..8 (40 values)", limit=1):
        checked = 0
        for alpha in range(1, 6):
            for n in range(1, 9):
                assert str(nb.n_blocks_count(n, alpha)) == str(ref.N_BLOCKS[alpha][n - 1]), (n, alpha)
                checked += 1
        assert checked == 40


def test_c06_xi_bijection():
    with criterion(6, "xi on S_n(alpha), n <= 4, alpha <= 3", limit=120):
        for alpha, n in product(range(1, 4), range(1, 5)):
            paths = list(enum_rational_paths(n, alpha))
            dyck = list(enum_colored_dyck(n, alpha - 1, sigma_colors))
            assert len(paths) == len(dyck) == nb.rational_schroeder_count(n, alpha), (n, alpha)
            peaks = Counter()
            for p in paths:
                q = xi(p, alpha)
                assert xi_inv(q, alpha) == p, str(p)
                peaks[q.peaks] += 1
            for q in dyck:
                assert xi(xi_inv(q, alpha), alpha) == q, str(q)
            for k in range(1, n + 1):
                assert peaks[k] == nb.blocks_count(n, alpha, k), (n, alpha, k)


def test_c07_compositions():
    with criterion(7, "colored compositions <-> large Schroeder paths, n + k <= 8"):
        for n, k in product(range(1, 8), range(1, 8)):
            if n + k > 8 or k > n:
                continue
            comps = list(enum_colored_compositions(n, k))
            paths = [p for p in enum_large_schroeder_paths(n - 1) if diagonal_d_steps(p) == k - 1]
            assert len(comps) == len(paths) == nb.composition_count(n, k), (n, k)
            assert sorted(comp_to_path(c) for c in comps) == sorted(paths), (n, k)
            assert all(path_to_comp(comp_to_path(c)) == c for c in comps), (n, k)
            assert all(comp_to_path(path_to_comp(p)) == p for p in paths), (n, k)


def _tree_example():
    T = OrderedTree.parse
    q = ColoredDyckPath(
        (Block(2, T("2,0,0")), DOWN, Block(1, T("0")), DOWN, DOWN,
         Block(3, T("2,2,0,0,0")), DOWN, DOWN, Block(1, T("0")), DOWN, DOWN), a=None)
    return q, T("2,1,0,1,2,2,0,1,0,0")


def test_c08_trees():
    with criterion(8, "trees by generators, psi, n <= 5", limit=120):
        counts = []
        for n in range(1, 6):
            trees = list(enum_trees_by_generators(n))
            counts.append(len(trees))
            assert len(trees) == nb.tree_count(n)
            for t in trees:
                assert psi(psi_inv(t)) == t, str(t)
            for q in enum_colored_dyck(n, None, st_colors):
                assert psi_inv(psi(q)) == q, str(q)
            unary = Counter(t.unary + 1 for t in trees)
            for k in range(1, n + 1):
                assert unary[k] == nb.trees_with_unary(n, k), (n, k)
        assert counts == [1, 2, 7, 32, 166], counts
        q, tree = _tree_example()
        assert psi(q) == tree and psi_inv(tree) == q


def _map_example():
    coords = [(-1, -1), (1, -1), (1, 1), (-1, 1), (1, -3), (-1.6, 2.6), (-3, 1)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (2, 0), (1, 4), (3, 5), (5, 6), (6, 3)]
    return RotationSystem.from_embedding(coords, edges, (0, 1))


def test_c09_maps():
    with criterion(9, "outerplanar maps, phi, n <= 4; Catalan slice n <= 6", limit=120):
        counts = []
        for n in range(1, 5):
            maps = list(enum_maps(n))
            keys = {canonical_serialize(m) for m in maps}
            counts.append(len(maps))
            assert len(keys) == len(maps) == nb.map_count(n)
            comps = Counter(len(m.components) for m in maps)
            for k in range(1, n + 1):
                assert comps[k] == nb.maps_with_components(n, k), (n, k)
        assert counts == [1, 3, 13, 67], counts
        slice_ = [nb.maps_with_components(n, n) for n in range(1, 7)]
        assert slice_ == [1, 2, 5, 14, 42, 132], slice_
        rs = _map_example()
        q = phi(rs)
        assert q.word == "uuuuuuddduudddduuuuddddd"
        assert [str(b.color) for b in q.blocks] == ["n=2;diag=1-3", "n=0;diag=", "n=1;diag="]
        assert canonical_serialize(phi_inv(q)) == canonical_serialize(rs)


def test_c11_transform():
    with criterion(11, "transform_special(a,b,6) = bell_transform((a,b,-1,1), s, 6)"):
        s = [nb.little_schroeder(i) for i in range(6)]
        for a, b in product(range(3), repeat=2):
            direct = nb.bell_transform(nb.BellTransformParams(a, b, -1, 1), s, 6)
            assert nb.transform_special(a, b, 6) == direct, (a, b)


def test_c10_integrality():
    # runs last in this module, after every other criterion has been exercised
    now = nb.integrality_stats()
    checks = now["checks"] - _BASELINE["checks"]
    failures = now["failures"] - _BASELINE["failures"]
    with criterion(10, f"integrality: {checks} exact divisions checked, {failures} failures"):
        assert checks > 0, "no integrality assertions were made"
        assert failures == 0, f"{failures} integrality failures"


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
