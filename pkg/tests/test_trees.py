from collections import Counter
from functools import lru_cache

import pytest

from schroeder import numbers as nb
from schroeder import reference as ref
from schroeder.paths import DOWN, Block, ColoredDyckPath, enum_colored_dyck
from schroeder.trees import (
    OrderedTree,
    enum_st,
    enum_trees_by_generators,
    is_schroeder_tree,
    psi,
    psi_inv,
    st_colors,
)

T = OrderedTree.parse


@lru_cache(maxsize=None)
def trees_oracle(n):
    """Ordered trees with n generators: leaf, unary over a tree, or >= 2 subtrees."""
    if n <= 0:
        return 0
    at_least_two = sum(trees_oracle(f) * sequences(n - f) for f in range(1, n))
    return (n == 1) + trees_oracle(n - 1) + at_least_two


@lru_cache(maxsize=None)
def sequences(n):
    # nonempty sequences of trees with n generators in total
    return trees_oracle(n) + sum(trees_oracle(f) * sequences(n - f) for f in range(1, n))


def worked_tree_example():
    return ColoredDyckPath(
        (Block(2, T("2,0,0")), DOWN, Block(1, T("0")), DOWN, DOWN,
         Block(3, T("2,2,0,0,0")), DOWN, DOWN, Block(1, T("0")), DOWN, DOWN),
        a=None,
    )


def test_tree_parse_and_stats():
    t = T("2,1,0,1,2,2,0,1,0,0")
    assert str(t) == "2,1,0,1,2,2,0,1,0,0"
    assert (t.leaves, t.unary, t.generators) == (4, 3, 7)
    assert t.children()[0] == [1, 3]
    for bad in ["", "1", "2,0", "0,0", "x"]:
        with pytest.raises(ValueError):
            T(bad)


@pytest.mark.parametrize("n,count", [(0, 1), (2, 3), (3, 11)])
def test_enum_st(n, count):
    trees = list(enum_st(n))
    assert len(trees) == count
    assert len(set(trees)) == count
    assert all(is_schroeder_tree(t, n) for t in trees)


def test_enum_st_matches_little_schroeder():
    for n in range(8):
        assert sum(1 for _ in enum_st(n)) == nb.little_schroeder(n)


def test_generator_trees_small():
    assert [str(t) for t in enum_trees_by_generators(1)] == ["0"]
    assert {str(t) for t in enum_trees_by_generators(2)} == {"1,0", "2,0,0"}
    assert sum(1 for _ in enum_trees_by_generators(3)) == 7


def test_generator_counts_against_oracle():
    for n in range(1, 8):
        trees = list(enum_trees_by_generators(n))
        assert len(trees) == len(set(trees)) == trees_oracle(n) == nb.tree_count(n)
        assert all(t.generators == n for t in trees)
    assert [trees_oracle(n) for n in range(1, 9)] == list(ref.TREES)


def test_psi_small():
    (leaf,) = enum_colored_dyck(1, None, st_colors)
    assert leaf.word == "ud" and psi(leaf) == T("0")
    cherry = ColoredDyckPath((Block(2, T("2,0,0")), DOWN, DOWN), a=None)
    assert psi(cherry) == T("2,0,0")
    chain = ColoredDyckPath((Block(1, T("0")), DOWN, Block(1, T("0")), DOWN), a=None)
    assert psi(chain) == T("1,0")


def test_psi_inv_chain_is_all_peaks():
    for n in range(1, 7):
        chain = T(",".join(["1"] * (n - 1) + ["0"]))
        q = psi_inv(chain)
        assert q.peaks == n and q.word == "ud" * n


def test_worked_tree_example():
    q = worked_tree_example()
    assert q.word == "uududduuuddudd"
    t = psi(q)
    assert t == T("2,1,0,1,2,2,0,1,0,0")
    assert t.generators == 7
    assert psi_inv(t) == q


def test_psi_round_trips():
    for n in range(1, 6):
        paths = list(enum_colored_dyck(n, None, st_colors))
        trees = [psi(q) for q in paths]
        assert len(set(trees)) == len(paths) == nb.tree_count(n)
        assert set(trees) == set(enum_trees_by_generators(n))
        assert all(psi_inv(t) == q for q, t in zip(paths, trees))
        unary = Counter(t.unary + 1 for t in trees)
        peaks = Counter(q.peaks for q in paths)
        for k in range(1, n + 1):
            assert unary[k] == peaks[k] == nb.trees_with_unary(n, k)


def test_psi_rejects_block_mode():
    q = ColoredDyckPath((Block(1, T("0")), DOWN), a=1)
    with pytest.raises(ValueError):
        psi(q)
