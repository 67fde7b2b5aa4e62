from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schroeder import numbers as nb
from schroeder.paths import (
    DOWN,
    Block,
    ColoredDyckPath,
    LatticePath,
    comp_to_path,
    contacts,
    diagonal_d_steps,
    enum_colored_compositions,
    enum_colored_dyck,
    enum_rational_paths,
    enum_schroeder_paths,
    enum_sp_wedge,
    is_rational_path,
    is_schroeder_path,
    is_sp_wedge,
    path_to_comp,
    sigma_colors,
    xi,
    xi_inv,
)


def words(n_steps):
    for letters in product("DEN", repeat=n_steps):
        yield "".join(letters)


def brute_rational(n, alpha):
    """Filter every word of the right step counts; ignores the DFS entirely."""
    out = []
    for length in range(n, n + alpha * n + 1):
        for w in words(length):
            if is_rational_path(LatticePath(w), n, alpha):
                out.append(w)
    return sorted(out)


# -- lattice paths ----------------------------------------------------------------

def test_path_basics():
    p = LatticePath("NDE")
    assert p.endpoint == (2, 2)
    assert p.points() == [(0, 0), (0, 1), (1, 2), (2, 2)]
    assert str(p + LatticePath("D")) == "NDED"
    with pytest.raises(ValueError):
        LatticePath("NX")


def test_schroeder_predicate():
    assert is_schroeder_path(LatticePath(""), 0)
    assert is_schroeder_path(LatticePath("NE"), 1)
    assert not is_schroeder_path(LatticePath("D"), 1)
    assert not is_schroeder_path(LatticePath("EN"), 1)
    assert is_schroeder_path(LatticePath("NDE"), 2)


@pytest.mark.parametrize("n,count", [(0, 1), (2, 3), (4, 45)])
def test_enum_schroeder_paths(n, count):
    paths = list(enum_schroeder_paths(n))
    assert len(paths) == count
    assert paths == sorted(paths)
    assert all(is_schroeder_path(p, n) for p in paths)


def test_sp_wedge_small():
    assert [str(p) for p in enum_sp_wedge(1)] == ["D", "NE"]
    assert len(list(enum_sp_wedge(2))) == 2
    assert len(list(enum_sp_wedge(3))) == 6
    assert is_sp_wedge(LatticePath("NDE"), 2)
    assert not is_sp_wedge(LatticePath("NENE"), 2)


def test_rational_examples():
    assert {str(p) for p in enum_rational_paths(1, 1)} == {"D", "NE"}
    assert {str(p) for p in enum_rational_paths(1, 2)} == {"NNE", "ND"}
    assert len(list(enum_rational_paths(4, 2))) == nb.rational_schroeder_count(4, 2)


@pytest.mark.parametrize("n,alpha", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
def test_rational_enumeration_against_brute_force(n, alpha):
    dfs = [str(p) for p in enum_rational_paths(n, alpha)]
    assert dfs == sorted(dfs)
    assert sorted(dfs) == brute_rational(n, alpha)


def test_contacts_and_diagonals():
    assert contacts(LatticePath("NDNNNNENDE"), 2) == 2
    assert diagonal_d_steps(LatticePath("NDEDDNNNEEED")) == 3


# -- colored compositions -------------------------------------------------------

def test_composition_worked_example():
    c = path_to_comp(LatticePath("NDEDDNNNEEED"))
    assert c.sizes == (3, 1, 4, 1)
    assert str(c) == "3:NDE+1:+4:NNNEEE+1:"
    assert str(comp_to_path(c)) == "NDEDDNNNEEED"


def test_composition_edge_cases():
    for k in range(1, 6):
        (c,) = [c for c in enum_colored_compositions(k, k)]
        assert str(comp_to_path(c)) == "D" * (k - 1)
    (single,) = enum_colored_compositions(1, 1)
    assert str(comp_to_path(single)) == ""
    assert path_to_comp(LatticePath("")).sizes == (1,)


def test_compositions_exhaustive_small():
    for m in range(1, 7):
        for k in range(1, m + 1):
            comps = list(enum_colored_compositions(m, k))
            assert len(comps) == nb.composition_count(m, k)
            images = {comp_to_path(c) for c in comps}
            assert len(images) == len(comps)
            for c in comps:
                assert path_to_comp(comp_to_path(c)) == c


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 7), st.data())
def test_path_to_comp_round_trip(n, data):
    paths = list(enum_schroeder_paths(n))
    # any large Schroeder path: insert diagonal D steps between little ones
    parts = data.draw(st.lists(st.sampled_from(paths), min_size=1, max_size=3))
    p = LatticePath("D".join(str(x) for x in parts))
    c = path_to_comp(p)
    assert len(c.parts) == len(parts)
    assert comp_to_path(c) == p


# -- colored Dyck paths ------------------------------------------------------------

def test_colored_dyck_validation():
    with pytest.raises(ValueError):
        ColoredDyckPath((DOWN, Block(1, "D")), a=1)  # starts below the axis
    with pytest.raises(ValueError):
        ColoredDyckPath((Block(1, "x"), Block(1, "y"), DOWN, DOWN), a=None)  # adjacent free blocks
    with pytest.raises(ValueError):
        ColoredDyckPath((Block(2, "x"), DOWN), a=1)  # does not return


def test_colored_dyck_words():
    q = ColoredDyckPath((Block(2, "NDE"), Block(1, "NE"), DOWN, DOWN, DOWN, Block(1, "D"), DOWN),
                        a=1)
    assert q.word == "uuuudduudddduudd"
    assert q.peaks == 3 and q.semilength == 8 and q.n == 4
    assert q.returns() == 2
    free = ColoredDyckPath((Block(2, "t"), DOWN, DOWN), a=None)
    assert free.word == "uudd"


def test_colored_dyck_record_round_trip():
    q = ColoredDyckPath((Block(1, LatticePath("D")), Block(1, LatticePath("NE"))), a=0)
    rec = q.to_record()
    assert rec == {"mode": "block:0", "word": "udud", "tokens": ["B1", "B1"],
                   "colors": ["D", "NE"]}
    assert ColoredDyckPath.from_record(rec, LatticePath) == q
    with pytest.raises(ValueError):
        ColoredDyckPath.from_record(dict(rec, colors=["D"]), LatticePath)
    with pytest.raises(ValueError):
        ColoredDyckPath.from_record(dict(rec, colors=["D", "NE", "D"]), LatticePath)


def test_enum_colored_dyck_small():
    (only,) = enum_colored_dyck(1, None, {1: ["leaf"]})
    assert only.word == "ud"
    (edge,) = enum_colored_dyck(1, 1, {1: ["edge"]})
    assert edge.word == "uudd"
    assert len(list(enum_colored_dyck(2, 1, sigma_colors))) == 10
    with pytest.raises(ValueError):
        list(enum_colored_dyck(2, 1, {1: ["x"]}))


# -- the bijection xi ------------------------------------------------------------------

def test_xi_small_examples():
    q = xi(LatticePath("ND"), 2)
    assert q.word == "uudd" and [str(b.color) for b in q.blocks] == ["D"]
    q = xi(LatticePath("NNE"), 2)
    assert q.word == "uudd" and [str(b.color) for b in q.blocks] == ["NE"]
    single = ColoredDyckPath((Block(1, LatticePath("D")), DOWN, DOWN), a=2)
    assert str(xi_inv(single, 3)) == "NND"


def test_xi_worked_example():
    p = LatticePath("NDNNNNENDE")
    q = xi(p, 2)
    assert q.word == "uuuudduudddduudd"
    assert [str(b.color) for b in q.blocks] == ["NDE", "NE", "D"]
    assert [b.length for b in q.blocks] == [2, 1, 1]
    assert q.returns() == contacts(p, 2) == 2
    assert xi_inv(q, 2) == p


@pytest.mark.parametrize("alpha", [1, 2, 3])
def test_xi_bijective(alpha):
    for n in range(1, 4):
        paths = list(enum_rational_paths(n, alpha))
        images = [xi(p, alpha) for p in paths]
        assert len(set(images)) == len(paths)
        assert set(images) == set(enum_colored_dyck(n, alpha - 1, sigma_colors))
        assert all(xi_inv(q, alpha) == p for p, q in zip(paths, images))
        peaks = Counter(q.peaks for q in images)
        for k in range(1, n + 1):
            assert peaks[k] == nb.blocks_count(n, alpha, k)


def test_xi_rejects_bad_input():
    with pytest.raises(ValueError):
        xi(LatticePath("NDNNNNENDE"), 1)
    with pytest.raises(ValueError):
        xi(LatticePath("EN"), 1)
