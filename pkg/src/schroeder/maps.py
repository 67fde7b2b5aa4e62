"""Polygon dissections and simple rooted outerplanar maps.

A dissection of the convex ``(n+2)``-gon has vertices ``1..n+2`` in
counterclockwise order, root vertex ``1`` and base edge ``{1, n+2}``; its
boundary walk from the root visits ``1, 2, ..., n+2``. ``n = 0`` is the
single edge.

An :class:`OuterplanarMap` is stored the way the bijection builds it: a
list of dissections, each glued by its root vertex into a corner of the
outer face of the map assembled so far. :meth:`OuterplanarMap.rotation_system`
realizes it as a :class:`RotationSystem` (cyclic neighbor orders plus a root
dart). :func:`phi` and :func:`canonical_serialize` only look at the rotation
system, so they also accept maps given directly by an embedding.

Orientation convention: rotations list neighbors counterclockwise and a face
is traced by leaving each vertex along the successor of the edge it was
entered by. Traced from the root dart, this walks the outer face.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

import networkx as nx

from .paths import DOWN, Block, ColoredDyckPath, enum_colored_dyck

__all__ = [
    "Dissection",
    "enum_dissections",
    "dissection_colors",
    "RotationSystem",
    "OuterplanarMap",
    "phi",
    "phi_inv",
    "canonical_serialize",
    "enum_maps",
]


def _crossing(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    (a, b), (c, d) = d1, d2
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True, order=True)
class Dissection:
    n: int
    diagonals: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        m = self.n + 2
        diags = tuple(sorted(tuple(sorted(map(int, d))) for d in self.diagonals))
        object.__setattr__(self, "diagonals", diags)
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if len(set(diags)) != len(diags):
            raise ValueError(f"repeated diagonal in {diags}")
        for a, b in diags:
            if not (1 <= a and b <= m and 2 <= b - a <= m - 2):
                raise ValueError(f"{a}-{b} is not a diagonal of the {m}-gon")
        for d1, d2 in combinations(diags, 2):
            if _crossing(d1, d2):
                raise ValueError(f"diagonals {d1} and {d2} cross")

    @property
    def vertices(self) -> int:
        return self.n + 2

    @classmethod
    def parse(cls, text: str) -> "Dissection":
        head, _, tail = text.partition(";")
        if not head.startswith("n=") or not tail.startswith("diag="):
            raise ValueError(f"malformed dissection {text!r}")
        body = tail[len("diag="):]
        diags = [tuple(int(v) for v in d.split("-")) for d in body.split(",") if d]
        return cls(int(head[2:]), tuple(diags))

    def __str__(self) -> str:
        return f"n={self.n};diag=" + ",".join(f"{a}-{b}" for a, b in self.diagonals)

    def rotation(self, v: int) -> list[int]:
        """Counterclockwise neighbors of polygon vertex ``v``, starting at ``v+1``."""
        m = self.vertices
        if m == 2:
            return [3 - v]
        nbrs = {v % m + 1, (v - 2) % m + 1}
        nbrs.update(b if a == v else a for a, b in self.diagonals if v in (a, b))
        return sorted(nbrs, key=lambda w: (w - v) % m)


def enum_dissections(n: int) -> Iterator[Dissection]:
    """All noncrossing diagonal sets of the ``(n+2)``-gon; ``s_n`` of them."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    m = n + 2
    cands = [(a, b) for a in range(1, m + 1) for b in range(a + 2, m + 1)
             if not (a == 1 and b == m)]
    chosen: list[tuple[int, int]] = []

    def rec(i: int):
        if i == len(cands):
            yield Dissection(n, tuple(chosen))
            return
        yield from rec(i + 1)
        d = cands[i]
        if not any(_crossing(d, e) for e in chosen):
            chosen.append(d)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


def dissection_colors(j: int) -> list[Dissection]:
    """Color domain for blocks of length ``j``: components with ``j + 1`` vertices."""
    return list(enum_dissections(j - 1))


# ---------------------------------------------------------------------------
# Rotation systems
# ---------------------------------------------------------------------------

@dataclass
class RotationSystem:
    """``rot[v]`` lists the neighbors of ``v`` counterclockwise; ``root`` is the
    first dart ``(v0, w0)`` of the outer boundary walk."""

    rot: list[list[int]]
    root: tuple[int, int]

    @classmethod
    def from_embedding(cls, coords: Sequence[tuple[float, float]],
                       edges: Iterable[tuple[int, int]], root: tuple[int, int]) -> "RotationSystem":
        """Rotation system of a straight-line drawing (neighbors sorted by angle)."""
        nbrs: list[list[int]] = [[] for _ in coords]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)

        def angle(v, w):
            (x0, y0), (x1, y1) = coords[v], coords[w]
            return math.atan2(y1 - y0, x1 - x0)

        rot = [sorted(ns, key=lambda w, v=v: angle(v, w)) for v, ns in enumerate(nbrs)]
        return cls(rot, root)

    @property
    def vertices(self) -> int:
        return len(self.rot)

    def edges(self) -> set[frozenset[int]]:
        return {frozenset((v, w)) for v, ns in enumerate(self.rot) for w in ns}

    def succ(self, v: int, w: int) -> int:
        ns = self.rot[v]
        return ns[(ns.index(w) + 1) % len(ns)]

    def trace(self, dart: tuple[int, int]) -> list[tuple[int, int]]:
        """Darts of the face starting with ``dart``."""
        out = [dart]
        u, v = dart
        while True:
            u, v = v, self.succ(v, u)
            if (u, v) == dart:
                return out
            out.append((u, v))

    def outer_walk(self) -> list[tuple[int, int]]:
        """Arrivals ``(vertex, came_from)`` along the outer face; the last one
        is the return to the root corner."""
        return [(v, u) for u, v in self.trace(self.root)]

    def faces(self) -> int:
        seen: set[tuple[int, int]] = set()
        count = 0
        for v, ns in enumerate(self.rot):
            for w in ns:
                if (v, w) not in seen:
                    seen.update(self.trace((v, w)))
                    count += 1
        return count

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertices))
        g.add_edges_from(tuple(e) for e in self.edges())
        return g

    def check(self) -> None:
        """Raise unless this is a simple, connected, plane, outerplanar map."""
        for v, ns in enumerate(self.rot):
            if v in ns or len(set(ns)) != len(ns):
                raise ValueError(f"vertex {v} has a loop or a multiple edge")
            for w in ns:
                if v not in self.rot[w]:
                    raise ValueError(f"edge {v}-{w} is not symmetric")
        if self.root[1] not in self.rot[self.root[0]]:
            raise ValueError("root dart is not an edge")
        g = self.graph()
        if not nx.is_connected(g):
            raise ValueError("map is not connected")
        if self.vertices - g.number_of_edges() + self.faces() != 2:
            raise ValueError("rotation system is not planar")
        if {v for v, _ in self.outer_walk()} != set(range(self.vertices)):
            raise ValueError("some vertex is not on the outer face")


# ---------------------------------------------------------------------------
# Outerplanar maps built from dissections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OuterplanarMap:
    """Components ``(dissection, attach)``.

    ``attach`` is 1-based into the outer walk (:meth:`RotationSystem.outer_walk`)
    of the map made of the preceding components: the component's root vertex
    is merged with that arrival's vertex, inside that corner. The first
    component carries ``attach = 0``.
    """

    components: tuple[tuple[Dissection, int], ...]
    _rs: RotationSystem | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        comps = tuple((d, int(a)) for d, a in self.components)
        object.__setattr__(self, "components", comps)
        if not comps or comps[0][1] != 0:
            raise ValueError("the first component must have attach index 0")
        object.__setattr__(self, "_rs", _realize(comps))

    @property
    def n(self) -> int:
        return self._rs.vertices - 1

    def rotation_system(self) -> RotationSystem:
        return RotationSystem([list(ns) for ns in self._rs.rot], self._rs.root)


def _realize(comps: Sequence[tuple[Dissection, int]]) -> RotationSystem:
    first = comps[0][0]
    rot = [[w - 1 for w in first.rotation(v)] for v in range(1, first.vertices + 1)]
    rs = RotationSystem(rot, (0, rot[0][0]))
    for diss, attach in comps[1:]:
        walk = rs.outer_walk()
        if not 1 <= attach <= len(walk):
            raise ValueError(f"attach index {attach} outside the walk of length {len(walk)}")
        v, came_from = walk[attach - 1]
        base = len(rs.rot)
        # polygon label 1 becomes v, labels 2..m become fresh vertices
        ids = {1: v}
        ids.update({lab: base + lab - 2 for lab in range(2, diss.vertices + 1)})
        for lab in range(2, diss.vertices + 1):
            rs.rot.append([ids[w] for w in diss.rotation(lab)])
        pos = rs.rot[v].index(came_from) + 1
        rs.rot[v][pos:pos] = [ids[w] for w in diss.rotation(1)]
    return rs


MapLike = Union[OuterplanarMap, RotationSystem]


def _rotation_system(m: MapLike) -> RotationSystem:
    return m.rotation_system() if isinstance(m, OuterplanarMap) else m


def _component_dissection(rs: RotationSystem, comp: set[frozenset[int]],
                          dart: tuple[int, int]) -> Dissection:
    # boundary of one biconnected component, traced inside that component only
    def succ(v, w):
        ns = [x for x in rs.rot[v] if frozenset((v, x)) in comp]
        return ns[(ns.index(w) + 1) % len(ns)]

    cycle = [dart[0]]
    u, v = dart
    while v != dart[0]:
        cycle.append(v)
        u, v = v, succ(v, u)
    label = {x: i + 1 for i, x in enumerate(cycle)}
    if len(label) != len(cycle):
        raise ValueError("component boundary is not a simple cycle")
    m = len(cycle)
    sides = {frozenset((label[cycle[i]], label[cycle[(i + 1) % m]])) for i in range(m)}
    diags = [tuple(sorted(label[x] for x in e)) for e in comp
             if frozenset(label[x] for x in e) not in sides]
    return Dissection(m - 2, tuple(diags))


def phi(m: MapLike) -> ColoredDyckPath:
    """Walk the outer face from the root and record the colored Dyck path.

    Entering an unseen biconnected component with ``i + 1`` vertices emits
    a block of length ``i`` (``u^(2i) d^i``) colored by that component; every
    other arrival at a vertex emits a down-step, except the final return to
    the root corner.
    """
    rs = _rotation_system(m)
    rs.check()
    comp_of: dict[frozenset[int], int] = {}
    comps: list[set[frozenset[int]]] = []
    for idx, edges in enumerate(nx.biconnected_component_edges(rs.graph())):
        es = {frozenset(e) for e in edges}
        comps.append(es)
        for e in es:
            comp_of[e] = idx
    seen: set[int] = set()
    tokens: list = []

    def depart(v: int, w: int):
        c = comp_of[frozenset((v, w))]
        if c in seen:
            tokens.append(DOWN)
        else:
            seen.add(c)
            diss = _component_dissection(rs, comps[c], (v, w))
            tokens.append(Block(diss.vertices - 1, diss))

    depart(*rs.root)
    walk = rs.outer_walk()
    for v, u in walk[:-1]:
        depart(v, rs.succ(v, u))
    return ColoredDyckPath(tuple(tokens), 1)


def phi_inv(q: ColoredDyckPath) -> OuterplanarMap:
    """Glue the coloring dissections along the path.

    After a block of length ``i`` followed by ``e`` bare down-steps the next
    component is merged at the ``(e + 1)``-th vertex reached on the outer
    walk, counted from the previous merge point.
    """
    if q.a != 1:
        raise ValueError("phi_inv expects a block-mode 1 colored Dyck path")
    runs = q.runs()
    for block, _ in runs:
        color = block.color
        if not isinstance(color, Dissection) or color.vertices != block.length + 1:
            raise ValueError(f"block of length {block.length} has invalid color {color!r}")
    comps: list[tuple[Dissection, int]] = [(runs[0][0].color, 0)]
    cursor = 0
    rs = _realize(comps)
    for i, (_, extra) in enumerate(runs):
        walk_len = len(rs.outer_walk())
        target = cursor + extra + 1
        if i + 1 == len(runs):
            if target != walk_len:
                raise ValueError("path does not close the boundary walk")
            break
        if target > walk_len:
            raise ValueError("merge point beyond the end of the boundary walk")
        comps.append((runs[i + 1][0].color, target))
        cursor = target
        rs = _realize(comps)
    return OuterplanarMap(tuple(comps))


def canonical_serialize(m: MapLike) -> bytes:
    """Canonical byte string of a rooted map.

    Vertices are relabeled in order of first arrival on the outer walk (root
    vertex 0); each rotation is listed starting from the neighbor through
    which the vertex was first reached (the root dart for vertex 0). Two
    rooted maps are isomorphic exactly when their strings agree.
    """
    rs = _rotation_system(m)
    walk = rs.outer_walk()
    label = {rs.root[0]: 0}
    first_from = {rs.root[0]: rs.root[1]}
    for v, u in walk:
        if v not in label:
            label[v] = len(label)
            first_from[v] = u
    if len(label) != rs.vertices:
        raise ValueError("some vertex is not on the outer face")
    rows = []
    for v in sorted(label, key=label.get):
        ns = rs.rot[v]
        i = ns.index(first_from[v])
        rows.append(",".join(str(label[w]) for w in ns[i:] + ns[:i]))
    walk_txt = ",".join(str(label[v]) for v, _ in walk)
    text = f"V={rs.vertices};walk={walk_txt};rot=" + "|".join(rows)
    return text.encode("ascii")


def enum_maps(n: int) -> Iterator[OuterplanarMap]:
    """All maps of ``M_n``, built from the colored Dyck paths.

    Raises ``AssertionError`` if two paths produce the same map.
    """
    seen: set[bytes] = set()
    for q in enum_colored_dyck(n, 1, dissection_colors):
        m = phi_inv(q)
        key = canonical_serialize(m)
        if key in seen:
            raise AssertionError(f"two paths give the same map {key.decode()}")
        seen.add(key)
        yield m
