"""Ordered rooted trees and the Dyck-path insertion bijection.

A tree is stored as the list of child counts of its nodes in depth-first
preorder, e.g. ``(2, 0, 0)`` for the cherry. Generators are leaves and
nodes with exactly one child.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .paths import DOWN, Block, ColoredDyckPath

__all__ = [
    "OrderedTree",
    "is_schroeder_tree",
    "enum_st",
    "enum_trees_by_generators",
    "st_colors",
    "psi",
    "psi_inv",
]


@dataclass(frozen=True, order=True)
class OrderedTree:
    preorder: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(int(c) for c in self.preorder)
        object.__setattr__(self, "preorder", seq)
        need = 1
        for i, c in enumerate(seq):
            if need <= 0 or c < 0:
                raise ValueError(f"invalid preorder sequence {seq}")
            need += c - 1
        if need != 0:
            raise ValueError(f"invalid preorder sequence {seq}")

    @classmethod
    def parse(cls, text: str) -> "OrderedTree":
        return cls(tuple(int(t) for t in text.split(",")))

    def __str__(self) -> str:
        return ",".join(map(str, self.preorder))

    def __len__(self) -> int:
        return len(self.preorder)

    @property
    def leaves(self) -> int:
        return self.preorder.count(0)

    @property
    def unary(self) -> int:
        return self.preorder.count(1)

    @property
    def generators(self) -> int:
        return self.leaves + self.unary

    def children(self) -> list[list[int]]:
        """Child lists indexed by preorder position."""
        kids: list[list[int]] = [[] for _ in self.preorder]
        stack: list[int] = []
        for v, c in enumerate(self.preorder):
            if stack:
                parent = stack[-1]
                kids[parent].append(v)
                if len(kids[parent]) == self.preorder[parent]:
                    stack.pop()
            if c:
                stack.append(v)
        return kids


def is_schroeder_tree(t: OrderedTree, n: int | None = None) -> bool:
    """No unary node, and ``n + 1`` leaves when ``n`` is given."""
    if 1 in t.preorder:
        return False
    return n is None or t.leaves == n + 1


def _preorders(max_nodes: int, allowed, accept, prune) -> Iterator[tuple[int, ...]]:
    seq: list[int] = []

    def rec(need: int):
        if need == 0:
            if accept(seq):
                yield tuple(seq)
            return
        if len(seq) + need > max_nodes:
            return
        for c in allowed(seq, need):
            seq.append(c)
            if not prune(seq, need + c - 1):
                yield from rec(need + c - 1)
            seq.pop()

    yield from rec(1)


def enum_st(n: int) -> Iterator[OrderedTree]:
    """Trees without unary nodes having ``n + 1`` leaves, in lexicographic preorder."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    leaves = n + 1

    def allowed(seq, need):
        used = seq.count(0)
        # every open slot still needs at least one leaf
        top = leaves - used - need + 1
        return [0] + list(range(2, top + 1))

    def prune(seq, need):
        return seq.count(0) + need > leaves

    for seq in _preorders(2 * leaves - 1, allowed, lambda s: s.count(0) == leaves, prune):
        yield OrderedTree(seq)


def enum_trees_by_generators(n: int) -> Iterator[OrderedTree]:
    """All ordered trees with exactly ``n`` generators.

    Works directly on preorder sequences of at most ``2n - 1`` nodes and
    never consults the bijection, so it can serve as an oracle for it.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    def gens(seq):
        return sum(1 for c in seq if c <= 1)

    def allowed(seq, need):
        return range(0, n + 1)

    def prune(seq, need):
        return gens(seq) + need > n or len(seq) + need > 2 * n - 1

    for seq in _preorders(2 * n - 1, allowed, lambda s: gens(s) == n, prune):
        yield OrderedTree(seq)


def st_colors(j: int) -> list[OrderedTree]:
    """Color domain for ascents of length ``j``: ``ST_{j-1}``."""
    return list(enum_st(j - 1))


# ---------------------------------------------------------------------------
# Insertion bijection
# ---------------------------------------------------------------------------

class _Node:
    __slots__ = ("kids",)

    def __init__(self):
        self.kids: list[_Node] = []


def _build(t: OrderedTree) -> _Node:
    nodes = [_Node() for _ in t.preorder]
    for v, kids in enumerate(t.children()):
        nodes[v].kids = [nodes[w] for w in kids]
    return nodes[0]


def _walk(root: _Node) -> list[_Node]:
    out, stack = [], [root]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(reversed(v.kids))
    return out


def _encode(root: _Node) -> OrderedTree:
    return OrderedTree(tuple(len(v.kids) for v in _walk(root)))


def psi(q: ColoredDyckPath) -> OrderedTree:
    """Assemble the tree of a free-mode Dyck path colored by trees.

    Start from the first ascent's tree. After each ascent, its descent of
    length ``j`` moves a cursor ``j`` leaves forward in the depth-first order
    of the tree built so far; the next ascent's tree hangs from the leaf
    reached. The last descent must land on the last leaf.
    """
    if q.a is not None:
        raise ValueError("psi expects a free-mode colored Dyck path")
    runs = q.runs()
    for block, _ in runs:
        color = block.color
        if not isinstance(color, OrderedTree) or not is_schroeder_tree(color, block.length - 1):
            raise ValueError(f"ascent of length {block.length} has invalid color {color!r}")
    root = _build(runs[0][0].color)
    cursor: _Node | None = None
    for i, (_, descent) in enumerate(runs):
        order = _walk(root)
        start = 0 if cursor is None else order.index(cursor) + 1
        ahead = [v for v in order[start:] if not v.kids]
        if descent > len(ahead):
            raise ValueError("descent runs past the last leaf")
        target = ahead[descent - 1]
        if i + 1 < len(runs):
            target.kids.append(_build(runs[i + 1][0].color))
            cursor = target
        elif descent != len(ahead):
            raise ValueError("final descent does not reach the last leaf")
    return _encode(root)


def _truncate(t: OrderedTree, kids: list[list[int]], r: int) -> OrderedTree:
    # subtree at r with every unary node cut down to a leaf
    seq, stack = [], [r]
    while stack:
        v = stack.pop()
        if t.preorder[v] == 1:
            seq.append(0)
            continue
        seq.append(t.preorder[v])
        stack.extend(reversed(kids[v]))
    return OrderedTree(tuple(seq))


def psi_inv(t: OrderedTree) -> ColoredDyckPath:
    """Split a tree into maximal unary-free pieces and read off the colored path.

    Generators are visited in preorder; each contributes a down-step, and a
    unary generator is followed by the ascent of the piece hanging below it.
    """
    kids = t.children()

    def ascent(r: int) -> Block:
        piece = _truncate(t, kids, r)
        return Block(piece.leaves, piece)

    tokens: list = [ascent(0)]
    for v, c in enumerate(t.preorder):
        if c <= 1:
            tokens.append(DOWN)
            if c == 1:
                tokens.append(ascent(kids[v][0]))
    return ColoredDyckPath(tuple(tokens), None)
