"""Ordered trees counted by generators, and the insertion bijection psi.

A generator is a leaf or a node with one child. Colored Dyck paths whose
ascents of length j carry a Schroeder tree with j leaves encode them.
"""

from collections import Counter

from schroeder import numbers as nb
from schroeder.paths import DOWN, Block, ColoredDyckPath, enum_colored_dyck
from schroeder.trees import OrderedTree, enum_trees_by_generators, psi, psi_inv, st_colors

T = OrderedTree.parse

for n in range(1, 4):
    print(f"n={n}:", [str(t) for t in enum_trees_by_generators(n)])

# the worked example: four ascents, three of them colored by small trees
q = ColoredDyckPath(
    (Block(2, T("2,0,0")), DOWN, Block(1, T("0")), DOWN, DOWN,
     Block(3, T("2,2,0,0,0")), DOWN, DOWN, Block(1, T("0")), DOWN, DOWN), a=None)
t = psi(q)
print(f"\n{q}\n  -> tree {t} with {t.generators} generators and {t.unary} unary nodes")
print("  inverse:", psi_inv(t))

# ascents correspond to unary nodes plus one
print("\n n  count  by ascents k = 1..n")
for n in range(1, 7):
    trees = [psi(q) for q in enum_colored_dyck(n, None, st_colors)]
    by_unary = Counter(t.unary + 1 for t in trees)
    row = [by_unary[k] for k in range(1, n + 1)]
    assert row == [nb.trees_with_unary(n, k) for k in range(1, n + 1)]
    print(f"{n:>2} {len(trees):>6}  {row}")
