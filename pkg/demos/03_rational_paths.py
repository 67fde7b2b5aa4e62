"""Rational Schroeder paths of slope alpha and the bijection xi.

Every path to (n, alpha n) becomes a Dyck path built from blocks
u^(alpha j) d^j, each block colored by a wedge path of size j.
"""

from collections import Counter

from schroeder import numbers as nb
from schroeder.paths import LatticePath, enum_colored_dyck, enum_rational_paths, sigma_colors, xi, xi_inv

alpha = 2
print(f"slope {alpha}: paths to (1, 2):", [str(p) for p in enum_rational_paths(1, alpha)])
for p in enum_rational_paths(1, alpha):
    print(f"  {p} -> {xi(p, alpha)}")

# the example path with three blocks
p = LatticePath("NDNNNNENDE")
q = xi(p, alpha)
print(f"\n{p} -> {q}")
print("back again:", xi_inv(q, alpha))

# counts and block distributions
print("\n alpha  n  #paths  #colored Dyck  formula   by blocks k = 1..n")
for alpha in range(1, 4):
    for n in range(1, 5):
        paths = list(enum_rational_paths(n, alpha))
        dyck = sum(1 for _ in enum_colored_dyck(n, alpha - 1, sigma_colors))
        blocks = Counter(xi(p, alpha).peaks for p in paths)
        row = [blocks[k] for k in range(1, n + 1)]
        assert row == [nb.blocks_count(n, alpha, k) for k in range(1, n + 1)]
        print(f"{alpha:>6} {n:>2} {len(paths):>7} {dyck:>14} {nb.rational_schroeder_count(n, alpha):>8}   {row}")

# paths made only of wedge blocks
print("\npaths with n blocks:")
for alpha in range(1, 6):
    print(f"  alpha={alpha}:", [nb.n_blocks_count(n, alpha) for n in range(1, 9)])
