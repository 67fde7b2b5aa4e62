"""Partial Bell polynomials at factorially weighted Schroeder numbers.

The closed forms are compared against the definition (a sum over integer
partitions), and the Bell transform with c = -1, d = 1 is shown to give the
tree and map sequences.
"""

from fractions import Fraction

from schroeder import numbers as nb
from schroeder.verify import weak_composition_sum

# B_{n,k}(1! s_0, 2! s_1, ...) as a triangle
print("B_{n,k}(1!s_0, 2!s_1, ...):")
for n in range(1, 8):
    row = [nb.bell_little_schroeder(n, k) for k in range(1, n + 1)]
    z = nb.factorial_weighted(n)
    same = all(v == nb.partial_bell(n, k, z) for k, v in enumerate(row, 1))
    print(f"  n={n}: {row}  definition agrees: {same}")

# the same for the large numbers
print("B_{n,k}(1!r_0, 2!r_1, ...):")
for n in range(1, 6):
    print(f"  n={n}:", [nb.bell_large_schroeder(n, k) for k in range(1, n + 1)])

# the convolution identity: k!/(n+k)! B_{n+k,k}(s) sums products of s over compositions
n, k = 5, 3
lhs = Fraction(nb.factorial(k), nb.factorial(n + k)) * nb.bell_little_schroeder(n + k, k)
print(f"\nconvolution at n={n}, k={k}: {lhs} == {weak_composition_sum(n, k)}")

# Bell transform rows
print("\nY_{a,b,-1,1}(s):")
for a in range(3):
    for b in range(3):
        print(f"  a={a} b={b}:", nb.transform_special(a, b, 7))
print("trees by generators  :", [nb.tree_count(n) for n in range(1, 8)])
print("outerplanar maps     :", [nb.map_count(n) for n in range(1, 8)])

# a parameter choice that is not integral
try:
    nb.bell_transform(nb.BellTransformParams(0, 0, 0, 1), [1, 1, 1], 3)
except nb.IntegralityError as exc:
    print(f"\nY_{{0,0,0,1}}(1,1,1): stops at n={exc.index} because {exc}")
