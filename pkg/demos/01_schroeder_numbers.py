"""Little and large Schroeder numbers, three ways.

Counts the same objects by formula, by path enumeration and by trees and
dissections, and prints them side by side.
"""

from schroeder import numbers as nb
from schroeder.maps import enum_dissections
from schroeder.paths import enum_large_schroeder_paths, enum_schroeder_paths, enum_sp_wedge
from schroeder.trees import enum_st

print(" n | s_n (formula) | paths | trees | dissections | r_n | sigma_n")
for n in range(8):
    paths = sum(1 for _ in enum_schroeder_paths(n))
    trees = sum(1 for _ in enum_st(n))
    diss = sum(1 for _ in enum_dissections(n))
    large = sum(1 for _ in enum_large_schroeder_paths(n))
    wedge = nb.sigma(n) if n else "-"
    print(f"{n:>2} | {nb.little_schroeder(n):>13} | {paths:>5} | {trees:>5} | {diss:>11} "
          f"| {large:>3} | {wedge}")

# the three objects for n = 2
print()
print("paths:", [str(p) for p in enum_schroeder_paths(2)])
print("trees (preorder child counts):", [str(t) for t in enum_st(2)])
print("dissections of the square:", [str(d) for d in enum_dissections(2)])

# the wedge paths used as colors: D and NE for n = 1
print("SP wedge, n = 1:", [str(p) for p in enum_sp_wedge(1)])
print("SP wedge, n = 3:", [str(p) for p in enum_sp_wedge(3)])
