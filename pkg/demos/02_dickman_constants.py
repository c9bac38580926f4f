"""Dickman constants C_k: zeta series, Hankel contour, and the generating function."""

from dickman.constants import ContourSpec, constants_from_contour, constants_from_zeta, genfun
from dickman.numkernel import xp

table = constants_from_zeta(30)
for k in range(6):
    print(f"C_{k} = {xp.nstr(table.C[k], 20):>24}   D_{k} = {xp.nstr(table.D[k], 20)}")
print("C_2 + pi^2/12 =", xp.nstr(table.C[2] + xp.pi ** 2 / 12, 3))

# same numbers from the absolutely convergent contour integral
hankel = constants_from_contour(8, ContourSpec.hankel())
print("max |zeta - hankel| for k <= 8:",
      xp.nstr(max(abs(a - b) for a, b in zip(table.C, hankel.C)), 3))

# partial sums against e^{gamma z}/Gamma(1 - z)
for z in (1, -1, 0.5, -0.5):
    print(f"z = {z:>4}: sum_k<=30 C_k z^k - genfun(z) = {xp.nstr(abs(table.series(z) - genfun(z)), 3)}")

# the growth is at most linear in k
print("max |C_k|/(k+1):", xp.nstr(max(abs(c) / (k + 1) for k, c in enumerate(table.C)), 5))

with open("constants.csv", "w") as fh:
    fh.write(table.to_csv())
