"""Counting smooth numbers and almost-primes with a segmented sieve."""

from dickman.rho import rho
from dickman.sieve import almost_prime_count, sieve_csv, smooth_count

results = [smooth_count(10 ** 7, u) for u in (2, 3, 4)]
rhos = [rho(u) for u in (2, 3, 4)]
for r, rho_u in zip(results, rhos):
    print(f"Psi(1e7, {r.y}) = {r.count}: ratio {float(r.ratio):.5f}  rho(u) {float(rho_u):.5f}")

with open("smooth_counts.csv", "w") as fh:
    fh.write(sieve_csv(results, rhos))

# at most two prime factors, both conventions, next to the Landau approximation
for x in (10 ** 4, 10 ** 6, 10 ** 7):
    a = almost_prime_count(x, 2)
    print(f"x = {x:>9}: omega<=2 {a.count_omega:>8}  Omega<=2 {a.count_Omega:>8}  "
          f"Landau {float(a.landau_value):>11.1f}  ratios {float(a.count_omega / a.landau_value):.4f} "
          f"{float(a.count_Omega / a.landau_value):.4f}")
