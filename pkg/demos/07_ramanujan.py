"""Ramanujan's alternating nested integrals for phi(x)."""

from dickman.iterated import I_k, ramanujan_nested
from dickman.numkernel import xp
from dickman.rho import rho
from dickman.sieve import ramanujan_phi_check, ramanujan_sum

# each nested integral is I_j(1/eps)/j!
for j, eps in ((1, "0.6"), (2, "0.4"), (3, "0.26")):
    eps = xp.mpf(eps)
    t = ramanujan_nested(j, eps)
    print(f"j = {j}, eps = {eps}: {xp.nstr(t.value, 18)}  I_j/j! = {xp.nstr(I_k(j, 1 / eps) / xp.factorial(j), 18)}")

# with the literal depth-three limits the value drifts away
print("depth 3 with the literal (1 - lambda)/(i+1) limits:", xp.nstr(ramanujan_nested(3, "0.26", limits="quoted").value, 8))

# the alternating sum is rho(1/eps)
for eps in ("0.45", "0.35", "0.26"):
    eps = xp.mpf(eps)
    depth = int(xp.ceil(1 / eps)) - 1
    print(f"eps = {eps}: sum {xp.nstr(ramanujan_sum(eps, depth), 15)}  rho(1/eps) {xp.nstr(rho(1 / eps), 15)}")

rec = ramanujan_phi_check(10 ** 7, "0.4", 2)
print("x = 1e7, eps = 0.4: sieve", xp.nstr(rec.sieve_ratio, 6), " Ramanujan", xp.nstr(rec.ramanujan_sum, 6))
