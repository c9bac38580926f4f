"""Two pieces of the proof machinery: Perron's integral and G(u, s)."""

from dickman.asymptotic import g_diag, log_gamma_identity, perron_integral
from dickman.numkernel import euler_gamma, xp

for lam in (1, -1, 0):
    r = perron_integral(lam, c=1, T=10 ** 4)
    print(f"lambda = {lam:>2}: {xp.nstr(r.value, 12)}  (imag {xp.nstr(r.imag, 2)}, "
          f"truncation ~ {xp.nstr(r.truncation_estimate, 3)})")

# G(u, s) = Ein(s/u) and its two bounds
for u, s in ((1, 1), (1, 100), (10 ** 6, xp.mpc(1, 1)), (50, xp.mpc(1, 10 ** 5))):
    d = g_diag(u, s)
    print(f"u = {u}, s = {s}: |G| = {xp.nstr(abs(d.G), 6)} <= {xp.nstr(d.G_bound, 4)}, "
          f"|dG| = {xp.nstr(abs(d.dG), 4)} <= {xp.nstr(d.dG_bound, 4)}")

quad, closed = log_gamma_identity(1)
print("log s + gamma at s = 1 by quadrature:", xp.nstr(quad, 25), " gamma:", xp.nstr(euler_gamma(), 25))
