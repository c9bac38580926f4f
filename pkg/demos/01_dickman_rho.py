"""Dickman's rho by two independent routes, and a reusable spline file."""

from dickman.numkernel import xp
from dickman.rho import FView, load_spline, rho_series, rho_steps, save_spline

# method of steps: one Chebyshev piece per unit interval
spline = rho_steps(10)
print("rho(2) =", xp.nstr(spline(2), 20), " 1 - log 2 =", xp.nstr(1 - xp.log(2), 20))

# the finite alternating sum of I_k(u)/k! gives the same numbers
for u in ("2.5", "5.5", "9.5"):
    a, b = spline(u), rho_series(u)
    print(f"u = {u}: steps {xp.nstr(a, 15)}  series {xp.nstr(b, 15)}  diff {xp.nstr(abs(a - b), 3)}")

# rho is tiny by u = 10; only absolute accuracy is promised there
print("rho(10) =", xp.nstr(spline(10), 15))

# delay equation residual with the polynomial derivative
u = xp.mpf("7.3")
print("u rho'(u) + rho(u-1) at 7.3:", xp.nstr(u * spline.derivative(u) + spline(u - 1), 3))

# F(alpha) = rho(1/alpha) solves alpha F'(alpha) = F(alpha/(1-alpha))
F = FView(spline)
a = xp.mpf("0.3")
print("F-equation residual at 0.3:", xp.nstr(F.derivative(a) - F(a / (1 - a)) / a, 3))

save_spline(spline, "rho_spline.txt")
again = load_spline("rho_spline.txt")
print("reloaded rho(4.2):", xp.nstr(again("4.2"), 20))
