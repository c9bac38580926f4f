"""I_k(u), the Dickman polylogarithms L_k(t), and the identity between them."""

from dickman.iterated import IkEvaluator, I_k, L_k
from dickman.numkernel import xp

ev = IkEvaluator(4)
print("I_2(3) =", xp.nstr(ev.value(2, 3), 25))
print("I_5(4.9) =", I_k(5, "4.9"), "(zero below k)")

# delay identity u I_k'(u) = k I_{k-1}(u - 1) carries I_k out to u = 1e4 cheaply
for u in (10, 100, 1000, 10 ** 4):
    print(f"I_3({u}) = {xp.nstr(ev.value(3, u), 20)}")

# the slower convolution recursion agrees
print("convolution minus steps at I_3(7):",
      xp.nstr(I_k(3, 7, method="convolution") - I_k(3, 7), 3))

# L_k(alpha) = (-1)^k I_k(1/alpha) / k!
for k in (1, 2, 3):
    alpha = xp.mpf("0.5") / k
    direct = L_k(k, alpha, method="recursion")
    via = (-1) ** k * I_k(k, 1 / alpha) / xp.factorial(k)
    print(f"k = {k}: recursion {xp.nstr(direct, 18)}  via I_k {xp.nstr(via, 18)}")
