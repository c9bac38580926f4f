"""How fast the log-power expansion of I_k(u) closes in on the true value."""

from dickman.asymptotic import error_decay_scan, expand_Ik, reports_to_csv
from dickman.constants import constants_from_zeta
from dickman.numkernel import xp

D = constants_from_zeta(4)

# k = 1 is exact: I_1(u) = log u
print("k = 1 error at u = 1000:", expand_Ik(1, 1000, D).abs_error)

rows = []
for k in (2, 3, 4):
    scan = error_decay_scan(k, (10, 100, 1000, 10 ** 4), D)
    rows.extend(scan.reports)
    errs = ", ".join(xp.nstr(s, 5) for s in scan.scaled_errors)
    print(f"k = {k}: u |I_k - expansion| / (log u)^k = {errs}")
    print(f"        max / first = {xp.nstr(scan.ratio_to_first, 4)}")

with open("expansion_errors.csv", "w") as fh:
    fh.write(reports_to_csv(rows))
