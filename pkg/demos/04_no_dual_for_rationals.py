"""Objects whose K-theory is not finitely generated have no K-dual.

Z -2-> Z -2-> Z -> ... has colimit Z[1/2]. Its Ext into Z is uncountable,
which no separable dual could accommodate. A constant Z/p system, by
contrast, has a finitely generated colimit and a dual.
"""

from kkdual import DirectSystem, colimit_is_fg, dual_verdict
from kkdual.fgab import TRIVIAL, Z, FgAbGroup

zero = DirectSystem.constant(TRIVIAL)
halves = DirectSystem.periodic(Z, [[2]])
print("colimit of x2 tail:", colimit_is_fg(halves))
v = dual_verdict(halves, zero)
print("dual exists:", v.exists, "mechanisms:", v.mechanisms)
print("reason:", v.reason)

for p in (2, 3, 5):
    w = dual_verdict(DirectSystem.constant(FgAbGroup.cyclic(p)), zero)
    print(f"constant Z/{p}: exists={w.exists} dual={w.dual}")

# an eventually-zero map kills torsion without hurting finite generation
print("Z/8 under x2:", colimit_is_fg(DirectSystem.periodic(FgAbGroup.cyclic(8), [[2]])))
