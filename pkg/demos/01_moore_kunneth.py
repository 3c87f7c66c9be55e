"""Moore objects, their tensor square, and why the square cannot pair with itself.

A Moore object N has K-theory Z/p in degree 0. Tensoring N with itself
doubles the torsion into both degrees, and every map from N(x)N into the
unit is torsion, so no nondegenerate pairing N(x)N -> C exists.
"""

from kkdual import UNIT, dual, kk_group, kunneth, moore, pairing_into_unit_is_trivial, suspend

for p in (2, 3, 5, 7):
    n = moore(p)
    nn = kunneth(n, n)
    print(f"p={p}: K(N) = {n}   K(N(x)N) = {nn}")
    print(f"       KK0(N(x)N, C) = {kk_group(nn, UNIT, 0)}   KK0(C, N(x)N) = {kk_group(UNIT, nn, 0)}")
    print(f"       pairing into the unit is torsion: {pairing_into_unit_is_trivial(nn)}")
    d = dual(n)
    print(f"       K(DN) = {d}   K(S DN) = {suspend(d)}  (back to N)")
