"""The endomorphism ring KK0(A, A) as End(K_*A) plus a square-zero Ext part.

An element is invertible exactly when its image in End(K_*A) is an
automorphism; the Ext part never gets in the way because it squares to
zero.
"""

from kkdual import EndoRingElement, multiply, parse_graded, try_invert

a = parse_graded("[Z/5 ; Z/5]")
u = EndoRingElement.make(a, [[2]], [[3]], kappa01=[1], kappa10=[4])
inv = try_invert(u)
print("u       =", u.to_record())
print("u^-1    =", inv.to_record())
print("u u^-1 == 1:", multiply(u, inv) == EndoRingElement.identity(a))

k = EndoRingElement.kernel_element(a, [1], [2])
print("k^2 == 0:", multiply(k, k) == EndoRingElement.zero(a))

bad = try_invert(EndoRingElement.make(parse_graded("[Z + Z/3 ; 0]"), [[3, 0], [0, 1]], []))
print("not invertible:", bad.to_record())
