"""Cuntz-Krieger algebras: O_A and O_{A^t} are dual with an odd shift.

K0 is the cokernel of I - A^t and K1 its kernel. Transposing A swaps the
roles in exactly the way odd duality predicts, because I - A and I - A^t
share invariant factors.
"""

import itertools

from kkdual import IntMatrix, ck_duality_check, cuntz_krieger

for n in range(2, 6):
    print(f"full shift on {n} symbols: {cuntz_krieger(IntMatrix.from_rows([[1] * n] * n))}")

print("golden mean shift:", cuntz_krieger(IntMatrix.from_rows([[1, 1], [1, 0]])))
print("single loop:", cuntz_krieger(IntMatrix.from_rows([[1]])))

ok = total = 0
for bits in itertools.product((0, 1), repeat=9):
    rows = [list(bits[i:i + 3]) for i in (0, 3, 6)]
    if all(any(r) for r in rows) and all(any(c) for c in zip(*rows)):
        total += 1
        ok += ck_duality_check(IntMatrix.from_rows(rows))
print(f"duality holds for {ok}/{total} admissible 3x3 matrices")
