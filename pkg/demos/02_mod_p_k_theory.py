"""Two routes to mod-n K-theory that land on the same groups.

One route tensors with the Moore object. The other maps out of it with KK
and shifts the degree by one. The loop below compares them on a handful of
inputs.
"""

from kkdual import Construction, modp_k, parse_graded

samples = ["[Z ; 0]", "[Z^2 + Z/4 ; Z/6]", "[Z/9 ; Z + Z/3]", "[0 ; Z/8 + Z/8]"]
for text in samples:
    a = parse_graded(text)
    for n in (2, 3, 4, 6):
        row = []
        for j in (0, 1):
            t = modp_k(a, n, Construction.BY_TENSOR, j)
            k = modp_k(a, n, Construction.BY_KK, j)
            assert t == k
            row.append(str(t))
        print(f"K_*({text}; Z/{n}) = [{row[0]} ; {row[1]}]")
