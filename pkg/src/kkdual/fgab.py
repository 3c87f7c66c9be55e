"""Finitely generated abelian groups in invariant-factor form.

A group is ``Z^rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k``
and every ``d_i >= 2``.  That data is unique, so isomorphism testing is
equality.  Generators are ordered free first, then torsion; a generator's
*order* is 0 for a free generator and ``d_i`` otherwise.

The bifunctors use the bilinear tables on cyclic pieces:

>>> Z, C = FgAbGroup.free(1), FgAbGroup.cyclic
>>> hom(C(4), C(6)), ext(C(4), C(6)), tor(C(6), C(4))
(FgAbGroup(rank=0, torsion=(2,)), FgAbGroup(rank=0, torsion=(2,)), FgAbGroup(rank=0, torsion=(2,)))
>>> tensor(C(2), C(3)).is_trivial()
True
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import factorint

from .intlin import IntMatrix, kernel_basis, snf


@dataclass(frozen=True)
class FgAbGroup:
    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("negative rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion order {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisor chain")

    @classmethod
    def free(cls, rank: int) -> FgAbGroup:
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> FgAbGroup:
        """``Z/n``; ``n = 0`` gives ``Z`` and ``n = 1`` the trivial group."""
        return from_orders([n])

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def orders(self) -> tuple[int, ...]:
        return (0,) * self.rank + self.torsion

    def relations(self) -> IntMatrix:
        """Presentation matrix: ``ngens x len(torsion)``, one column per torsion generator."""
        n, t = self.ngens, len(self.torsion)
        rows = [[0] * t for _ in range(n)]
        for i, d in enumerate(self.torsion):
            rows[self.rank + i][i] = d
        return IntMatrix.from_rows(rows, t)

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> int:
        """Cardinality of a finite group."""
        if self.rank:
            raise ValueError("infinite group")
        return math.prod(self.torsion)

    def free_part(self) -> FgAbGroup:
        return FgAbGroup(self.rank)

    def torsion_part(self) -> FgAbGroup:
        return FgAbGroup(0, self.torsion)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        """Normal form of a coordinate vector: torsion coordinates mod their orders."""
        return tuple(x % d if d else x for x, d in zip(v, self.orders))

    def primary_decomposition(self) -> list[int]:
        """Prime-power orders of the torsion, sorted; read-only display view."""
        out = []
        for d in self.torsion:
            out.extend(p ** e for p, e in _factor(d))
        return sorted(out)

    def to_record(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_record(cls, rec: dict) -> FgAbGroup:
        # non-canonical torsion lists are accepted and normalized
        return direct_sum(FgAbGroup.free(int(rec.get("rank", 0))), from_orders(rec.get("torsion", [])))

    def __str__(self):
        from .expr import format_group
        return format_group(self)


TRIVIAL = FgAbGroup()
Z = FgAbGroup(1)


def from_orders(orders: Sequence[int]) -> FgAbGroup:
    """Canonical form of ``Z/o_1 + Z/o_2 + ...`` (an order of 0 means ``Z``)."""
    rank = 0
    by_prime: dict[int, list[int]] = {}
    for o in orders:
        if o < 0:
            raise ValueError("negative cyclic order")
        if o == 0:
            rank += 1
            continue
        for p, e in _factor(o):
            by_prime.setdefault(p, []).append(e)
    # the i-th largest invariant factor takes the i-th largest power of each prime
    k = max((len(v) for v in by_prime.values()), default=0)
    chain = [1] * k
    for p, exps in by_prime.items():
        for i, e in enumerate(sorted(exps, reverse=True)):
            chain[i] *= p ** e
    return FgAbGroup(rank, tuple(reversed(chain)))


@functools.lru_cache(maxsize=4096)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(factorint(n).items())


def canonicalize(relations: IntMatrix) -> FgAbGroup:
    """Canonical form of ``Z^rows / (column span of relations)``."""
    res = snf(relations)
    nonzero = [d for d in res.diag if d]
    return FgAbGroup(relations.rows - len(nonzero), tuple(d for d in nonzero if d != 1))


def direct_sum(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return from_orders(list(g.orders) + list(h.orders))


def is_isomorphic(g: FgAbGroup, h: FgAbGroup) -> bool:
    return g == h


# bilinear tables on cyclic pieces; 0 stands for Z, 1 for the trivial group

def _hom_cyclic(a: int, b: int) -> int:
    if a == 0:
        return b
    return 1 if b == 0 else math.gcd(a, b)


def _ext_cyclic(a: int, b: int) -> int:
    return 1 if a == 0 else math.gcd(a, b)


def _tensor_cyclic(a: int, b: int) -> int:
    return math.gcd(a, b)


def _tor_cyclic(a: int, b: int) -> int:
    return 1 if a == 0 or b == 0 else math.gcd(a, b)


def _bilinear(table, g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return from_orders([table(a, b) for a in g.orders for b in h.orders])


def hom(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _bilinear(_hom_cyclic, g, h)


def ext(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _bilinear(_ext_cyclic, g, h)


def tensor(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _bilinear(_tensor_cyclic, g, h)


def tor(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _bilinear(_tor_cyclic, g, h)


class InvalidHomomorphism(ValueError):
    pass


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given on canonical generators.

    Column ``j`` holds the image of the ``j``-th generator of ``source`` in
    coordinates of ``target``.  Torsion coordinates are stored reduced.
    """
    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        m = self.matrix
        if m.shape != (self.target.ngens, self.source.ngens):
            raise InvalidHomomorphism(
                f"matrix shape {m.shape} does not match {self.target.ngens}x{self.source.ngens}")
        cols = [self.target.reduce(c) for c in m.columns()]
        for d, col in zip(self.source.orders, cols):
            if d == 0:
                continue
            for x, e in zip(col, self.target.orders):
                if (d * x) % e if e else d * x:
                    raise InvalidHomomorphism(
                        f"a generator of order {d} cannot map to {list(col)} in {self.target.orders}")
        object.__setattr__(self, "matrix", IntMatrix.from_columns(cols, m.rows))

    @classmethod
    def from_rows(cls, source: FgAbGroup, target: FgAbGroup, rows) -> GroupHom:
        try:
            m = IntMatrix.from_rows(rows, source.ngens)
        except ValueError as e:
            raise InvalidHomomorphism(f"bad matrix for {source.ngens} source generators: {e}") from e
        return cls(source, target, m)

    @classmethod
    def identity(cls, g: FgAbGroup) -> GroupHom:
        return cls(g, g, IntMatrix.identity(g.ngens))

    @classmethod
    def zero(cls, source: FgAbGroup, target: FgAbGroup) -> GroupHom:
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens))

    @classmethod
    def scalar(cls, g: FgAbGroup, k: int) -> GroupHom:
        return cls(g, g, IntMatrix.diagonal([k] * g.ngens))

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce(self.matrix.apply(list(v)))

    def compose(self, inner: GroupHom) -> GroupHom:
        """``self ∘ inner``."""
        if inner.target != self.source:
            raise InvalidHomomorphism("composition of non-composable maps")
        return GroupHom(inner.source, self.target, self.matrix @ inner.matrix)

    def __matmul__(self, inner: GroupHom) -> GroupHom:
        return self.compose(inner)

    def __add__(self, other: GroupHom) -> GroupHom:
        if (self.source, self.target) != (other.source, other.target):
            raise InvalidHomomorphism("sum of maps with different domains")
        return GroupHom(self.source, self.target, self.matrix + other.matrix)

    def __neg__(self) -> GroupHom:
        return GroupHom(self.source, self.target, -self.matrix)

    def __sub__(self, other: GroupHom) -> GroupHom:
        return self + (-other)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def kernel_generators(self) -> IntMatrix:
        """Columns (in source coordinates) generating the kernel."""
        n = self.source.ngens
        big = self.matrix.hstack(self.target.relations())
        kb = kernel_basis(big)
        return kb.submatrix(range(n), range(kb.cols))

    def kernel(self) -> FgAbGroup:
        """The kernel as an abstract group."""
        gens = self.kernel_generators()
        # a subgroup of a f.g. group: present it as gens modulo their relations in the source
        rel = gens.hstack(self.source.relations())
        kb = kernel_basis(rel)
        return canonicalize(kb.submatrix(range(gens.cols), range(kb.cols)))

    def cokernel(self) -> FgAbGroup:
        return canonicalize(self.matrix.hstack(self.target.relations()))

    def image_relations(self) -> IntMatrix:
        return self.matrix.hstack(self.target.relations())

    def is_surjective(self) -> bool:
        return self.cokernel().is_trivial()

    def is_injective(self) -> bool:
        return self.kernel().is_trivial()

    def is_automorphism(self) -> bool:
        # surjective endomorphisms of f.g. abelian groups are injective (Hopfian)
        return self.source == self.target and self.is_surjective()

    def inverse(self) -> GroupHom:
        """Inverse of an isomorphism; raises InvalidHomomorphism otherwise."""
        if not (self.is_surjective() and self.is_injective()):
            raise InvalidHomomorphism("map is not an isomorphism")
        n = self.target.ngens
        big = self.image_relations()
        res = snf(big)
        # big V S^+ U = I with S = [I | 0]; keep the rows that belong to self.matrix
        pre = res.V.submatrix(range(self.source.ngens), range(n)) @ res.U
        return GroupHom(self.target, self.source, pre)

    def to_record(self) -> list[list[int]]:
        return self.matrix.to_rows()


def _unimodular_inverse(u: IntMatrix) -> IntMatrix:
    n = u.rows
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(u.to_rows())]
    for k in range(n):
        p = next(i for i in range(k, n) if a[i][k])
        a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        a[k] = [x / piv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    out = [[x for x in row[n:]] for row in a]
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("matrix is not unimodular")
    return IntMatrix.from_rows([[int(x) for x in row] for row in out], n)


@dataclass(frozen=True)
class CyclicSum:
    """An explicit sum of cyclic groups ``Z/o_1 + ... + Z/o_n`` and its canonical form.

    ``to_canonical`` and ``from_canonical`` are mutually inverse isomorphisms
    (as coordinate maps) between the explicit sum and ``group``.
    """
    orders: tuple[int, ...]
    group: FgAbGroup
    to_canonical: IntMatrix
    from_canonical: IntMatrix

    @classmethod
    def of(cls, orders: Sequence[int]) -> CyclicSum:
        orders = tuple(orders)
        n = len(orders)
        res = snf(IntMatrix.diagonal(orders))
        u_inv = _unimodular_inverse(res.U)
        diag = res.diag
        free_pos = [i for i, d in enumerate(diag) if d == 0]
        tors_pos = [i for i, d in enumerate(diag) if d >= 2]
        keep = free_pos + tors_pos
        group = FgAbGroup(len(free_pos), tuple(diag[i] for i in tors_pos))
        to_can = res.U.submatrix(keep, range(n))
        from_can = u_inv.submatrix(range(n), keep)
        return cls(orders, group, to_can, from_can)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(x % d if d else x for x, d in zip(v, self.orders))


@functools.lru_cache(maxsize=1024)
def ext_cyclic_sum(g: FgAbGroup, h: FgAbGroup) -> CyclicSum:
    """``Ext(g, h)`` as the explicit sum over (torsion generator of g, generator of h).

    The entry for ``(i, j)`` has order ``gcd(d_i, ord h_j)``; it is the
    ``j``-th coordinate of ``h / d_i h``, which is the summand of Ext coming
    from the resolution ``0 -> Z -d_i-> Z -> Z/d_i -> 0``.  Coordinates are
    laid out row by row over torsion generators of ``g``.
    """
    return CyclicSum.of([_ext_cyclic(d, e) for d in g.torsion for e in h.orders])


def _resolution_lift(f: GroupHom) -> list[list[int]]:
    """Lift ``f: G -> G'`` to the relation modules: ``R' F1 = F R``.

    Returns ``F1`` as rows indexed by torsion generators of G' and columns by
    torsion generators of G.
    """
    g, gp = f.source, f.target
    f1 = [[0] * len(g.torsion) for _ in gp.torsion]
    for i, d in enumerate(g.torsion):
        col = f.matrix.column(g.rank + i)
        for k, dk in enumerate(gp.torsion):
            x = d * col[gp.rank + k]
            assert x % dk == 0
            f1[k][i] = x // dk
    return f1


def ext_pullback(f: GroupHom, h: FgAbGroup, element: Sequence[int]) -> tuple[int, ...]:
    """Contravariant action ``Ext(G', H) -> Ext(G, H)`` on explicit-sum coordinates."""
    g, gp = f.source, f.target
    n = h.ngens
    f1 = _resolution_lift(f)
    out = []
    for i in range(len(g.torsion)):
        acc = [0] * n
        for k in range(len(gp.torsion)):
            c = f1[k][i]
            if c:
                piece = element[k * n:(k + 1) * n]
                acc = [a + c * x for a, x in zip(acc, piece)]
        out.extend(acc)
    return ext_cyclic_sum(g, h).reduce(out)


def ext_pushforward(g: FgAbGroup, f: GroupHom, element: Sequence[int]) -> tuple[int, ...]:
    """Covariant action ``Ext(G, H) -> Ext(G, H')`` for ``f: H -> H'``."""
    h = f.source
    n = h.ngens
    out = []
    for i in range(len(g.torsion)):
        out.extend(f.matrix.apply(list(element[i * n:(i + 1) * n])))
    return ext_cyclic_sum(g, f.target).reduce(out)


def _explicit_to_hom(src: CyclicSum, dst: CyclicSum, action) -> GroupHom:
    cols = []
    for y in src.from_canonical.columns():
        cols.append(dst.to_canonical.apply(list(action(src.reduce(y)))))
    return GroupHom(src.group, dst.group, IntMatrix.from_columns(cols, dst.group.ngens))


def induced_ext_map(f: GroupHom, h: FgAbGroup) -> GroupHom:
    """The map ``Ext(G', H) -> Ext(G, H)`` induced by ``f: G -> G'``.

    >>> C4 = FgAbGroup.cyclic(4)
    >>> induced_ext_map(GroupHom.scalar(C4, 2), Z).matrix
    IntMatrix.from_rows([[2]], cols=1)
    """
    src = ext_cyclic_sum(f.target, h)
    dst = ext_cyclic_sum(f.source, h)
    return _explicit_to_hom(src, dst, lambda v: ext_pullback(f, h, v))


def induced_ext_map_covariant(g: FgAbGroup, f: GroupHom) -> GroupHom:
    """The map ``Ext(G, H) -> Ext(G, H')`` induced by ``f: H -> H'``."""
    src = ext_cyclic_sum(g, f.source)
    dst = ext_cyclic_sum(g, f.target)
    return _explicit_to_hom(src, dst, lambda v: ext_pushforward(g, f, v))


def quotient(g: FgAbGroup, generators: IntMatrix) -> FgAbGroup:
    """``g`` modulo the subgroup generated by the given columns."""
    return canonicalize(g.relations().hstack(generators))
