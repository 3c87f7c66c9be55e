"""Z/2-graded K-theory objects and the operations on them.

A bootstrap algebra with finitely generated K-theory is determined up to
KK-equivalence by ``(K0, K1)``, so that pair is the object.  Every
operation here is a formula in the group bifunctors.

UCT degree convention, used by :func:`kk_group` and fixed once here::

    KK0(A, B) = Hom(K0A, K0B) + Hom(K1A, K1B) + Ext(K0A, K1B) + Ext(K1A, K0B)
    KK1(A, B) = KK0(A, suspend(B))

The splitting is not natural, but the group is determined.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import fgab
from .fgab import FgAbGroup, direct_sum, ext, hom, tensor, tor


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class Construction(enum.Enum):
    BY_TENSOR = "tensor"
    BY_KK = "kk"


@dataclass(frozen=True)
class GradedGroup:
    g0: FgAbGroup = fgab.TRIVIAL
    g1: FgAbGroup = fgab.TRIVIAL

    def __getitem__(self, degree: int) -> FgAbGroup:
        return (self.g0, self.g1)[degree % 2]

    def is_zero(self) -> bool:
        return self.g0.is_trivial() and self.g1.is_trivial()

    def to_record(self) -> dict:
        return {"K0": self.g0.to_record(), "K1": self.g1.to_record()}

    @classmethod
    def from_record(cls, rec: dict) -> GradedGroup:
        return cls(FgAbGroup.from_record(rec["K0"]), FgAbGroup.from_record(rec["K1"]))

    def __str__(self):
        from .expr import format_graded
        return format_graded(self)


UNIT = GradedGroup(fgab.Z, fgab.TRIVIAL)


def graded_sum(a: GradedGroup, b: GradedGroup) -> GradedGroup:
    return GradedGroup(direct_sum(a.g0, b.g0), direct_sum(a.g1, b.g1))


def dual(a: GradedGroup, parity: Parity = Parity.EVEN) -> GradedGroup:
    """K-theory of the Spanier-Whitehead K-dual.

    Free parts stay in place and torsion moves to the other degree; odd
    parity swaps the degrees on top of that.

    >>> from .expr import parse_graded
    >>> str(dual(parse_graded("[Z + Z/4 ; Z/3]")))
    '[Z + Z/3 ; Z/4]'
    """
    d0 = direct_sum(a.g0.free_part(), a.g1.torsion_part())
    d1 = direct_sum(a.g1.free_part(), a.g0.torsion_part())
    if parity is Parity.ODD:
        d0, d1 = d1, d0
    return GradedGroup(d0, d1)


def suspend(a: GradedGroup) -> GradedGroup:
    return GradedGroup(a.g1, a.g0)


def kunneth(a: GradedGroup, b: GradedGroup) -> GradedGroup:
    """K-theory of ``A ⊗ B``; the Künneth sequence splits, Tor shifts degree by one."""
    out = []
    for i in (0, 1):
        g = fgab.TRIVIAL
        for j in (0, 1):
            g = direct_sum(g, tensor(a[j], b[i - j]))
            g = direct_sum(g, tor(a[j], b[i + 1 - j]))
        out.append(g)
    return GradedGroup(*out)


def kk_group(a: GradedGroup, b: GradedGroup, degree: int) -> FgAbGroup:
    if degree not in (0, 1):
        raise ValueError(f"degree must be 0 or 1, got {degree}")
    if degree == 1:
        b = suspend(b)
    g = fgab.TRIVIAL
    for j in (0, 1):
        g = direct_sum(g, hom(a[j], b[j]))
        g = direct_sum(g, ext(a[j], b[j + 1]))
    return g


def moore_object(n: int) -> GradedGroup:
    """The coefficient object ``N`` with ``K0 = Z/n`` and ``K1 = 0``."""
    if n < 2:
        raise ValueError(f"coefficient order must be >= 2, got {n}")
    return GradedGroup(FgAbGroup.cyclic(n), fgab.TRIVIAL)


def modp_k(a: GradedGroup, n: int, construction: Construction, degree: int) -> FgAbGroup:
    """Mod-n K-theory ``K_degree(A; Z/n)``.

    BY_TENSOR is ``K_j(A ⊗ N)``; BY_KK is ``KK_{j-1}(N, A)``.
    """
    if degree not in (0, 1):
        raise ValueError(f"degree must be 0 or 1, got {degree}")
    nobj = moore_object(n)
    if construction is Construction.BY_TENSOR:
        return kunneth(a, nobj)[degree]
    return kk_group(nobj, a, (degree - 1) % 2)


def pairing_into_unit_is_trivial(a: GradedGroup) -> bool:
    """True when both ``KK0(A, C)`` and ``KK0(C, A)`` are torsion.

    Then any pairing into ``KK0(C, C) = Z`` vanishes, so duality classes
    for ``A`` cannot be KK-inverse to each other.
    """
    return kk_group(a, UNIT, 0).is_finite() and kk_group(UNIT, a, 0).is_finite()
