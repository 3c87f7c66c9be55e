"""Square-zero model of the ring ``KK0(A, A)``.

An element is ``w + k``: ``w`` a graded endomorphism ``(phi0, phi1)`` of
``K*(A)`` and ``k`` in the kernel of the index map, i.e. a pair of Ext
classes ``kappa01 in Ext(K0A, K1A)`` and ``kappa10 in Ext(K1A, K0A)``.
Ext classes are residue vectors in the explicit cyclic sum of
:func:`kkdual.fgab.ext_cyclic_sum`.  That fixes one splitting of the UCT
sequence; another splitting gives an isomorphic ring.

Products compose right to left: ``multiply(u, v)`` is ``u ∘ v``.  The
End part acts on Ext classes on both sides, and any product of two
Ext classes is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fgab import FgAbGroup, GroupHom, ext_cyclic_sum, ext_pullback, ext_pushforward
from .kkobj import GradedGroup


class BaseMismatch(ValueError):
    pass


def _add(cs, x, y):
    return cs.reduce([a + b for a, b in zip(x, y)])


@dataclass(frozen=True)
class EndoRingElement:
    base: GradedGroup
    phi0: GroupHom
    phi1: GroupHom
    kappa01: tuple[int, ...]
    kappa10: tuple[int, ...]

    def __post_init__(self):
        a = self.base
        if (self.phi0.source, self.phi0.target) != (a.g0, a.g0):
            raise ValueError("phi0 is not an endomorphism of K0")
        if (self.phi1.source, self.phi1.target) != (a.g1, a.g1):
            raise ValueError("phi1 is not an endomorphism of K1")
        for name, g, h in (("kappa01", a.g0, a.g1), ("kappa10", a.g1, a.g0)):
            cs = ext_cyclic_sum(g, h)
            v = getattr(self, name)
            if len(v) != len(cs.orders):
                raise ValueError(f"{name} needs {len(cs.orders)} residues, got {len(v)}")
            object.__setattr__(self, name, cs.reduce(v))

    @classmethod
    def make(cls, base: GradedGroup, phi0, phi1, kappa01: Sequence[int] = None,
             kappa10: Sequence[int] = None) -> EndoRingElement:
        """Build from raw matrices (lists of rows) or GroupHoms; missing kappas are zero."""
        if not isinstance(phi0, GroupHom):
            phi0 = GroupHom.from_rows(base.g0, base.g0, phi0)
        if not isinstance(phi1, GroupHom):
            phi1 = GroupHom.from_rows(base.g1, base.g1, phi1)
        if kappa01 is None:
            kappa01 = [0] * len(ext_cyclic_sum(base.g0, base.g1).orders)
        if kappa10 is None:
            kappa10 = [0] * len(ext_cyclic_sum(base.g1, base.g0).orders)
        return cls(base, phi0, phi1, tuple(kappa01), tuple(kappa10))

    @classmethod
    def identity(cls, base: GradedGroup) -> EndoRingElement:
        return cls.make(base, GroupHom.identity(base.g0), GroupHom.identity(base.g1))

    @classmethod
    def zero(cls, base: GradedGroup) -> EndoRingElement:
        return cls.make(base, GroupHom.zero(base.g0, base.g0), GroupHom.zero(base.g1, base.g1))

    @classmethod
    def kernel_element(cls, base: GradedGroup, kappa01, kappa10) -> EndoRingElement:
        z = cls.zero(base)
        return cls.make(base, z.phi0, z.phi1, kappa01, kappa10)

    def end_part(self) -> EndoRingElement:
        return EndoRingElement.make(self.base, self.phi0, self.phi1)

    def ext_part(self) -> EndoRingElement:
        return EndoRingElement.kernel_element(self.base, self.kappa01, self.kappa10)

    def is_kernel_element(self) -> bool:
        return self.phi0.is_zero() and self.phi1.is_zero()

    def _check_base(self, other: EndoRingElement):
        if self.base != other.base:
            raise BaseMismatch(f"bases differ: {self.base} vs {other.base}")

    def __add__(self, other: EndoRingElement) -> EndoRingElement:
        self._check_base(other)
        a = self.base
        return EndoRingElement(
            a, self.phi0 + other.phi0, self.phi1 + other.phi1,
            _add(ext_cyclic_sum(a.g0, a.g1), self.kappa01, other.kappa01),
            _add(ext_cyclic_sum(a.g1, a.g0), self.kappa10, other.kappa10))

    def __neg__(self) -> EndoRingElement:
        return EndoRingElement(self.base, -self.phi0, -self.phi1,
                               tuple(-x for x in self.kappa01), tuple(-x for x in self.kappa10))

    def __sub__(self, other: EndoRingElement) -> EndoRingElement:
        return self + (-other)

    def __mul__(self, other: EndoRingElement) -> EndoRingElement:
        return multiply(self, other)

    def to_record(self) -> dict:
        return {
            "base": self.base.to_record(),
            "phi0": self.phi0.to_record(),
            "phi1": self.phi1.to_record(),
            "kappa01": list(self.kappa01),
            "kappa10": list(self.kappa10),
        }

    @classmethod
    def from_record(cls, rec: dict) -> EndoRingElement:
        base = GradedGroup.from_record(rec["base"])
        phi0 = _matrix_from_record(rec.get("phi0"), base.g0)
        phi1 = _matrix_from_record(rec.get("phi1"), base.g1)
        return cls.make(base, phi0, phi1, rec.get("kappa01"), rec.get("kappa10"))


def _matrix_from_record(rows, g: FgAbGroup):
    if rows is None:
        return GroupHom.identity(g)
    from .intlin import IntMatrix
    return GroupHom(g, g, IntMatrix.from_rows(rows, g.ngens))


def multiply(u: EndoRingElement, v: EndoRingElement) -> EndoRingElement:
    """``u ∘ v``; Ext parts move by the End actions, Ext·Ext vanishes."""
    u._check_base(v)
    a = u.base
    g0, g1 = a.g0, a.g1
    cs01, cs10 = ext_cyclic_sum(g0, g1), ext_cyclic_sum(g1, g0)
    k01 = _add(cs01, ext_pushforward(g0, u.phi1, v.kappa01), ext_pullback(v.phi0, g1, u.kappa01))
    k10 = _add(cs10, ext_pushforward(g1, u.phi0, v.kappa10), ext_pullback(v.phi1, g0, u.kappa10))
    return EndoRingElement(a, u.phi0 @ v.phi0, u.phi1 @ v.phi1, k01, k10)


def gamma_infinity(u: EndoRingElement) -> tuple[GroupHom, GroupHom]:
    """The index map: the induced endomorphism of ``K*(A)``."""
    return u.phi0, u.phi1


@dataclass(frozen=True)
class NotInvertible:
    """Certificate that the End part is not an automorphism.

    ``degree`` is the first failing degree; ``cokernel`` and ``kernel`` are
    those of the failing endomorphism, and at least one is nontrivial.
    """
    degree: int
    cokernel: FgAbGroup
    kernel: FgAbGroup

    def to_record(self) -> dict:
        return {"invertible": False, "degree": self.degree,
                "cokernel": self.cokernel.to_record(), "kernel": self.kernel.to_record()}


def try_invert(u: EndoRingElement) -> EndoRingElement | NotInvertible:
    """Exact inverse ``(1 - xk)x`` with ``x = w^-1``, or a certificate."""
    for degree, phi in enumerate(gamma_infinity(u)):
        if not phi.is_automorphism():
            return NotInvertible(degree, phi.cokernel(), phi.kernel())
    x = EndoRingElement.make(u.base, u.phi0.inverse(), u.phi1.inverse())
    k = u.ext_part()
    xk = multiply(x, k)
    return multiply(EndoRingElement.identity(u.base) - xk, x)
