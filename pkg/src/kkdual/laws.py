"""Random instance generators and the algebraic laws checked by ``kkdual check``.

Each law takes a ``random.Random`` and generator ``Bounds`` and returns
True when one freshly drawn instance satisfies it.  Law RNGs are seeded from ``(seed, law name)`` so a
transcript does not depend on which laws run or in what order.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import fgab, intlin
from .builders import ck_duality_check
from .expr import format_graded, parse_graded
from .fgab import FgAbGroup, GroupHom
from .intlin import IntMatrix
from .kkobj import Construction, GradedGroup, Parity, UNIT, dual, kk_group, kunneth, modp_k, suspend
from .limits import DirectSystem, colimit_is_fg
from .ringmodel import EndoRingElement, multiply, try_invert


@dataclass(frozen=True)
class Bounds:
    max_rank: int = 3
    max_factors: int = 3
    max_order: int = 64


DEFAULT_BOUNDS = Bounds()
SMALL_BOUNDS = Bounds(max_rank=2, max_factors=2, max_order=12)


def small(b: Bounds) -> Bounds:
    """Tighter bounds for laws whose cost grows fast with group size."""
    return Bounds(min(b.max_rank, SMALL_BOUNDS.max_rank), min(b.max_factors, SMALL_BOUNDS.max_factors),
                  min(b.max_order, SMALL_BOUNDS.max_order))


def random_group(rng: random.Random, b: Bounds = DEFAULT_BOUNDS) -> FgAbGroup:
    rank = rng.randint(0, b.max_rank)
    orders = [rng.randint(2, b.max_order) for _ in range(rng.randint(0, b.max_factors))]
    return fgab.direct_sum(FgAbGroup.free(rank), fgab.from_orders(orders))


def random_graded(rng: random.Random, b: Bounds = DEFAULT_BOUNDS) -> GradedGroup:
    return GradedGroup(random_group(rng, b), random_group(rng, b))


def random_hom(rng: random.Random, g: FgAbGroup, h: FgAbGroup, spread: int = 3) -> GroupHom:
    """A uniformly-ish random valid homomorphism ``g -> h``."""
    rows = []
    for e in h.orders:
        row = []
        for d in g.orders:
            if d == 0:
                row.append(rng.randrange(e) if e else rng.randint(-spread, spread))
            elif e == 0:
                row.append(0)
            else:
                step = e // math.gcd(d, e)
                row.append(step * rng.randrange(math.gcd(d, e)))
        rows.append(row)
    return GroupHom.from_rows(g, h, rows)


def random_matrix(rng: random.Random, max_dim: int = 3, lo: int = -3, hi: int = 3) -> IntMatrix:
    r, c = rng.randint(0, max_dim), rng.randint(0, max_dim)
    return IntMatrix.from_rows([[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)], c)


def random_ring_element(rng: random.Random, base: GradedGroup, kernel_only: bool = False) -> EndoRingElement:
    from .fgab import ext_cyclic_sum
    k01 = [rng.randrange(o) if o else 0 for o in ext_cyclic_sum(base.g0, base.g1).orders]
    k10 = [rng.randrange(o) if o else 0 for o in ext_cyclic_sum(base.g1, base.g0).orders]
    if kernel_only:
        return EndoRingElement.kernel_element(base, k01, k10)
    phi0 = random_hom(rng, base.g0, base.g0, spread=2)
    phi1 = random_hom(rng, base.g1, base.g1, spread=2)
    if rng.random() < 0.5:
        # bias towards automorphisms so both branches of try_invert are exercised
        phi0 = _random_automorphism(rng, base.g0)
        phi1 = _random_automorphism(rng, base.g1)
    return EndoRingElement(base, phi0, phi1, tuple(k01), tuple(k10))


def _random_automorphism(rng: random.Random, g: FgAbGroup) -> GroupHom:
    """Product of random unit scalings and valid shears on canonical generators."""
    m = GroupHom.identity(g)
    orders = g.orders
    for _ in range(3):
        rows = [[int(i == j) for j in range(g.ngens)] for i in range(g.ngens)]
        for i, d in enumerate(orders):
            if d == 0:
                rows[i][i] = rng.choice((1, -1))
            else:
                rows[i][i] = rng.choice([u for u in range(1, d) if math.gcd(u, d) == 1] or [1])
        if g.ngens >= 2:
            i, j = rng.sample(range(g.ngens), 2)
            # e_j -> e_j + c e_i is a valid shear when it respects the order of e_j
            d, e = orders[j], orders[i]
            if d == 0:
                c = rng.randint(-2, 2)
            elif e == 0:
                c = 0
            else:
                c = (e // math.gcd(d, e)) * rng.randrange(math.gcd(d, e))
            rows[i][j] += c
        try:
            step = GroupHom.from_rows(g, g, rows)
        except fgab.InvalidHomomorphism:
            continue
        if step.is_automorphism():
            m = step @ m
    return m


def system_with_prefix(rng: random.Random, s: DirectSystem, b: Bounds = SMALL_BOUNDS) -> DirectSystem:
    first = s.prefix[0][0] if s.prefix else s.tail_group
    g = random_group(rng, b)
    return s.with_stage(g, random_hom(rng, g, first))


# ---------------------------------------------------------------- laws

def _snf_certificate(rng, bounds):
    m = random_matrix(rng, 4, -5, 5)
    res = intlin.snf(m)
    if res.U @ m @ res.V != res.S:
        return False
    if m.rows and abs(intlin.det(res.U)) != 1 or m.cols and abs(intlin.det(res.V)) != 1:
        return False
    nz = [d for d in res.diag if d]
    if res.diag[:len(nz)] != tuple(nz) or any(d < 0 for d in res.diag):
        return False
    return all(q % p == 0 for p, q in zip(nz, nz[1:]))


def _snf_transpose(rng, bounds):
    m = random_matrix(rng, 4, -5, 5)
    a = [d for d in intlin.snf(m).diag if d]
    return a == [d for d in intlin.snf(m.T).diag if d]


def _kernel_rank(rng, bounds):
    m = random_matrix(rng, 4, -3, 3)
    kb = intlin.kernel_basis(m)
    return intlin.rank(m) + kb.cols == m.cols and (m @ kb).is_zero()


def _bilinear(fn):
    def law(rng, bounds):
        g1, g2, h = random_group(rng, bounds), random_group(rng, bounds), random_group(rng, bounds)
        left = fn(fgab.direct_sum(g1, g2), h)
        right = fgab.direct_sum(fn(g1, h), fn(g2, h))
        left2 = fn(h, fgab.direct_sum(g1, g2))
        right2 = fgab.direct_sum(fn(h, g1), fn(h, g2))
        return left == right and left2 == right2
    return law


def _symmetric(rng, bounds):
    g, h = random_group(rng, bounds), random_group(rng, bounds)
    return fgab.tensor(g, h) == fgab.tensor(h, g) and fgab.tor(g, h) == fgab.tor(h, g)


def _hom_ext_cardinality(rng, bounds):
    finite = Bounds(0, bounds.max_factors, bounds.max_order)
    g, h = random_group(rng, finite), random_group(rng, finite)
    return fgab.hom(g, h).order() == fgab.ext(g, h).order()


def _ext_into_z(rng, bounds):
    g = random_group(rng, bounds)
    return fgab.ext(g, fgab.Z) == g.torsion_part()


def _ext_functorial(rng, bounds):
    g, gp, gpp, h = (random_group(rng, small(bounds)) for _ in range(4))
    f, k = random_hom(rng, g, gp), random_hom(rng, gp, gpp)
    lhs = fgab.induced_ext_map(k @ f, h)
    rhs = fgab.induced_ext_map(f, h) @ fgab.induced_ext_map(k, h)
    return lhs == rhs


def _canonicalize_idempotent(rng, bounds):
    g = random_group(rng, bounds)
    return fgab.canonicalize(g.relations()) == g


def _double_dual(parity):
    def law(rng, bounds):
        a = random_graded(rng, bounds)
        return dual(dual(a, parity), parity) == a
    return law


def _dual_multiplicative(rng, bounds):
    x, y = random_graded(rng, bounds), random_graded(rng, bounds)
    return dual(kunneth(x, y)) == kunneth(dual(x), dual(y))


def _kk_contravariant(rng, bounds):
    x, y = random_graded(rng, bounds), random_graded(rng, bounds)
    return all(kk_group(x, y, i) == kk_group(dual(y), dual(x), i) for i in (0, 1))


def _duality_consistency(rng, bounds):
    a = random_graded(rng, bounds)
    da = dual(a)
    return all(kk_group(a, UNIT, i) == da[i] for i in (0, 1))


def _modp_agreement(rng, bounds):
    a = random_graded(rng, bounds)
    n = rng.randint(2, 12)
    return all(modp_k(a, n, Construction.BY_TENSOR, j) == modp_k(a, n, Construction.BY_KK, j)
               for j in (0, 1))


def _kunneth_monoidal(rng, bounds):
    x, y, z = (random_graded(rng, small(bounds)) for _ in range(3))
    return (kunneth(x, y) == kunneth(y, x)
            and kunneth(kunneth(x, y), z) == kunneth(x, kunneth(y, z))
            and kunneth(x, UNIT) == x)


def _suspend_dual(rng, bounds):
    a = random_graded(rng, bounds)
    p = rng.choice(list(Parity))
    return suspend(dual(a, p)) == dual(suspend(a), p) and suspend(suspend(a)) == a


def _ring_inverse(rng, bounds):
    base = random_graded(rng, small(bounds))
    u = random_ring_element(rng, base)
    inv = try_invert(u)
    auto = u.phi0.is_automorphism() and u.phi1.is_automorphism()
    if not isinstance(inv, EndoRingElement):
        return not auto
    one = EndoRingElement.identity(base)
    return auto and multiply(u, inv) == one and multiply(inv, u) == one


def _ring_square_zero(rng, bounds):
    base = random_graded(rng, small(bounds))
    k1 = random_ring_element(rng, base, kernel_only=True)
    k2 = random_ring_element(rng, base, kernel_only=True)
    return multiply(k1, k2) == EndoRingElement.zero(base)


def _ring_associative(rng, bounds):
    base = random_graded(rng, small(bounds))
    u, v, w = (random_ring_element(rng, base) for _ in range(3))
    one = EndoRingElement.identity(base)
    return (multiply(multiply(u, v), w) == multiply(u, multiply(v, w))
            and multiply(one, u) == u == multiply(u, one))


def _ck_duality(rng, bounds):
    n = rng.randint(1, 6)
    while True:
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        a = IntMatrix.from_rows(rows, n)
        if all(any(r) for r in rows) and all(any(c) for c in a.columns()):
            return ck_duality_check(a)


def _colimit_prefix(rng, bounds):
    g = random_group(rng, small(bounds))
    s = DirectSystem.periodic(g, random_hom(rng, g, g))
    padded = system_with_prefix(rng, system_with_prefix(rng, s, small(bounds)), small(bounds))
    return colimit_is_fg(s) == colimit_is_fg(padded)


def _parse_roundtrip(rng, bounds):
    a = random_graded(rng, bounds)
    text = format_graded(a)
    return parse_graded(text) == a and format_graded(parse_graded(text)) == text


LAWS: dict[str, Callable[[random.Random, Bounds], bool]] = {
    "snf_certificate": _snf_certificate,
    "snf_transpose_invariant": _snf_transpose,
    "kernel_rank_nullity": _kernel_rank,
    "hom_additive": _bilinear(fgab.hom),
    "ext_additive": _bilinear(fgab.ext),
    "tensor_additive": _bilinear(fgab.tensor),
    "tor_additive": _bilinear(fgab.tor),
    "tensor_tor_symmetric": _symmetric,
    "finite_hom_ext_same_order": _hom_ext_cardinality,
    "ext_into_z_is_torsion": _ext_into_z,
    "ext_functorial": _ext_functorial,
    "canonicalize_idempotent": _canonicalize_idempotent,
    "double_dual_even": _double_dual(Parity.EVEN),
    "double_dual_odd": _double_dual(Parity.ODD),
    "dual_of_tensor": _dual_multiplicative,
    "kk_contravariant_under_dual": _kk_contravariant,
    "kk_into_unit_is_dual": _duality_consistency,
    "modp_constructions_agree": _modp_agreement,
    "kunneth_symmetric_monoidal": _kunneth_monoidal,
    "suspend_commutes_with_dual": _suspend_dual,
    "ring_inverse": _ring_inverse,
    "ring_kernel_square_zero": _ring_square_zero,
    "ring_associative_unital": _ring_associative,
    "ck_duality": _ck_duality,
    "colimit_prefix_invariant": _colimit_prefix,
    "parse_roundtrip": _parse_roundtrip,
}


@dataclass(frozen=True)
class LawResult:
    name: str
    cases: int
    failures: int
    first_failure: int | None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" failures={self.failures} first={self.first_failure}" if self.failures else ""
        return f"{status} {self.name} cases={self.cases}{tail}"


def run_law(name: str, seed: int, cases: int, bounds: Bounds = DEFAULT_BOUNDS) -> LawResult:
    law = LAWS[name]
    rng = random.Random(f"{seed}:{name}")
    failures, first = 0, None
    for i in range(cases):
        try:
            ok = law(rng, bounds)
        except Exception:
            ok = False
        if not ok:
            failures += 1
            first = i if first is None else first
    return LawResult(name, cases, failures, first)


def _run_law_args(args):
    return run_law(*args)


def run_suite(seed: int, cases: int, names=None, jobs: int = 1,
              bounds: Bounds = DEFAULT_BOUNDS) -> list[LawResult]:
    """Run laws; results come back in the order of ``names`` whatever ``jobs`` is."""
    names = list(LAWS) if names is None else list(names)
    work = [(n, seed, cases, bounds) for n in names]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_law_args, work))
    return [run_law(*w) for w in work]
