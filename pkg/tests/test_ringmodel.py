import random

import pytest

from kkdual.expr import parse_graded as G
from kkdual.fgab import GroupHom, ext_cyclic_sum
from kkdual.laws import Bounds, random_graded, random_ring_element
from kkdual.ringmodel import (
    BaseMismatch, EndoRingElement, NotInvertible, gamma_infinity, multiply, try_invert,
)

import oracles

SMALL = Bounds(2, 2, 12)


def random_kernel(rng, base):
    return random_ring_element(rng, base, kernel_only=True)


def test_element_validation():
    base = G("[Z/4 ; Z/6]")
    with pytest.raises(ValueError):
        EndoRingElement.make(base, [[1]], [[1]], [0, 0], [0])
    u = EndoRingElement.make(base, [[1]], [[1]], [7], [5])
    assert u.kappa01 == (1,) and u.kappa10 == (1,)    # Ext(Z/4, Z/6) = Ext(Z/6, Z/4) = Z/2


@pytest.mark.parametrize("base", ["[Z/4 ; Z/6]", "[Z + Z/3 ; Z/9]", "[Z/2 + Z/4 ; Z + Z/8]"])
def test_one_plus_k_times_one_minus_k(base):
    a = G(base)
    rng = random.Random(base)
    one = EndoRingElement.identity(a)
    for _ in range(50):
        k = random_kernel(rng, a)
        assert multiply(one + k, one - k) == one
        assert try_invert(one + k) == one - k


def test_split_embedding():
    a = G("[Z^2 + Z/4 ; Z/6]")
    rng = random.Random(1)
    from kkdual.laws import random_hom
    for _ in range(50):
        w1 = EndoRingElement.make(a, random_hom(rng, a.g0, a.g0), random_hom(rng, a.g1, a.g1))
        w2 = EndoRingElement.make(a, random_hom(rng, a.g0, a.g0), random_hom(rng, a.g1, a.g1))
        prod = multiply(w1, w2)
        assert prod == EndoRingElement.make(a, w1.phi0 @ w2.phi0, w1.phi1 @ w2.phi1)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_identity_end_part_adds_ext_parts(p):
    a = G(f"[Z/{p} ; Z/{p}]")
    for k, kp in [((1,), (2 % p,)), ((p - 1,), (1,))]:
        u = EndoRingElement.make(a, [[1]], [[1]], k, kp)
        v = EndoRingElement.make(a, [[1]], [[1]], kp, k)
        w = multiply(u, v)
        assert w.kappa01 == ((k[0] + kp[0]) % p,) and w.kappa10 == ((kp[0] + k[0]) % p,)
        assert gamma_infinity(w) == gamma_infinity(EndoRingElement.identity(a))


def test_gamma_infinity():
    a = G("[Z + Z/4 ; Z/6]")
    rng = random.Random(2)
    for _ in range(100):
        k = random_kernel(rng, a)
        z0, z1 = gamma_infinity(k)
        assert z0.is_zero() and z1.is_zero()
        u, v = random_ring_element(rng, a), random_ring_element(rng, a)
        assert gamma_infinity(u.end_part()) == gamma_infinity(u)
        uv0, uv1 = gamma_infinity(multiply(u, v))
        assert uv0 == u.phi0 @ v.phi0 and uv1 == u.phi1 @ v.phi1


def test_not_invertible_certificate():
    r = try_invert(EndoRingElement.make(G("[Z ; 0]"), [[2]], []))
    assert isinstance(r, NotInvertible)
    assert r.degree == 0 and str(r.cokernel) == "Z/2"
    r = try_invert(EndoRingElement.make(G("[Z/3 ; Z/4]"), [[1]], [[2]]))
    assert isinstance(r, NotInvertible)
    assert r.degree == 1 and str(r.cokernel) == "Z/2" and str(r.kernel) == "Z/2"


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_inverse_matches_modular_formula(p):
    a = G(f"[Z/{p} ; Z/{p}]")
    rng = random.Random(p)
    for _ in range(40):
        x, y = rng.randrange(1, p), rng.randrange(1, p)
        k01, k10 = rng.randrange(p), rng.randrange(p)
        u = EndoRingElement.make(a, [[x]], [[y]], [k01], [k10])
        xi, yi = pow(x, -1, p), pow(y, -1, p)
        # [DERIVED] (x, y, k01, k10)^-1 = (x^-1, y^-1, -y^-1 k01 x^-1, -x^-1 k10 y^-1) mod p
        expected = EndoRingElement.make(a, [[xi]], [[yi]], [-yi * k01 * xi], [-xi * k10 * yi])
        assert try_invert(u) == expected
        assert multiply(u, expected) == EndoRingElement.identity(a)


def test_invertible_iff_end_part_automorphism():
    rng = random.Random(9)
    seen = {True: 0, False: 0}
    for _ in range(400):
        a = random_graded(rng, SMALL)
        u = random_ring_element(rng, a)
        auto = all(oracles.is_automorphism_oracle((g.rank, g.torsion), phi.matrix.to_rows())
                   for g, phi in ((a.g0, u.phi0), (a.g1, u.phi1)))
        inv = try_invert(u)
        assert isinstance(inv, EndoRingElement) == auto
        seen[auto] += 1
        if auto:
            one = EndoRingElement.identity(a)
            assert multiply(u, inv) == one == multiply(inv, u)
    assert seen[True] > 50 and seen[False] > 50


def test_ring_axioms():
    rng = random.Random(4)
    for _ in range(200):
        a = random_graded(rng, SMALL)
        u, v, w = (random_ring_element(rng, a) for _ in range(3))
        one = EndoRingElement.identity(a)
        assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))
        assert multiply(one, u) == u == multiply(u, one)
        assert multiply(u, v + w) == multiply(u, v) + multiply(u, w)
        assert multiply(random_kernel(rng, a), random_kernel(rng, a)) == EndoRingElement.zero(a)


def test_base_mismatch():
    u = EndoRingElement.identity(G("[Z ; 0]"))
    v = EndoRingElement.identity(G("[Z/2 ; 0]"))
    with pytest.raises(BaseMismatch):
        multiply(u, v)


def test_record_roundtrip():
    a = G("[Z + Z/4 ; Z/6]")
    u = random_ring_element(random.Random(0), a)
    assert EndoRingElement.from_record(u.to_record()) == u
    assert len(u.kappa01) == len(ext_cyclic_sum(a.g0, a.g1).orders)
    # omitted maps default to the identity, omitted Ext parts to zero
    assert EndoRingElement.from_record({"base": a.to_record()}) == EndoRingElement.identity(a)


def test_phi_must_be_endomorphisms():
    a = G("[Z ; Z/2]")
    with pytest.raises(ValueError):
        EndoRingElement(a, GroupHom.identity(a.g1), GroupHom.identity(a.g1), (), ())
