import pytest
from hypothesis import given, settings, strategies as st

from kkdual import fgab
from kkdual.expr import parse_graded as G
from kkdual.fgab import FgAbGroup, direct_sum, from_orders
from kkdual.kkobj import (
    Construction, GradedGroup, Parity, UNIT, dual, kk_group, kunneth, modp_k,
    pairing_into_unit_is_trivial, suspend,
)

C = FgAbGroup.cyclic
PRIMES = (2, 3, 5, 7)

groups = st.builds(
    lambda r, ords: direct_sum(FgAbGroup.free(r), from_orders(ords)),
    st.integers(0, 3), st.lists(st.integers(2, 64), max_size=3))
graded = st.builds(GradedGroup, groups, groups)
parities = st.sampled_from(list(Parity))


@pytest.mark.parametrize("p", PRIMES)
def test_dual_of_moore_object(p):
    assert dual(G(f"[Z/{p} ; 0]")) == G(f"[0 ; Z/{p}]")
    assert suspend(dual(G(f"[Z/{p} ; 0]"))) == G(f"[Z/{p} ; 0]")


def test_dual_examples():
    assert dual(UNIT) == UNIT
    assert dual(G("[Z + Z/4 ; Z/3]")) == G("[Z + Z/3 ; Z/4]")
    assert dual(G("[Z + Z/4 ; Z/3]"), Parity.ODD) == G("[Z/4 ; Z + Z/3]")
    # [DERIVED] the hand formula agrees with KK into the unit
    a = G("[Z + Z/4 ; Z/3]")
    assert kk_group(a, UNIT, 0) == G("[Z + Z/3 ; 0]").g0
    assert kk_group(a, UNIT, 1) == C(4)


def test_suspend_examples():
    assert suspend(G("[Z/5 ; 0]")) == G("[0 ; Z/5]")
    a = G("[Z^2 + Z/6 ; Z/4]")
    assert suspend(suspend(a)) == a


@pytest.mark.parametrize("p", PRIMES)
def test_kunneth_moore(p):
    n = G(f"[Z/{p} ; 0]")
    assert kunneth(n, n) == G(f"[Z/{p} ; Z/{p}]")
    assert kk_group(kunneth(n, n), UNIT, 0) == C(p)
    assert kk_group(UNIT, kunneth(n, n), 0) == C(p)


def test_kunneth_examples():
    a = G("[Z^2 + Z/6 ; Z/4]")
    assert kunneth(a, UNIT) == a == kunneth(UNIT, a)
    # [DERIVED] ranks: K0 = 2*1 + 1*1, K1 = 2*1 + 1*1
    assert kunneth(G("[Z^2 ; Z]"), G("[Z ; Z]")) == G("[Z^3 ; Z^3]")


def test_kk_examples():
    assert kk_group(UNIT, UNIT, 0) == fgab.Z
    b = G("[Z + Z/6 ; Z/4]")
    assert kk_group(UNIT, b, 0) == b.g0
    assert kk_group(UNIT, b, 1) == b.g1
    with pytest.raises(ValueError):
        kk_group(UNIT, b, 2)


def test_modp_examples():
    for p in PRIMES:
        for c in Construction:
            assert modp_k(UNIT, p, c, 0) == C(p)
            assert modp_k(UNIT, p, c, 1).is_trivial()
            assert modp_k(GradedGroup(), p, c, 0).is_trivial()
        n = G(f"[Z/{p} ; 0]")
        for j in (0, 1):
            assert modp_k(n, p, Construction.BY_TENSOR, j) == modp_k(n, p, Construction.BY_KK, j) == C(p)
    with pytest.raises(ValueError):
        modp_k(UNIT, 1, Construction.BY_TENSOR, 0)


def test_pairing_examples():
    for p in PRIMES:
        n = G(f"[Z/{p} ; 0]")
        assert pairing_into_unit_is_trivial(kunneth(n, n))
    assert not pairing_into_unit_is_trivial(UNIT)
    assert not pairing_into_unit_is_trivial(G("[Z + Z/2 ; 0]"))


@settings(max_examples=300, deadline=None)
@given(graded, parities)
def test_double_dual(a, p):
    assert dual(dual(a, p), p) == a


@settings(max_examples=200, deadline=None)
@given(graded, graded)
def test_dual_of_tensor(a, b):
    assert dual(kunneth(a, b)) == kunneth(dual(a), dual(b))


@settings(max_examples=200, deadline=None)
@given(graded, graded)
def test_kk_contravariant_under_dual(a, b):
    for i in (0, 1):
        assert kk_group(a, b, i) == kk_group(dual(b), dual(a), i)


@settings(max_examples=200, deadline=None)
@given(graded)
def test_cohomology_is_homology_of_dual(a):
    da = dual(a)
    for i in (0, 1):
        assert kk_group(a, UNIT, i) == da[i]


@settings(max_examples=200, deadline=None)
@given(graded, st.integers(2, 12))
def test_modp_constructions_agree(a, n):
    for j in (0, 1):
        assert modp_k(a, n, Construction.BY_TENSOR, j) == modp_k(a, n, Construction.BY_KK, j)


small = st.builds(
    GradedGroup,
    st.builds(lambda r, o: direct_sum(FgAbGroup.free(r), from_orders(o)),
              st.integers(0, 2), st.lists(st.integers(2, 12), max_size=2)),
    st.builds(lambda r, o: direct_sum(FgAbGroup.free(r), from_orders(o)),
              st.integers(0, 2), st.lists(st.integers(2, 12), max_size=2)))


@settings(max_examples=150, deadline=None)
@given(small, small, small)
def test_kunneth_symmetric_monoidal(a, b, c):
    assert kunneth(a, b) == kunneth(b, a)
    assert kunneth(kunneth(a, b), c) == kunneth(a, kunneth(b, c))
    assert kunneth(a, UNIT) == a


@settings(max_examples=200, deadline=None)
@given(graded, parities)
def test_suspend_commutes_with_dual(a, p):
    assert suspend(dual(a, p)) == dual(suspend(a), p)


def test_records():
    a = G("[Z + Z/4 ; Z/3]")
    assert a.to_record() == {"K0": {"rank": 1, "torsion": [4]}, "K1": {"rank": 0, "torsion": [3]}}
    assert GradedGroup.from_record(a.to_record()) == a
    assert str(a) == "[Z + Z/4 ; Z/3]"
