import random

import pytest

from kkdual import fgab
from kkdual.expr import parse_graded as G, parse_group
from kkdual.fgab import FgAbGroup, GroupHom
from kkdual.kkobj import GradedGroup, Parity, dual
from kkdual.laws import Bounds, random_group, random_hom, system_with_prefix
from kkdual.limits import (
    EXT_UNCOUNTABLE, FINITE_GENERATION, DirectSystem, MalformedSystem, Unbounded, analyze_tail,
    colimit_is_fg, dual_verdict, stabilization_bound,
)

import oracles

C = FgAbGroup.cyclic
ZERO = DirectSystem.constant(fgab.TRIVIAL)
SMALL = Bounds(2, 2, 12)


def test_colimit_examples():
    assert colimit_is_fg(DirectSystem.periodic(fgab.Z, [[2]])) == (False, Unbounded)
    assert colimit_is_fg(DirectSystem.periodic(C(4), [[3]])) == (True, C(4))
    g = parse_group("Z^2 + Z/6")
    assert colimit_is_fg(DirectSystem.constant(g)) == (True, g)


def test_colimit_kills_eventual_kernel():
    # Z/8 under doubling dies after three steps
    t = analyze_tail(C(8), GroupHom.scalar(C(8), 2))
    assert t.steps == 3 and t.reduced.is_trivial()
    assert colimit_is_fg(DirectSystem.periodic(C(8), [[2]])) == (True, fgab.TRIVIAL)
    # Z + Z/4 with (x, y) -> (x, 2y): the torsion dies, Z survives
    g = parse_group("Z + Z/4")
    assert colimit_is_fg(DirectSystem.periodic(g, [[1, 0], [0, 2]])) == (True, fgab.Z)
    # nilpotent shift on Z^2 kills everything
    assert colimit_is_fg(DirectSystem.periodic(FgAbGroup.free(2), [[0, 1], [0, 0]])) == (True, fgab.TRIVIAL)
    # Z^2 with diag(1, 3): Z + Z[1/3]
    assert colimit_is_fg(DirectSystem.periodic(FgAbGroup.free(2), [[1, 0], [0, 3]])) == (False, Unbounded)
    # a unimodular shear is an automorphism
    assert colimit_is_fg(DirectSystem.periodic(FgAbGroup.free(2), [[1, 1], [0, 1]])) == (True, FgAbGroup.free(2))


def test_stable_kernel_matches_brute_force():
    rng = random.Random(12)
    for _ in range(300):
        g = random_group(rng, Bounds(0, 2, 16))
        m = random_hom(rng, g, g)
        t = analyze_tail(g, m)
        killed = oracles.stable_kernel_brute_force(g.torsion, m.matrix.to_rows()) if g.torsion else 1
        assert g.order() // t.reduced.order() == killed
        assert t.steps <= stabilization_bound(g)
        # finite tails always have f.g. colimits: an injective endomorphism of a finite group is onto
        assert t.reduced_map_surjective


def test_stabilization_bound_is_respected():
    rng = random.Random(13)
    for _ in range(300):
        g = random_group(rng, SMALL)
        m = random_hom(rng, g, g)
        assert analyze_tail(g, m).steps <= stabilization_bound(g)


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("m", [2, 3, 10])
def test_multiplying_tail_never_fg(r, m):
    g = FgAbGroup.free(r)
    s = DirectSystem.periodic(g, GroupHom.scalar(g, m))
    assert colimit_is_fg(s) == (False, Unbounded)
    v = dual_verdict(s, ZERO)
    assert not v.exists and EXT_UNCOUNTABLE in v.mechanisms


def test_prefix_padding_invariance():
    rng = random.Random(14)
    for _ in range(300):
        g = random_group(rng, SMALL)
        s = DirectSystem.periodic(g, random_hom(rng, g, g))
        padded = system_with_prefix(rng, system_with_prefix(rng, s))
        assert colimit_is_fg(padded) == colimit_is_fg(s)


def test_malformed_systems():
    with pytest.raises(MalformedSystem):
        DirectSystem(((C(2), GroupHom.identity(C(2))),), C(4), GroupHom.identity(C(4)))
    with pytest.raises(MalformedSystem):
        DirectSystem((), C(4), GroupHom.zero(C(4), C(2)))
    with pytest.raises(MalformedSystem):
        DirectSystem.from_record({"tail_group": {"rank": 1, "torsion": []}})
    with pytest.raises(MalformedSystem):
        DirectSystem.from_record({"tail_group": {"rank": 0, "torsion": [4]}, "tail_map": [[1, 2]]})


def test_verdict_examples():
    q = DirectSystem.periodic(fgab.Z, [[2]])
    v = dual_verdict(q, ZERO)
    assert not v.exists and v.failing_degrees == (0,)
    assert v.mechanisms == (FINITE_GENERATION, EXT_UNCOUNTABLE)
    assert "Ext(Q, Z)" in v.reason
    for p in (2, 3, 5, 7):
        v = dual_verdict(DirectSystem.constant(C(p)), ZERO)
        assert v.exists and v.dual == G(f"[0 ; Z/{p}]")
    assert dual_verdict(ZERO, ZERO).dual == GradedGroup()


def test_verdict_with_torsion_only_names_finite_generation():
    # Z[1/2] + Z/3 in degree 1: not f.g., and not torsion-free
    g = parse_group("Z + Z/3")
    s = DirectSystem.periodic(g, [[2, 0], [0, 1]])
    v = dual_verdict(ZERO, s)
    assert not v.exists and v.failing_degrees == (1,)
    assert v.mechanisms == (FINITE_GENERATION,)


def test_verdict_agrees_with_dual():
    rng = random.Random(15)
    for _ in range(200):
        g0, g1 = random_group(rng, SMALL), random_group(rng, SMALL)
        s0 = DirectSystem.periodic(g0, random_hom(rng, g0, g0))
        s1 = DirectSystem.periodic(g1, random_hom(rng, g1, g1))
        (fg0, c0), (fg1, c1) = colimit_is_fg(s0), colimit_is_fg(s1)
        parity = rng.choice(list(Parity))
        v = dual_verdict(s0, s1, parity)
        assert v.exists == (fg0 and fg1)
        if v.exists:
            assert v.dual == dual(GradedGroup(c0, c1), parity)


def test_record_roundtrip():
    s = DirectSystem.periodic(parse_group("Z + Z/4"), [[1, 0], [1, 3]])
    s = s.with_stage(C(2), GroupHom.from_rows(C(2), s.tail_group, [[0], [2]]))
    rec = s.to_record()
    assert rec["prefix"][0] == {"group": {"rank": 0, "torsion": [2]}, "map": [[0], [2]]}
    assert DirectSystem.from_record(rec) == s
    assert repr(Unbounded) == "Unbounded"
