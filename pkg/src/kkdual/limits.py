"""Countable K-theory as eventually periodic direct systems.

A system is a finite prefix ``G_0 -> G_1 -> ... -> T`` followed by one
endomorphism ``M`` of the tail group ``T`` repeated forever.  The colimit
only depends on the tail, and it is finitely generated exactly when ``M``
becomes an automorphism after dividing out ``K = union of ker(M^n)``:

* if ``M`` is an automorphism of ``T/K``, the colimit is ``T/K``;
* otherwise ``M`` is injective but not onto on ``T/K``, the stages grow
  strictly forever, and the colimit is not finitely generated.

A non-finitely-generated colimit is never turned into a group value.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import primeomega

from . import fgab
from .fgab import FgAbGroup, GroupHom
from .intlin import IntMatrix
from .kkobj import GradedGroup, Parity, dual


class MalformedSystem(ValueError):
    pass


class _Unbounded:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Unbounded"

    def __reduce__(self):
        return (_Unbounded, ())


Unbounded = _Unbounded()


@dataclass(frozen=True)
class DirectSystem:
    prefix: tuple[tuple[FgAbGroup, GroupHom], ...]
    tail_group: FgAbGroup
    tail_map: GroupHom

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(tuple(p) for p in self.prefix))
        stages = [g for g, _ in self.prefix] + [self.tail_group]
        for i, (g, f) in enumerate(self.prefix):
            if f.source != g or f.target != stages[i + 1]:
                raise MalformedSystem(f"prefix map {i} does not go from stage {i} to stage {i + 1}")
        if self.tail_map.source != self.tail_group or self.tail_map.target != self.tail_group:
            raise MalformedSystem("tail map is not an endomorphism of the tail group")

    @classmethod
    def constant(cls, g: FgAbGroup) -> DirectSystem:
        return cls((), g, GroupHom.identity(g))

    @classmethod
    def periodic(cls, g: FgAbGroup, m: GroupHom | list) -> DirectSystem:
        if not isinstance(m, GroupHom):
            m = GroupHom.from_rows(g, g, m)
        return cls((), g, m)

    def with_stage(self, g: FgAbGroup, f: GroupHom) -> DirectSystem:
        """Prepend a stage ``g`` mapping into the current first stage by ``f``."""
        return DirectSystem(((g, f),) + self.prefix, self.tail_group, self.tail_map)

    def to_record(self) -> dict:
        return {
            "prefix": [{"group": g.to_record(), "map": f.to_record()} for g, f in self.prefix],
            "tail_group": self.tail_group.to_record(),
            "tail_map": self.tail_map.to_record(),
        }

    @classmethod
    def from_record(cls, rec: dict) -> DirectSystem:
        try:
            tail = FgAbGroup.from_record(rec["tail_group"])
            groups = [FgAbGroup.from_record(s["group"]) for s in rec.get("prefix", [])]
            stages = groups + [tail]
            prefix = []
            for i, s in enumerate(rec.get("prefix", [])):
                m = IntMatrix.from_rows(s["map"], stages[i].ngens)
                prefix.append((stages[i], GroupHom(stages[i], stages[i + 1], m)))
            tail_map = GroupHom(tail, tail, IntMatrix.from_rows(rec["tail_map"], tail.ngens))
        except (KeyError, TypeError) as e:
            raise MalformedSystem(f"bad direct system record: {e}") from e
        except ValueError as e:
            raise MalformedSystem(str(e)) from e
        return cls(tuple(prefix), tail, tail_map)


@dataclass(frozen=True)
class TailAnalysis:
    """What the tail map does after killing its eventual kernel."""
    stable_kernel: IntMatrix        # generators of K, columns in tail coordinates
    steps: int                      # n with ker(M^n) = K
    reduced: FgAbGroup              # T / K
    reduced_map_surjective: bool


def stabilization_bound(g: FgAbGroup) -> int:
    """Upper bound on the steps needed for ``ker(M^n)`` to stop growing.

    Between rank jumps of the kernel each strict step at least halves the
    torsion of ``M^n(T)``, which stays inside the torsion of ``T``.
    """
    omega = sum(primeomega(d) for d in g.torsion)
    return g.rank + (g.rank + 1) * (omega + 1)


def analyze_tail(g: FgAbGroup, m: GroupHom) -> TailAnalysis:
    power = GroupHom.identity(g)
    bound = stabilization_bound(g)
    for n in range(bound + 1):
        nxt = m @ power
        cur_gens = power.kernel_generators()
        cur = fgab.quotient(g, cur_gens)
        nxt_quot = fgab.quotient(g, nxt.kernel_generators())
        # ker(M^n) ⊆ ker(M^{n+1}); equal quotients force equality (Hopfian)
        if nxt_quot == cur:
            big = m.matrix.hstack(g.relations()).hstack(cur_gens)
            surjective = fgab.canonicalize(big).is_trivial()
            return TailAnalysis(cur_gens, n, cur, surjective)
        power = nxt
    raise AssertionError(f"kernel chain did not stabilize within {bound} steps")


def colimit_is_fg(s: DirectSystem) -> tuple[bool, FgAbGroup | _Unbounded]:
    """Decide finite generation of the colimit; return it when it is f.g.

    >>> colimit_is_fg(DirectSystem.periodic(fgab.Z, [[2]]))
    (False, Unbounded)
    >>> colimit_is_fg(DirectSystem.periodic(FgAbGroup.cyclic(4), [[3]]))
    (True, FgAbGroup(rank=0, torsion=(4,)))
    """
    t = analyze_tail(s.tail_group, s.tail_map)
    if t.reduced_map_surjective:
        return True, t.reduced
    return False, Unbounded


FINITE_GENERATION = "finite_generation"
EXT_UNCOUNTABLE = "ext_uncountable"


@dataclass(frozen=True)
class DualVerdict:
    exists: bool
    dual: GradedGroup | None = None
    reason: str = ""
    failing_degrees: tuple[int, ...] = ()
    mechanisms: tuple[str, ...] = field(default=())

    def to_record(self) -> dict:
        rec = {"exists": self.exists}
        if self.exists:
            rec["dual"] = self.dual.to_record()
        else:
            rec["reason"] = self.reason
            rec["failing_degrees"] = list(self.failing_degrees)
            rec["mechanisms"] = list(self.mechanisms)
        return rec


def dual_verdict(s0: DirectSystem, s1: DirectSystem, parity: Parity = Parity.EVEN) -> DualVerdict:
    """Does an algebra with ``K_i = colim s_i`` have a Spanier-Whitehead K-dual?

    >>> dual_verdict(DirectSystem.periodic(fgab.Z, [[2]]), DirectSystem.constant(fgab.TRIVIAL)).mechanisms
    ('finite_generation', 'ext_uncountable')
    """
    results = [colimit_is_fg(s) for s in (s0, s1)]
    failing = tuple(i for i, (fg, _) in enumerate(results) if not fg)
    if not failing:
        return DualVerdict(True, dual(GradedGroup(results[0][1], results[1][1]), parity))

    mechanisms = [FINITE_GENERATION]
    lines = [f"K{i} is not finitely generated" for i in failing]
    lines.append("only objects with finitely generated K-theory have K-duals in the bootstrap category")
    torsion_free = [i for i in failing
                    if not analyze_tail((s0, s1)[i].tail_group, (s0, s1)[i].tail_map).reduced.torsion]
    if torsion_free:
        mechanisms.append(EXT_UNCOUNTABLE)
        degs = ", ".join(f"K{i}" for i in torsion_free)
        lines.append(
            f"{degs} is torsion-free but not free, so Ext of it into Z is uncountable "
            "(as Ext(Q, Z) = R), while the UCT would put that Ext inside a countable "
            "K-group of a separable dual")
    return DualVerdict(False, None, "; ".join(lines), failing, tuple(mechanisms))
