"""Finite equivalence problems, brute-force deciders, and verified reductions.

An equivalence problem is a finite enumerable object set with a total
decide predicate.  The two concrete problems built here are single-matrix
similarity and pair simultaneous similarity; the first has a full invariant
(the factor chain), the second is decided by exhaustive orbit search only.

Reductions are many-to-one maps between problems that preserve and reflect
equivalence.  Machine-model resource bounds are represented as a step
budget charged per mapped object, not as an actual machine encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BudgetExceeded, ModulusMismatch, NotSquare, ShapeMismatch, TooLarge
from .invariants import invariant_factors
from .matrix import Matrix, MatrixTuple, enumerate_matrices, enumerate_tuples, gl_pairs

MAX_OBJECTS = 100_000
MAX_DECIDE_CALLS = 100_000_000


def _check_pair(a: Matrix, b: Matrix) -> None:
    if not a.is_square() or not b.is_square():
        raise NotSquare("similarity is defined for square matrices")
    if a.shape != b.shape:
        raise ShapeMismatch(f"{a.shape} vs {b.shape}")
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"F_{a.modulus} vs F_{b.modulus}")


def similar(a: Matrix, b: Matrix) -> bool:
    """Similarity via the full invariant: equal factor chains iff conjugate."""
    _check_pair(a, b)
    return invariant_factors(a) == invariant_factors(b)


def similar_bruteforce(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """First conjugator S with S A S^{-1} = B in GL enumeration order, or None.

    Independent of the invariant route; this is the oracle the full invariant
    is validated against.
    """
    _check_pair(a, b)
    for s, s_inv in gl_pairs(a.rows, a.modulus):
        if s @ a @ s_inv == b:
            return s
    return None


def sim_similar(t: MatrixTuple, u: MatrixTuple) -> Optional[Matrix]:
    """Simultaneous similarity by exhaustive search for one shared conjugator.

    No full invariant is implemented for tuples; brute force is the decider.
    """
    if len(t) != len(u):
        raise ShapeMismatch(f"tuple lengths {len(t)} vs {len(u)}")
    if t.size != u.size:
        raise ShapeMismatch(f"component sizes {t.size} vs {u.size}")
    if t.modulus != u.modulus:
        raise ModulusMismatch(f"F_{t.modulus} vs F_{u.modulus}")
    for s, s_inv in gl_pairs(t.size, t.modulus):
        if t.conjugate(s, s_inv) == u:
            return s
    return None


@dataclass(frozen=True)
class EquivProblem:
    """A finite object set with a total equivalence decider."""

    name: str
    objects: tuple
    decide: Callable[[object, object], bool]

    def __repr__(self):
        return f"EquivProblem({self.name}, {len(self.objects)} objects)"


def similarity_problem(n: int, p: int) -> EquivProblem:
    """All of M_n(F_p) under conjugation by one invertible matrix."""
    return EquivProblem(
        name=f"matrix-similarity(n={n},p={p})",
        objects=tuple(enumerate_matrices(n, n, p)),
        decide=similar,
    )


def pair_similarity_problem(n: int, p: int) -> EquivProblem:
    """All pairs of M_n(F_p) matrices under simultaneous conjugation."""
    return EquivProblem(
        name=f"pair-similarity(n={n},p={p})",
        objects=tuple(enumerate_tuples(2, n, p)),
        decide=lambda t, u: sim_similar(t, u) is not None,
    )


class _CallMeter:
    __slots__ = ("calls",)

    def __init__(self):
        self.calls = 0

    def tick(self):
        self.calls += 1
        if self.calls > MAX_DECIDE_CALLS:
            raise TooLarge(f"more than {MAX_DECIDE_CALLS} decide calls")


@dataclass(frozen=True)
class OrbitTable:
    """The materialized quotient of a problem's object set.

    classes holds sorted object indices per equivalence class;
    representatives are the enumeration-minimal members, which makes them
    canonical because enumeration is a strict total order.
    """

    problem: EquivProblem
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def representative_objects(self) -> tuple:
        return tuple(self.problem.objects[i] for i in self.representatives)


def orbit_table(problem: EquivProblem) -> OrbitTable:
    """Partition the object set into equivalence classes by pairwise deciding."""
    objs = problem.objects
    if len(objs) > MAX_OBJECTS:
        raise TooLarge(f"{len(objs)} objects exceed the orbit-table guard")
    meter = _CallMeter()
    reps: list[int] = []
    members: list[list[int]] = []
    for i, obj in enumerate(objs):
        for k, r in enumerate(reps):
            meter.tick()
            if problem.decide(obj, objs[r]):
                members[k].append(i)
                break
        else:
            reps.append(i)
            members.append([i])
    return OrbitTable(
        problem=problem,
        classes=tuple(tuple(c) for c in members),
        representatives=tuple(reps),
    )


@dataclass(frozen=True)
class InvariantCandidate:
    """A named total map from objects to comparable values."""

    name: str
    map: Callable[[object], object]


@dataclass(frozen=True)
class InvariantReport:
    """Outcome of checking a candidate invariant against a problem.

    status is one of "not_invariant" (witness: equivalent objects with
    different values), "partial" (witness: inequivalent objects sharing a
    value), or "full".
    """

    status: str
    witness: Optional[tuple]

    NOT_INVARIANT = "not_invariant"
    PARTIAL = "partial"
    FULL = "full"


def verify_invariant(problem: EquivProblem, cand: InvariantCandidate) -> InvariantReport:
    """Classify a candidate as not an invariant, a partial one, or a full one."""
    objs = problem.objects
    if len(objs) > MAX_OBJECTS:
        raise TooLarge(f"{len(objs)} objects exceed the verification guard")
    meter = _CallMeter()
    values = [cand.map(o) for o in objs]
    separation_witness = None
    for i in range(len(objs)):
        for j in range(i + 1, len(objs)):
            meter.tick()
            eq = problem.decide(objs[i], objs[j])
            same = values[i] == values[j]
            if eq and not same:
                return InvariantReport(InvariantReport.NOT_INVARIANT, (objs[i], objs[j]))
            if same and not eq and separation_witness is None:
                separation_witness = (objs[i], objs[j])
    if separation_witness is not None:
        return InvariantReport(InvariantReport.PARTIAL, separation_witness)
    return InvariantReport(InvariantReport.FULL, None)


@dataclass
class ReductionWitness:
    """A many-to-one map between problems, with per-object step accounting.

    step_cost declares the elementary-operation charge for mapping one
    object; step_budget is the per-object bound the charge must respect.
    verified is set only after the exhaustive bidirectional check passes.
    """

    source: EquivProblem
    target: EquivProblem
    map: Callable[[object], object]
    step_cost: Optional[Callable[[object], int]] = None
    step_budget: Optional[int] = None
    verified: bool = field(default=False, compare=False)
    steps_recorded: int = field(default=0, compare=False)

    def apply(self, obj) -> tuple[object, int]:
        cost = self.step_cost(obj) if self.step_cost is not None else 0
        return self.map(obj), cost


def verify_reduction(witness: ReductionWitness) -> bool:
    """Exhaustively check that the map preserves and reflects equivalence.

    Raises BudgetExceeded if mapping any single object charges more steps
    than the witness's budget; records the total charge either way.
    """
    objs = witness.source.objects
    if len(objs) > MAX_OBJECTS:
        raise TooLarge(f"{len(objs)} objects exceed the verification guard")
    images = []
    total = 0
    for o in objs:
        img, cost = witness.apply(o)
        if witness.step_budget is not None and cost > witness.step_budget:
            raise BudgetExceeded(
                f"mapping one object charged {cost} steps against budget {witness.step_budget}"
            )
        total += cost
        images.append(img)
    witness.steps_recorded = total
    meter = _CallMeter()
    ok = True
    for i in range(len(objs)):
        for j in range(i + 1, len(objs)):
            meter.tick()
            meter.tick()
            if witness.source.decide(objs[i], objs[j]) != witness.target.decide(
                images[i], images[j]
            ):
                ok = False
                break
        if not ok:
            break
    witness.verified = ok
    return ok


def identity_reduction(problem: EquivProblem, step_budget: Optional[int] = None) -> ReductionWitness:
    return ReductionWitness(
        source=problem,
        target=problem,
        map=lambda o: o,
        step_cost=None,
        step_budget=step_budget,
    )


def transpose_reduction(problem: EquivProblem, step_budget: Optional[int] = None) -> ReductionWitness:
    """A -> A^T on a matrix problem; charges one move per entry."""
    return ReductionWitness(
        source=problem,
        target=problem,
        map=lambda a: a.transpose(),
        step_cost=lambda a: a.rows * a.cols,
        step_budget=step_budget,
    )


def compose_reductions(
    first: ReductionWitness, second: ReductionWitness, step_budget: Optional[int] = None
) -> ReductionWitness:
    """The composed witness source -> middle -> final target."""
    if first.target is not second.source:
        raise ShapeMismatch("composition requires first.target to be second.source")

    def cost(o) -> int:
        img, c1 = first.apply(o)
        _, c2 = second.apply(img)
        return c1 + c2

    if step_budget is None and first.step_budget is not None and second.step_budget is not None:
        step_budget = first.step_budget + second.step_budget
    return ReductionWitness(
        source=first.source,
        target=second.target,
        map=lambda o: second.map(first.map(o)),
        step_cost=cost,
        step_budget=step_budget,
    )


class ProblemRegistry:
    """A finite registry of problems and verified reductions between them.

    Closure of a problem under the budgeted-reduction class is only ever
    asserted relative to what has been registered: the flag means every
    registered problem has a recorded, verified, in-budget reduction into
    the target.  Nothing is claimed about problems outside the registry.
    """

    def __init__(self):
        self.problems: dict[str, EquivProblem] = {}
        self.witnesses: list[ReductionWitness] = []

    def register(self, problem: EquivProblem) -> None:
        self.problems[problem.name] = problem

    def record(self, witness: ReductionWitness) -> None:
        if not witness.verified:
            raise ValueError("only verified witnesses may be recorded")
        self.witnesses.append(witness)

    def closed_in_class(self, target: EquivProblem) -> bool:
        for problem in self.problems.values():
            if not any(
                w.source is problem and w.target is target for w in self.witnesses
            ):
                return False
        return True
