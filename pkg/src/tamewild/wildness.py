"""Non-commutative polynomial transforms and the containment falsifier.

A candidate containment of the pair problem in the single-matrix problem is
a polynomial transform sending pairs to single matrices while preserving
and reflecting equivalence.  The falsifier refutes candidates in two
stages.  The scalar stage exploits that scalar tuples commute and sit in
singleton orbits: any two distinct scalar pairs with equal transform values
already violate the reflection direction, and over F_p a value collision
always exists by pigeonhole (p^2 inputs, at most p outputs).  When the
scalar specialization is constant that collision is uninformative, so an
exhaustive stage scans all tuple pairs at desk scale instead.

The module also compiles bounded table-driven machines over one field
value into plain polynomials: per-state update tables are interpolated,
branches are composed, and branch results are recombined by interpolation
over the full node set, so the output polynomial agrees with the machine
run on every input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .algebra import Poly, check_prime, interpolate
from .equivalence import EquivProblem, ReductionWitness, sim_similar, similar
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    ModulusMismatch,
    NondeterministicTable,
    RunTooLong,
    ShapeMismatch,
    TooLarge,
)
from .invariants import PolyMatrix, invariant_factors
from .matrix import Matrix, MatrixTuple, enumerate_tuples, gl_pairs

MAX_COLLISION_PRIME = 101
STAGE2_MAX_SIZE = 2
STAGE2_PRIMES = (2, 3)
COMPILE_MAX_STEPS = 4
COMPILE_MAX_PRIME = 7

Word = tuple[int, ...]


class NcPoly:
    """A non-commutative polynomial in x_1..x_a over F_p.

    Terms map words (tuples of 1-based variable indices; the empty word is
    the constant term) to nonzero coefficients.  The zero polynomial stores
    no terms.
    """

    __slots__ = ("terms", "arity", "modulus")

    def __init__(self, terms: Mapping[Word, int], arity: int, modulus: int):
        check_prime(modulus)
        if arity < 1:
            raise ArityMismatch(f"arity must be at least 1, got {arity}")
        clean: dict[Word, int] = {}
        for word, c in terms.items():
            word = tuple(word)
            for letter in word:
                if not 1 <= letter <= arity:
                    raise ArityMismatch(
                        f"variable index {letter} outside 1..{arity} in word {word}"
                    )
            c = int(c) % modulus
            if c:
                clean[word] = c
        self.terms = clean
        self.arity = arity
        self.modulus = modulus

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, arity: int, modulus: int) -> "NcPoly":
        return cls({}, arity, modulus)

    @classmethod
    def constant(cls, c: int, arity: int, modulus: int) -> "NcPoly":
        return cls({(): c}, arity, modulus)

    @classmethod
    def variable(cls, index: int, arity: int, modulus: int) -> "NcPoly":
        return cls({(index,): 1}, arity, modulus)

    @classmethod
    def word(cls, word: Sequence[int], arity: int, modulus: int, coeff: int = 1) -> "NcPoly":
        return cls({tuple(word): coeff}, arity, modulus)

    # ---- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        """True when only the empty word carries a coefficient."""
        return all(w == () for w in self.terms)

    def sorted_terms(self) -> list[tuple[Word, int]]:
        """Terms in graded-lex word order; fixes every evaluation order."""
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def _check(self, other: "NcPoly") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")

    # ---- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NcPoly(out, self.arity, self.modulus)

    def __neg__(self):
        return NcPoly({w: -c for w, c in self.terms.items()}, self.arity, self.modulus)

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NcPoly(
                {w: c * other for w, c in self.terms.items()}, self.arity, self.modulus
            )
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        out: dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return NcPoly(out, self.arity, self.modulus)

    __rmul__ = __mul__

    # ---- protocol -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return (
                self.terms == other.terms
                and self.arity == other.arity
                and self.modulus == other.modulus
            )
        return NotImplemented

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.arity, self.modulus))

    def __str__(self):
        if not self.terms:
            return "0*1"
        parts = []
        for word, c in self.sorted_terms():
            w = "1" if not word else "".join(f"x{i}" for i in word)
            parts.append(f"{c}*{w}")
        return "+".join(parts)

    def __repr__(self):
        return f"NcPoly({self}, arity {self.arity}, mod {self.modulus})"


class _StepMeter:
    """Accumulates field multiply-add charges against an optional budget."""

    __slots__ = ("steps", "budget")

    def __init__(self, budget: Optional[int] = None):
        self.steps = 0
        self.budget = budget

    def charge(self, k: int) -> None:
        self.steps += k

    def within(self) -> bool:
        return self.budget is None or self.steps <= self.budget


def nc_eval(f: NcPoly, t: MatrixTuple, meter: Optional[_StepMeter] = None) -> Matrix:
    """Evaluate f on a matrix tuple: sum of coeff * (word product, left to right).

    The empty word contributes coeff * I.  One step is charged per field
    multiply-add: n^3 per matrix product, n^2 per scaling or accumulation.
    """
    if len(t) != f.arity:
        raise ArityMismatch(f"polynomial arity {f.arity}, tuple length {len(t)}")
    if t.modulus != f.modulus:
        raise ModulusMismatch(f"F_{f.modulus} vs F_{t.modulus}")
    n = t.size
    p = f.modulus
    if meter is None:
        meter = _StepMeter()
    acc = Matrix.zeros(n, n, p)
    for word, c in f.sorted_terms():
        if word:
            m = t[word[0] - 1]
            for letter in word[1:]:
                m = m @ t[letter - 1]
                meter.charge(n**3)
            term = m * c
        else:
            term = Matrix.scalar(n, c, p)
        meter.charge(n * n)
        acc = acc + term
        meter.charge(n * n)
    return acc


class Transform:
    """A b-tuple of non-commutative polynomials in a variables: the witness
    shape of a candidate containment between matrix problems."""

    __slots__ = ("polys",)

    def __init__(self, polys: Iterable[NcPoly]):
        polys = tuple(polys)
        if not polys:
            raise ArityMismatch("a transform needs at least one component")
        first = polys[0]
        for q in polys[1:]:
            first._check(q)
        self.polys = polys

    @classmethod
    def identity(cls, arity: int, modulus: int) -> "Transform":
        return cls(NcPoly.variable(i, arity, modulus) for i in range(1, arity + 1))

    @property
    def arity_in(self) -> int:
        return self.polys[0].arity

    @property
    def arity_out(self) -> int:
        return len(self.polys)

    @property
    def modulus(self) -> int:
        return self.polys[0].modulus

    def __eq__(self, other):
        if isinstance(other, Transform):
            return self.polys == other.polys
        return NotImplemented

    def __hash__(self):
        return hash(self.polys)

    def __repr__(self):
        return f"Transform({self.arity_in}->{self.arity_out}, mod {self.modulus})"


def apply_transform(
    t: Transform, tup: MatrixTuple, budget: Optional[int] = None
) -> tuple[MatrixTuple, int]:
    """Componentwise nc_eval; returns the image tuple and the step charge.

    Raises BudgetExceeded when the accumulated charge passes the budget.
    """
    meter = _StepMeter(budget)
    parts = []
    for f in t.polys:
        parts.append(nc_eval(f, tup, meter))
        if not meter.within():
            raise BudgetExceeded(
                f"transform evaluation charged {meter.steps} steps against budget {budget}"
            )
    return MatrixTuple(parts), meter.steps


class ScalarTable:
    """Bivariate coefficient table of the commutative collapse p(lam, mu)."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Mapping[tuple[int, int], int], modulus: int):
        check_prime(modulus)
        self.coeffs = {k: int(c) % modulus for k, c in coeffs.items() if int(c) % modulus}
        self.modulus = modulus

    def eval_int(self, lam: int, mu: int) -> int:
        p = self.modulus
        lam %= p
        mu %= p
        total = 0
        for (m, k), c in self.coeffs.items():
            total += c * pow(lam, m, p) * pow(mu, k, p)
        return total % p

    def is_constant_function(self) -> bool:
        """Constant as a function on F_p x F_p (checked by full evaluation)."""
        p = self.modulus
        first = self.eval_int(0, 0)
        return all(
            self.eval_int(lam, mu) == first for lam in range(p) for mu in range(p)
        )

    def __repr__(self):
        return f"ScalarTable({self.coeffs}, mod {self.modulus})"


def scalar_specialize(f: NcPoly) -> ScalarTable:
    """Collapse a two-variable polynomial onto scalar tuples (lam I, mu I).

    Scalar matrices commute, so each word contributes only through its letter
    counts: the word with m ones and k twos becomes the monomial lam^m mu^k.
    """
    if f.arity != 2:
        raise ArityMismatch(f"scalar specialization needs arity 2, got {f.arity}")
    coeffs: dict[tuple[int, int], int] = {}
    for word, c in f.terms.items():
        key = (word.count(1), word.count(2))
        coeffs[key] = (coeffs.get(key, 0) + c) % f.modulus
    return ScalarTable(coeffs, f.modulus)


ScalarPair = tuple[int, int]


def scalar_collision_search(
    table: ScalarTable, p: int
) -> Optional[tuple[ScalarPair, ScalarPair]]:
    """Two distinct (lam, mu) pairs with equal table value, scanning F_p^2 in
    lexicographic order.

    A collision always exists for p >= 2: p^2 inputs map into at most p
    values.  None is therefore returned only on the (unreachable) injective
    case.
    """
    if p > MAX_COLLISION_PRIME:
        raise TooLarge(f"collision scan supports p <= {MAX_COLLISION_PRIME}, got {p}")
    if table.modulus != p:
        raise ModulusMismatch(f"table over F_{table.modulus}, scan over F_{p}")
    seen: dict[int, ScalarPair] = {}
    for lam in range(p):
        for mu in range(p):
            v = table.eval_int(lam, mu)
            if v in seen:
                return (seen[v], (lam, mu))
            seen[v] = (lam, mu)
    return None


class Outcome(Enum):
    """How a candidate containment fared against the falsifier."""

    FAILS_CONDITION_1 = "FailsCondition1"
    FAILS_CONDITION_2 = "FailsCondition2"
    DEGENERATE_ON_SCALARS = "DegenerateOnScalars"
    NOT_FALSIFIED = "NotFalsified"


@dataclass(frozen=True)
class Verdict:
    """Falsifier result.  Every failing outcome carries a re-checkable witness:
    a pair of input tuples that are not simultaneously similar while their
    images are similar (stored alongside the images).

    FAILS_CONDITION_1 would carry a single tuple whose image leaves the
    target problem; polynomial images of square tuples always stay inside
    the single-matrix problem, so it is unreachable for this pairing and
    kept only for vocabulary completeness.
    """

    outcome: Outcome
    witness: Optional[tuple[MatrixTuple, MatrixTuple]]
    images: Optional[tuple[Matrix, Matrix]]
    steps_used: int
    note: str = ""

    @property
    def falsified(self) -> bool:
        return self.outcome is not Outcome.NOT_FALSIFIED


@lru_cache(maxsize=None)
def _pair_orbit_keys(n: int, p: int) -> dict:
    """Canonical orbit key (lex-minimal entry vector) for every 2-tuple."""
    pairs = gl_pairs(n, p)
    keys: dict[MatrixTuple, tuple[int, ...]] = {}
    for t in enumerate_tuples(2, n, p):
        if t in keys:
            continue
        orbit = {t.conjugate(s, s_inv) for s, s_inv in pairs}
        key = min(u.entry_vector() for u in orbit)
        for u in orbit:
            keys[u] = key
    return keys


def falsify_containment(
    transform: Transform, n: int, p: int, budget: Optional[int] = None
) -> Verdict:
    """Refute a candidate (pairs -> singles) containment witness.

    Stage 1 specializes to scalar tuples and searches a value collision:
    distinct scalar tuples are never simultaneously similar (conjugation
    fixes them, so their orbits are singletons) while colliding images are
    equal and hence similar.  If the specialization is constant as a
    function the collision is uninformative; stage 2 then scans every tuple
    pair at desk scale and returns the first pair, in lexicographic order,
    where simultaneous similarity disagrees with similarity of the images.

    NotFalsified is only returned when the step budget truncates the search
    (or, vacuously, should a full scan find no violation); the note records
    which.  Steps are charged per field multiply-add of transform
    evaluation.
    """
    if transform.arity_in != 2 or transform.arity_out != 1:
        raise ArityMismatch(
            f"falsifier expects a (2 -> 1) transform, got "
            f"({transform.arity_in} -> {transform.arity_out})"
        )
    if transform.modulus != p:
        raise ModulusMismatch(f"transform over F_{transform.modulus}, requested F_{p}")
    meter = _StepMeter(budget)
    f = transform.polys[0]

    # Stage 1: scalar collision.
    table = scalar_specialize(f)
    meter.charge(p * p * max(len(table.coeffs), 1))
    if not meter.within():
        return Verdict(
            Outcome.NOT_FALSIFIED, None, None, meter.steps,
            note="step budget exhausted during the scalar stage",
        )
    degenerate = table.is_constant_function()
    if not degenerate:
        collision = scalar_collision_search(table, p)
        pair1, pair2 = collision
        w1 = MatrixTuple.scalars(pair1, n, p)
        w2 = MatrixTuple.scalars(pair2, n, p)
        img1 = nc_eval(f, w1, meter)
        img2 = nc_eval(f, w2, meter)
        # Distinct scalar tuples have singleton orbits, so inequivalence
        # needs no search; equal images are trivially similar.
        if w1 == w2 or img1 != img2:
            raise RuntimeError("internal: scalar collision witness failed its re-check")
        return Verdict(Outcome.FAILS_CONDITION_2, (w1, w2), (img1, img2), meter.steps)

    # Stage 2: exhaustive scan.
    if n > STAGE2_MAX_SIZE or p not in STAGE2_PRIMES:
        raise TooLarge(
            f"exhaustive stage supports n <= {STAGE2_MAX_SIZE} and p in "
            f"{STAGE2_PRIMES}, got n={n}, p={p}"
        )
    tuples = list(enumerate_tuples(2, n, p))
    orbit_key = _pair_orbit_keys(n, p)
    images = []
    image_keys = []
    for count, t in enumerate(tuples, start=1):
        img = nc_eval(f, t, meter)
        if not meter.within():
            return Verdict(
                Outcome.NOT_FALSIFIED, None, None, meter.steps,
                note=f"step budget exhausted after imaging {count} of {len(tuples)} tuples",
            )
        images.append(img)
        image_keys.append(invariant_factors(img))
    keys = [orbit_key[t] for t in tuples]
    for i in range(len(tuples)):
        for j in range(i + 1, len(tuples)):
            if (keys[i] == keys[j]) != (image_keys[i] == image_keys[j]):
                w1, w2 = tuples[i], tuples[j]
                if sim_similar(w1, w2) is not None or not similar(images[i], images[j]):
                    raise RuntimeError("internal: scan witness failed its re-check")
                return Verdict(
                    Outcome.DEGENERATE_ON_SCALARS,
                    (w1, w2),
                    (images[i], images[j]),
                    meter.steps,
                    note="scalar stage constant; witness from the exhaustive stage",
                )
    return Verdict(
        Outcome.NOT_FALSIFIED, None, None, meter.steps,
        note="exhaustive scan found no violating pair",
    )


def single_to_pair_reduction(
    source: EquivProblem, target: EquivProblem, step_budget: Optional[int] = None
) -> ReductionWitness:
    """The embedding A -> (A, I), realized by the polynomial tuple (x1, 1)."""
    p = source.objects[0].modulus
    tf = Transform((NcPoly.variable(1, 1, p), NcPoly.constant(1, 1, p)))

    def map_(a: Matrix) -> MatrixTuple:
        return apply_transform(tf, MatrixTuple([a]))[0]

    def cost(a: Matrix) -> int:
        return apply_transform(tf, MatrixTuple([a]))[1]

    return ReductionWitness(source, target, map_, cost, step_budget)


def transform_reduction(
    source: EquivProblem,
    target: EquivProblem,
    transform: Transform,
    step_budget: Optional[int] = None,
) -> ReductionWitness:
    """Reduction witness whose map is a polynomial transform on tuples."""

    def map_(t: MatrixTuple) -> MatrixTuple:
        return apply_transform(transform, t)[0]

    def cost(t: MatrixTuple) -> int:
        return apply_transform(transform, t)[1]

    return ReductionWitness(source, target, map_, cost, step_budget)


State = str
Entry = tuple[int, Optional[State]]


class FieldTransducer:
    """A finite-state machine updating one working value in F_p.

    In state S with value v the machine writes the table output for v and
    either halts (next state None) or moves on.  Tables must be total on
    F_p; every run from the start state must halt within max_steps.
    """

    __slots__ = ("modulus", "states", "start", "program", "max_steps")

    def __init__(
        self,
        modulus: int,
        states: Sequence[State],
        start: State,
        program: Mapping[State, object],
        max_steps: int,
    ):
        check_prime(modulus)
        states = tuple(states)
        if not states or start not in states:
            raise ValueError(f"start state {start!r} not among states {states}")
        if max_steps < 1:
            raise ValueError("max_steps must be at least 1")
        known = set(states)
        normalized: dict[State, dict[int, Entry]] = {}
        for st in states:
            raw = program.get(st)
            if raw is None:
                raise ValueError(f"state {st!r} has no transition table")
            if isinstance(raw, Mapping):
                triples = [(v, w, nxt) for v, (w, nxt) in raw.items()]
            else:
                triples = [tuple(entry) for entry in raw]
            table: dict[int, Entry] = {}
            for value, write, nxt in triples:
                value = int(value) % modulus
                if value in table:
                    raise NondeterministicTable(
                        f"state {st!r} has two transitions for value {value}"
                    )
                if nxt is not None and nxt not in known:
                    raise ValueError(f"state {st!r} transitions to unknown state {nxt!r}")
                table[value] = (int(write) % modulus, nxt)
            if set(table) != set(range(modulus)):
                missing = sorted(set(range(modulus)) - set(table))
                raise ValueError(f"state {st!r} table not total on F_{modulus}: missing {missing}")
            normalized[st] = table
        self.modulus = modulus
        self.states = states
        self.start = start
        self.program = normalized
        self.max_steps = max_steps

    def __repr__(self):
        return (
            f"FieldTransducer({len(self.states)} states, mod {self.modulus}, "
            f"max {self.max_steps} steps)"
        )


def run_transducer(m: FieldTransducer, x: int) -> int:
    """Direct execution on one input value; the oracle the compiler is held to."""
    state = m.start
    value = x % m.modulus
    steps = 0
    while True:
        write, nxt = m.program[state][value]
        value = write
        steps += 1
        if nxt is None:
            return value
        if steps >= m.max_steps:
            raise RunTooLong(f"run on input {x} exceeds {m.max_steps} steps")
        state = nxt


def compile_transducer(m: FieldTransducer) -> Poly:
    """Compile a machine into one polynomial equal to its run on every input.

    Each state's value update is interpolated over the full node set F_p
    into an update polynomial.  For every branching value the continuation
    polynomial is composed with the update polynomial; the branch results
    are then recombined by interpolating their values at the branching
    points, again over all of F_p, so the composite stays total.
    """
    if m.max_steps > COMPILE_MAX_STEPS:
        raise TooLarge(f"compiler supports run bounds <= {COMPILE_MAX_STEPS}")
    if m.modulus > COMPILE_MAX_PRIME:
        raise TooLarge(f"compiler supports p <= {COMPILE_MAX_PRIME}")
    p = m.modulus
    for x in range(p):
        run_transducer(m, x)  # surfaces RunTooLong before any compilation work
    identity = Poly.x(p)
    updates = {
        st: interpolate([(v, m.program[st][v][0]) for v in range(p)], p)
        for st in m.states
    }
    memo: dict[tuple[Optional[State], int], Poly] = {}

    def compiled_from(state: Optional[State], steps_left: int) -> Poly:
        if state is None:
            return identity
        if steps_left == 0:
            # Only paths no real run takes can exhaust the bound (checked
            # above); any total filler keeps the recombination well-defined.
            return identity
        key = (state, steps_left)
        if key in memo:
            return memo[key]
        update = updates[state]
        nodes = []
        for c in range(p):
            nxt = m.program[state][c][1]
            branch = compiled_from(nxt, steps_left - 1).compose(update)
            nodes.append((c, branch.eval_int(c)))
        out = interpolate(nodes, p)
        memo[key] = out
        return out

    return compiled_from(m.start, m.max_steps)


def assemble_cell_polynomials(
    n: int, cells: Mapping[tuple[int, int], Poly], modulus: int
) -> PolyMatrix:
    """Assemble per-cell polynomials into an n x n grid.

    Cells with no program compile to the zero polynomial.  Evaluating the
    result entrywise at a value reproduces every cell machine's run.
    """
    entries = [Poly.zero(modulus)] * (n * n)
    for (i, j), poly in cells.items():
        if not (0 <= i < n and 0 <= j < n):
            raise ShapeMismatch(f"cell ({i}, {j}) outside a {n}x{n} grid")
        entries[i * n + j] = poly
    return PolyMatrix(n, n, entries, modulus)
