"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report lines alongside the pytest verdicts.
"""

import itertools
import random
import time
from pathlib import Path

from tamewild import (
    FieldTransducer,
    Matrix,
    MatrixTuple,
    NcPoly,
    Outcome,
    ScalarTable,
    Transform,
    char_poly,
    compile_transducer,
    enumerate_matrices,
    falsify_containment,
    gl_pairs,
    identity_reduction,
    invariant_factors,
    orbit_table,
    pair_similarity_problem,
    rational_canonical_form,
    run_transducer,
    scalar_collision_search,
    similar_bruteforce,
    similarity_problem,
    single_to_pair_reduction,
    transpose_reduction,
    verify_reduction,
)
from tamewild.cli import EXIT_NO, EXIT_YES, format_transform_file, main as cli_main

DATA = Path(__file__).parent / "data"


def report(criterion, text):
    print(f"[criterion {criterion}] PASS  {text}")


def test_criterion_1_full_invariant_theorem_at_desk_scale():
    started = time.monotonic()
    checked = {}
    for p in (2, 3):
        mats = list(enumerate_matrices(2, 2, p))
        pairs = 0
        for i, a in enumerate(mats):
            for b in mats[i:]:
                same_chain = invariant_factors(a) == invariant_factors(b)
                found = similar_bruteforce(a, b) is not None
                assert same_chain == found, (a, b)
                pairs += 1
        checked[p] = pairs
    elapsed = time.monotonic() - started
    assert checked[2] == 136
    assert checked[3] == 3321
    assert elapsed < 60.0
    report(1, f"136 + 3321 unordered pairs, zero mismatches, {elapsed:.1f}s")


def test_criterion_2_orbit_counts_with_burnside_cross_check():
    singles = orbit_table(similarity_problem(2, 2))
    pairs = orbit_table(pair_similarity_problem(2, 2))
    assert singles.class_count == 6
    assert pairs.class_count == 56

    # independent route: Burnside over the conjugation action of GL_2(F_2)
    mats = list(enumerate_matrices(2, 2, 2))
    group = [s for s, _ in gl_pairs(2, 2)]
    commutant_sizes = [sum(1 for a in mats if s @ a == a @ s) for s in group]
    fixed_single = sum(commutant_sizes)
    fixed_pairs = sum(c * c for c in commutant_sizes)
    assert fixed_pairs == 256 + 3 * 16 + 2 * 16 == 336
    assert fixed_single // len(group) == 6
    assert fixed_pairs // len(group) == 56
    report(2, "6 single classes and 56 pair classes, Burnside agrees (336/6)")


def test_criterion_3_falsifier_completeness_with_replay(tmp_path, capsys):
    words = [(), (1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]
    outcomes = {Outcome.FAILS_CONDITION_2: 0, Outcome.DEGENERATE_ON_SCALARS: 0}
    for k, coeffs in enumerate(itertools.product((0, 1), repeat=len(words))):
        transform = Transform([NcPoly(dict(zip(words, coeffs)), 2, 2)])
        verdict = falsify_containment(transform, 2, 2)
        assert verdict.falsified, coeffs
        assert verdict.outcome in outcomes
        outcomes[verdict.outcome] += 1

        # replay the emitted witness through the command-line surface
        tfm = tmp_path / f"t{k}.tfm"
        tfm.write_text(format_transform_file(transform))
        code = cli_main(["falsify", str(tfm), "--n", "2"])
        out = capsys.readouterr().out
        assert code == EXIT_YES
        blocks = {}
        lines = out.splitlines()
        labels = ("witness A:", "witness B:", "image A:", "image B:")
        marks = [(i, ln) for i, ln in enumerate(lines) if ln in labels or ln.startswith("replay:")]
        for (i, label), (j, _) in zip(marks, marks[1:] + [(len(lines), "")]):
            if not label.startswith("replay:"):
                blocks[label[:-1]] = "\n".join(lines[i + 1 : j]) + "\n"
        paths = {}
        for label, text in blocks.items():
            f = tmp_path / f"t{k}_{label.replace(' ', '_')}.mat"
            f.write_text(text)
            paths[label] = str(f)
        assert cli_main(["simsimilar", paths["witness A"], paths["witness B"]]) == EXIT_NO
        assert cli_main(["similar", paths["image A"], paths["image B"]]) == EXIT_YES
        capsys.readouterr()
    total = sum(outcomes.values())
    assert total == 128
    report(
        3,
        f"all 128 short transforms falsified ({outcomes[Outcome.FAILS_CONDITION_2]} scalar, "
        f"{outcomes[Outcome.DEGENERATE_ON_SCALARS]} degenerate), every witness replayed",
    )


def test_criterion_4_scalar_pigeonhole_random_tables():
    rng = random.Random(4)
    found = 0
    while found < 200:
        coeffs = {}
        for _ in range(rng.randrange(1, 5)):
            coeffs[(rng.randrange(4), rng.randrange(4))] = rng.randrange(5)
        table = ScalarTable(coeffs, 5)
        if table.is_constant_function():
            continue
        collision = scalar_collision_search(table, 5)
        assert collision is not None
        (l1, m1), (l2, m2) = collision
        assert (l1, m1) != (l2, m2)
        assert table.eval_int(l1, m1) == table.eval_int(l2, m2)
        found += 1
    report(4, "200 random non-constant tables over F_5 all collide, verified by evaluation")


def test_criterion_5_algebraic_consistency_random_matrices():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(1, 5)
        a = Matrix(n, n, [rng.randrange(5) for _ in range(n * n)], 5)
        chain = invariant_factors(a)
        cp = char_poly(a)
        assert chain.product() == cp
        assert cp.is_monic() and cp.degree == n
        for f, g in zip(chain, chain[1:] if n > 1 else ()):
            assert (g % f).is_zero()
    report(5, "200 random F_5 matrices (n <= 4): factor product = char poly, chains divide")


def test_criterion_6_canonical_form_round_trip_f3():
    for a in enumerate_matrices(2, 2, 3):
        form = rational_canonical_form(invariant_factors(a))
        s = similar_bruteforce(a, form)
        assert s is not None
        assert s @ a @ s.inverse() == form
    report(6, "all 81 matrices of M_2(F_3) conjugate to their canonical form")


def test_criterion_7_machine_compilation_matches_runs():
    rng = random.Random(7)
    machines = []

    def chain(p, updates):
        states = [f"s{i}" for i in range(len(updates))]
        program = {
            states[i]: {
                v: (updates[i](v) % p, states[i + 1] if i + 1 < len(states) else None)
                for v in range(p)
            }
            for i in range(len(updates))
        }
        return FieldTransducer(p, states, states[0], program, 4)

    machines.append(chain(5, [lambda v: v]))
    machines.append(chain(2, [lambda v: v + 1]))
    machines.append(chain(5, [lambda v: v + 1, lambda v: 2 * v]))
    machines.append(chain(7, [lambda v: 3 * v + 1, lambda v: v * v, lambda v: v + 6]))
    branch = {
        "a": {v: ((v + 1) % 3, "b" if v == 0 else "c") for v in range(3)},
        "b": {v: (2 * v % 3, None) for v in range(3)},
        "c": {v: ((v + 2) % 3, None) for v in range(3)},
    }
    machines.append(FieldTransducer(3, ("a", "b", "c"), "a", branch, 4))
    for _ in range(60):
        p = rng.choice((2, 3, 5, 7))
        k = rng.randrange(1, 4)
        states = [f"s{i}" for i in range(k)]
        program = {}
        for i, st in enumerate(states):
            program[st] = {
                v: (rng.randrange(p), rng.choice(states[i + 1 :] + [None]))
                for v in range(p)
            }
        machines.append(FieldTransducer(p, states, states[0], program, 4))

    for m in machines:
        compiled = compile_transducer(m)
        for x in range(m.modulus):
            assert compiled.eval_int(x) == run_transducer(m, x)
    report(7, f"{len(machines)} machines (<= 3 states, runs <= 4, p <= 7) compile exactly")


def test_criterion_8_reduction_witnesses_verify_within_budget():
    single = similarity_problem(2, 2)
    pairs = pair_similarity_problem(2, 2)

    w_id = identity_reduction(single, step_budget=100)
    w_tr = transpose_reduction(single, step_budget=100)
    w_embed = single_to_pair_reduction(single, pairs, step_budget=100)
    assert verify_reduction(w_id)
    assert verify_reduction(w_tr)
    assert verify_reduction(w_embed)
    assert w_id.steps_recorded == 0
    assert w_tr.steps_recorded == 16 * 4
    assert 0 < w_embed.steps_recorded <= 100 * 16
    report(
        8,
        f"identity, transpose, and pair-embedding all verify on M_2(F_2); "
        f"steps 0 / {w_tr.steps_recorded} / {w_embed.steps_recorded} within budget",
    )
