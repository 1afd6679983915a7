#!/usr/bin/env python3
"""Compiling bounded finite-state machines into field polynomials.

Over a field every total value-update table is a polynomial (interpolate
it), and a bounded run is a composition of such updates with branching on
intermediate values.  Recombining the branch compositions by interpolation
over the whole field turns the entire machine into one polynomial that
agrees with the machine run on every input.  Cell machines assemble into a
polynomial matrix, with never-written cells compiling to zero.
"""

from tamewild import (
    FieldTransducer,
    assemble_cell_polynomials,
    compile_transducer,
    run_transducer,
)

p = 5

# A two-step straight-line machine: first add one, then double.
double_after_inc = FieldTransducer(
    p,
    states=("add", "dbl"),
    start="add",
    program={
        "add": {v: ((v + 1) % p, "dbl") for v in range(p)},
        "dbl": {v: (2 * v % p, None) for v in range(p)},
    },
    max_steps=4,
)
poly = compile_transducer(double_after_inc)
print("straight-line machine compiles to:", poly)
for x in range(p):
    print(f"  input {x}: run={run_transducer(double_after_inc, x)}  poly={poly.eval_int(x)}")
print()

# A branching machine: the value written in the first state decides where
# the run continues, so the compiler recombines two different futures.
branching = FieldTransducer(
    p,
    states=("probe", "small", "large"),
    start="probe",
    program={
        "probe": {v: (v, "small" if v < 2 else "large") for v in range(p)},
        "small": {v: ((v + 3) % p, None) for v in range(p)},
        "large": {v: (4 * v % p, None) for v in range(p)},
    },
    max_steps=4,
)
branch_poly = compile_transducer(branching)
print("branching machine compiles to:", branch_poly)
for x in range(p):
    assert branch_poly.eval_int(x) == run_transducer(branching, x)
print("  agrees with the run on all", p, "inputs")
print()

# Cell machines assemble into a polynomial matrix; untouched cells are zero.
grid = assemble_cell_polynomials(
    2, {(0, 0): poly, (1, 1): branch_poly}, p
)
print("assembled 2x2 polynomial matrix:")
print(grid)
print("evaluated at 3:")
print(grid.eval_at(3))
