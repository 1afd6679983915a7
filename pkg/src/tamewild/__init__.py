"""Exact computer algebra for matrix problems over prime fields.

The library computes partial and full invariants for matrix similarity
(the invariant-factor chain via Smith reduction over F_p[x]), decides
similarity and simultaneous similarity by brute-force orbit search at desk
scale, evaluates non-commutative polynomial transforms between matrix
problems, and mechanically refutes candidate containments of the
pair-of-matrices problem in the single-matrix problem.
"""

from . import errors
from .algebra import (
    FieldElement,
    Poly,
    PrimeField,
    interpolate,
    poly_gcd,
    poly_lcm,
)
from .equivalence import (
    EquivProblem,
    InvariantCandidate,
    InvariantReport,
    OrbitTable,
    ProblemRegistry,
    ReductionWitness,
    compose_reductions,
    identity_reduction,
    orbit_table,
    pair_similarity_problem,
    sim_similar,
    similar,
    similar_bruteforce,
    similarity_problem,
    transpose_reduction,
    verify_invariant,
    verify_reduction,
)
from .invariants import (
    InvariantFactors,
    PolyMatrix,
    char_matrix,
    char_poly,
    companion_matrix,
    invariant_factors,
    poly_det,
    rational_canonical_form,
    smith_normal_form,
    spectrum_in_field,
)
from .matrix import (
    Matrix,
    MatrixTuple,
    enumerate_gl,
    enumerate_matrices,
    enumerate_tuples,
    gl_order,
    gl_pairs,
)
from .wildness import (
    FieldTransducer,
    NcPoly,
    Outcome,
    ScalarTable,
    Transform,
    Verdict,
    apply_transform,
    assemble_cell_polynomials,
    compile_transducer,
    falsify_containment,
    nc_eval,
    run_transducer,
    scalar_collision_search,
    scalar_specialize,
    single_to_pair_reduction,
    transform_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "FieldElement",
    "Poly",
    "PrimeField",
    "interpolate",
    "poly_gcd",
    "poly_lcm",
    "Matrix",
    "MatrixTuple",
    "enumerate_matrices",
    "enumerate_gl",
    "enumerate_tuples",
    "gl_order",
    "gl_pairs",
    "PolyMatrix",
    "InvariantFactors",
    "char_matrix",
    "char_poly",
    "companion_matrix",
    "invariant_factors",
    "poly_det",
    "rational_canonical_form",
    "smith_normal_form",
    "spectrum_in_field",
    "EquivProblem",
    "InvariantCandidate",
    "InvariantReport",
    "OrbitTable",
    "ProblemRegistry",
    "ReductionWitness",
    "compose_reductions",
    "identity_reduction",
    "orbit_table",
    "pair_similarity_problem",
    "similar",
    "similar_bruteforce",
    "sim_similar",
    "similarity_problem",
    "transpose_reduction",
    "verify_invariant",
    "verify_reduction",
    "NcPoly",
    "Transform",
    "ScalarTable",
    "Outcome",
    "Verdict",
    "FieldTransducer",
    "nc_eval",
    "apply_transform",
    "scalar_specialize",
    "scalar_collision_search",
    "falsify_containment",
    "run_transducer",
    "compile_transducer",
    "assemble_cell_polynomials",
    "single_to_pair_reduction",
    "transform_reduction",
]
