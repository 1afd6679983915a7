#!/usr/bin/env python3
"""Exhaustive orbit census for single matrices and matrix pairs.

Single 2x2 matrices over F_2 fall into 6 conjugation classes; pairs under a
shared conjugator fall into 56.  Both counts are recomputed independently
here through the orbit-counting (Burnside) identity: the number of orbits
equals the average number of fixed points of the group elements.
"""

from tamewild import (
    enumerate_matrices,
    gl_pairs,
    orbit_table,
    pair_similarity_problem,
    similarity_problem,
)

singles = orbit_table(similarity_problem(2, 2))
print("single-matrix similarity, n=2, p=2")
print("  classes:", singles.class_count)
print("  sizes:  ", singles.sizes())
for rep in singles.representative_objects():
    print("  rep:", list(rep.entries))
print()

pairs = orbit_table(pair_similarity_problem(2, 2))
print("pair simultaneous similarity, n=2, p=2")
print("  classes:", pairs.class_count)
print("  total objects:", sum(pairs.sizes()))
print()

# Burnside cross-check: a pair (A, B) is fixed by S exactly when S commutes
# with both components, so |fix(S)| is the squared commutant size.
mats = list(enumerate_matrices(2, 2, 2))
group = [s for s, _ in gl_pairs(2, 2)]
commutants = [sum(1 for a in mats if s @ a == a @ s) for s in group]
print("commutant sizes over GL_2(F_2):", commutants)
fixed_single = sum(commutants)
fixed_pairs = sum(c * c for c in commutants)
print("Burnside single count:", fixed_single, "/", len(group), "=", fixed_single // len(group))
print("Burnside pair count:  ", fixed_pairs, "/", len(group), "=", fixed_pairs // len(group))
assert singles.class_count == fixed_single // len(group)
assert pairs.class_count == fixed_pairs // len(group)
print("both censuses agree with the exhaustive tables")
