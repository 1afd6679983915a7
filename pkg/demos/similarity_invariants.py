#!/usr/bin/env python3
"""Tour of similarity invariants over a prime field.

rank, det, the characteristic polynomial and the in-field spectrum are all
constant on conjugation orbits, but none of them separates the orbits.  The
invariant-factor chain does: it is a full invariant, and its block-companion
realization gives a canonical representative for every class.
"""

from tamewild import (
    Matrix,
    char_poly,
    invariant_factors,
    rational_canonical_form,
    similar,
    similar_bruteforce,
    spectrum_in_field,
)

p = 3
a = Matrix.from_rows([[1, 0], [0, 1]], p)       # the identity
b = Matrix.from_rows([[1, 1], [0, 1]], p)       # a unipotent Jordan block

print("working over F_%d" % p)
print("A =", list(a.entries), " B =", list(b.entries))
print()

print("rank(A) =", a.rank(), "  rank(B) =", b.rank())
print("det(A)  =", a.det(), "   det(B)  =", b.det())
print("char(A) =", char_poly(a), "  char(B) =", char_poly(b))
print("spec(A) =", [r.value for r in spectrum_in_field(a)],
      "  spec(B) =", [r.value for r in spectrum_in_field(b)])
print()
print("every partial invariant above agrees on A and B, yet:")
print("similar(A, B) =", similar(a, b))
print("invariant_factors(A) =", invariant_factors(a))
print("invariant_factors(B) =", invariant_factors(b))
print()

# The chain is not just a separator; it rebuilds a canonical class member.
form = rational_canonical_form(invariant_factors(b))
print("canonical form of B's class:")
print(form)
s = similar_bruteforce(b, form)
print("conjugator found by exhaustive search over GL_2(F_3):")
print(s)
print("S B S^-1 == form:", s @ b @ s.inverse() == form)
