import itertools

import pytest

from tamewild import (
    InvariantFactors,
    Matrix,
    Poly,
    char_matrix,
    char_poly,
    companion_matrix,
    enumerate_matrices,
    gl_pairs,
    invariant_factors,
    poly_det,
    rational_canonical_form,
    similar_bruteforce,
    smith_normal_form,
    spectrum_in_field,
)
from tamewild.errors import InvalidChain, NotSquare, SingularPolyMatrix
from tamewild.invariants import PolyMatrix


def rand_matrix(rng, n, p):
    return Matrix(n, n, [rng.randrange(p) for _ in range(n * n)], p)


def monic_polys(deg, p):
    for tail in itertools.product(range(p), repeat=deg):
        yield Poly(list(tail) + [1], p)


def divisibility_chains(n, p):
    """All monic chains (i_1, ..., i_n) with i_k | i_{k+1} and total degree n."""
    out = []

    def extend(prefix, used):
        k = len(prefix)
        if k == n:
            if used == n:
                out.append(tuple(prefix))
            return
        prev = prefix[-1] if prefix else Poly.one(p)
        slots_left = n - k - 1
        for extra in range(n - used + 1):
            d = prev.degree + extra
            if used + d + slots_left * d > n:
                break
            for q in monic_polys(extra, p):
                extend(prefix + [prev * q], used + d)

    extend([], 0)
    return out


class TestCharMatrix:
    def test_zero_matrix(self):
        cm = char_matrix(Matrix.zeros(2, 2, 2))
        assert cm.entry(0, 0) == Poly.x(2)
        assert cm.entry(1, 1) == Poly.x(2)
        assert cm.entry(0, 1).is_zero() and cm.entry(1, 0).is_zero()

    def test_identity_f2(self):
        cm = char_matrix(Matrix.identity(2, 2))
        diag = Poly((1, 1), 2)  # x + 1 (same as x - 1 over F_2)
        assert cm.entry(0, 0) == diag and cm.entry(1, 1) == diag

    def test_unit_matrix_f2(self):
        # xI - e12 = [[x, 1], [0, x]] since -1 = 1 over F_2
        cm = char_matrix(Matrix.unit(2, 0, 1, 2))
        assert cm.entry(0, 0) == Poly.x(2)
        assert cm.entry(0, 1) == Poly.one(2)
        assert cm.entry(1, 0).is_zero()
        assert cm.entry(1, 1) == Poly.x(2)

    def test_not_square(self):
        with pytest.raises(NotSquare):
            char_matrix(Matrix.zeros(2, 3, 2))


class TestSmith:
    def test_zero_matrix_chain(self):
        assert smith_normal_form(char_matrix(Matrix.zeros(2, 2, 2))) == InvariantFactors(
            (Poly.x(2), Poly.x(2))
        )

    def test_identity_chain_f2(self):
        xp1 = Poly((1, 1), 2)
        assert invariant_factors(Matrix.identity(2, 2)) == InvariantFactors((xp1, xp1))

    def test_companion_chain(self):
        # by hand: row/column reduction of xI - C clears to diag(1, x^2+x+1)
        f = Poly((1, 1, 1), 2)
        assert invariant_factors(companion_matrix(f)) == InvariantFactors((Poly.one(2), f))

    def test_singular_poly_matrix_rejected(self):
        zeros = PolyMatrix(2, 2, [Poly.zero(2)] * 4, 2)
        with pytest.raises(SingularPolyMatrix):
            smith_normal_form(zeros)

    def test_divisibility_chain_random(self, rng):
        for _ in range(60):
            p = rng.choice((2, 3, 5))
            n = rng.randrange(1, 5)
            chain = invariant_factors(rand_matrix(rng, n, p))
            assert len(chain) == n
            for a, b in zip(chain, chain[1:] if n > 1 else ()):
                assert (b % a).is_zero()
            for f in chain:
                assert f.is_monic()

    def test_conjugation_invariance_exhaustive_f2(self):
        for a in enumerate_matrices(2, 2, 2):
            chain = invariant_factors(a)
            for s, s_inv in gl_pairs(2, 2):
                assert invariant_factors(s @ a @ s_inv) == chain


class TestFullInvariant:
    def test_separates_exactly_on_m2_f2(self):
        mats = list(enumerate_matrices(2, 2, 2))
        for i, a in enumerate(mats):
            for b in mats[i:]:
                same_chain = invariant_factors(a) == invariant_factors(b)
                conjugator = similar_bruteforce(a, b)
                assert same_chain == (conjugator is not None)
                if conjugator is not None:
                    s = conjugator
                    assert s @ a @ s.inverse() == b


class TestCharPoly:
    def test_examples(self):
        assert char_poly(Matrix.zeros(2, 2, 2)) == Poly((0, 0, 1), 2)
        assert char_poly(Matrix.identity(2, 2)) == Poly((1, 0, 1), 2)  # (x+1)^2

    def test_companion_reproduces_polynomial(self):
        # cofactor oracle on xI - C: x(x+1) - 1 = x^2+x+1 over F_2
        f = Poly((1, 1, 1), 2)
        assert char_poly(companion_matrix(f)) == f

    def test_equals_product_of_factors_and_conjugation_invariant(self):
        for p in (2, 3):
            for a in enumerate_matrices(2, 2, p):
                cp = char_poly(a)
                assert cp == invariant_factors(a).product()
                assert cp.is_monic() and cp.degree == 2
                for s, s_inv in gl_pairs(2, p):
                    assert char_poly(s @ a @ s_inv) == cp

    def test_poly_det_agrees_on_char_matrix(self, rng):
        for _ in range(40):
            p = rng.choice((2, 3, 5))
            n = rng.randrange(1, 5)
            a = rand_matrix(rng, n, p)
            assert poly_det(char_matrix(a)) == char_poly(a)


class TestSpectrum:
    def test_identity_and_zero(self):
        spec = spectrum_in_field(Matrix.identity(2, 2))
        assert [r.value for r in spec] == [1, 1]
        spec = spectrum_in_field(Matrix.zeros(2, 2, 2))
        assert [r.value for r in spec] == [0, 0]

    def test_irreducible_char_poly_has_empty_spectrum(self):
        c = companion_matrix(Poly((1, 1, 1), 2))
        assert spectrum_in_field(c) == ()

    def test_multiplicity_matches_char_poly_roots(self, rng):
        for _ in range(40):
            p = rng.choice((2, 3, 5))
            a = rand_matrix(rng, rng.randrange(1, 4), p)
            cp = char_poly(a)
            spec = spectrum_in_field(a)
            remainder = cp
            for r in spec:
                q, rem = divmod(remainder, Poly((-r.value, 1), p))
                assert rem.is_zero()
                remainder = q
            for lam in range(p):
                assert remainder.eval_int(lam) != 0


class TestRationalCanonicalForm:
    def test_scalar_chain_gives_zero_matrix(self):
        chain = InvariantFactors((Poly.x(2), Poly.x(2)))
        assert rational_canonical_form(chain) == Matrix.zeros(2, 2, 2)

    def test_single_block(self):
        f = Poly((1, 1, 1), 2)
        chain = InvariantFactors((Poly.one(2), f))
        assert rational_canonical_form(chain) == companion_matrix(f)

    def test_roundtrip_all_chains_degree_up_to_4_f2(self):
        total = 0
        for n in (1, 2, 3, 4):
            for factors in divisibility_chains(n, 2):
                chain = InvariantFactors(factors)
                assert invariant_factors(rational_canonical_form(chain)) == chain
                total += 1
        assert total > 10  # the family is nonempty and varied

    def test_rcf_similar_to_source_exhaustive_f2(self):
        for a in enumerate_matrices(2, 2, 2):
            r = rational_canonical_form(invariant_factors(a))
            assert similar_bruteforce(a, r) is not None

    def test_invalid_chains_rejected(self):
        with pytest.raises(InvalidChain):
            InvariantFactors(())
        with pytest.raises(InvalidChain):
            InvariantFactors((Poly((0, 2), 5),))  # 2x is not monic
        with pytest.raises(InvalidChain):
            InvariantFactors((Poly((1, 1), 2), Poly.x(2)))  # x+1 does not divide x
        with pytest.raises(InvalidChain):
            # total degree 2 but length 1
            InvariantFactors((Poly((1, 1, 1), 2),))
        with pytest.raises(InvalidChain):
            companion_matrix(Poly.zero(2))
