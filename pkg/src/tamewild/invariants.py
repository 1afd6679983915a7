"""Similarity invariants of square matrices over F_p.

The full invariant is the chain of invariant factors (i_1, ..., i_n): the
monic diagonal of the Smith normal form of xI - A over F_p[x], with i_k
dividing i_{k+1}.  Two matrices are similar exactly when their chains are
equal.  rank, det, the characteristic polynomial and the spectrum inside
F_p are invariants too, but only partial ones: they are constant on
similarity classes without separating them.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .algebra import FieldElement, Poly, poly_gcd, poly_lcm
from .errors import InvalidChain, ModulusMismatch, NotSquare, ShapeMismatch, SingularPolyMatrix
from .matrix import Matrix


class PolyMatrix:
    """A matrix with entries in F_p[x]; hosts xI - A."""

    __slots__ = ("rows", "cols", "modulus", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Poly], modulus: int):
        ent = tuple(entries)
        if len(ent) != rows * cols:
            raise ShapeMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(ent)}"
            )
        for e in ent:
            if e.modulus != modulus:
                raise ModulusMismatch("poly matrix entries over mixed fields")
        self.rows = rows
        self.cols = cols
        self.modulus = modulus
        self.entries = ent

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i * self.cols + j]

    def eval_at(self, a) -> Matrix:
        """Entrywise evaluation at a field value, giving an exact matrix."""
        vals = [e.eval_int(int(a)) for e in self.entries]
        return Matrix(self.rows, self.cols, vals, self.modulus)

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            return (
                self.rows == other.rows
                and self.cols == other.cols
                and self.entries == other.entries
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __str__(self):
        c = self.cols
        return "\n".join(
            "  ".join(str(e) for e in self.entries[i * c : (i + 1) * c])
            for i in range(self.rows)
        )

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols} mod {self.modulus})"


class InvariantFactors:
    """The divisibility chain (i_1, ..., i_n), all monic, i_k | i_{k+1}.

    Length equals the total degree, so unit factors are retained and equality
    is plain sequence equality.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[Poly]):
        factors = tuple(factors)
        if not factors:
            raise InvalidChain("empty factor chain")
        total = 0
        for f in factors:
            if f.is_zero() or not f.is_monic():
                raise InvalidChain(f"chain entries must be monic and nonzero, got {f}")
            total += f.degree
        for a, b in zip(factors, factors[1:]):
            if not a.divides(b):
                raise InvalidChain(f"{a} does not divide {b}")
        if total != len(factors):
            raise InvalidChain(
                f"chain of length {len(factors)} must have total degree {len(factors)}, got {total}"
            )
        self.factors = factors

    @property
    def size(self) -> int:
        return len(self.factors)

    @property
    def modulus(self) -> int:
        return self.factors[0].modulus

    def product(self) -> Poly:
        out = Poly.one(self.modulus)
        for f in self.factors:
            out = out * f
        return out

    def __iter__(self) -> Iterator[Poly]:
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, k: int) -> Poly:
        return self.factors[k]

    def __eq__(self, other):
        if isinstance(other, InvariantFactors):
            return self.factors == other.factors
        return NotImplemented

    def __hash__(self):
        return hash(self.factors)

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.factors) + ")"

    def __repr__(self):
        return f"InvariantFactors{self}"


def char_matrix(a: Matrix) -> PolyMatrix:
    """xI - A: x - a_ii on the diagonal, -a_ij as constants elsewhere."""
    if not a.is_square():
        raise NotSquare("characteristic matrix of a non-square matrix")
    n = a.rows
    p = a.modulus
    ent = []
    for i in range(n):
        for j in range(n):
            v = a.entries[i * n + j]
            if i == j:
                ent.append(Poly((-v, 1), p))
            else:
                ent.append(Poly.constant(-v, p))
    return PolyMatrix(n, n, ent, p)


def poly_det(m: PolyMatrix) -> Poly:
    """Determinant over F_p[x] by cofactor expansion (exact, for small n)."""
    if m.rows != m.cols:
        raise NotSquare("determinant of a non-square poly matrix")
    p = m.modulus
    grid = [[m.entry(i, j) for j in range(m.cols)] for i in range(m.rows)]

    def det(rows: list[list[Poly]]) -> Poly:
        k = len(rows)
        if k == 1:
            return rows[0][0]
        total = Poly.zero(p)
        for j in range(k):
            c = rows[0][j]
            if c.is_zero():
                continue
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            term = c * det(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    return det(grid)


def smith_normal_form(m: PolyMatrix) -> InvariantFactors:
    """Monic diagonal of the Smith normal form over the Euclidean domain F_p[x].

    Pivoting picks the minimal-degree nonzero entry of the working submatrix
    (ties broken by row-major position), clears its row and column by
    polynomial division, and re-pivots while remainders survive; a final
    gcd-absorption pass restores the divisibility chain.  The chain itself is
    unique, so the result does not depend on the reduction path.
    """
    if m.rows != m.cols:
        raise NotSquare("Smith reduction requires a square matrix here")
    n = m.rows
    p = m.modulus
    a = [[m.entry(i, j) for j in range(n)] for i in range(n)]

    for k in range(n):
        while True:
            pivot = None
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    e = a[i][j]
                    if not e.is_zero() and (best is None or e.degree < best):
                        pivot, best = (i, j), e.degree
            if pivot is None:
                raise SingularPolyMatrix("zero block on the diagonal during reduction")
            pi, pj = pivot
            if pi != k:
                a[pi], a[k] = a[k], a[pi]
            if pj != k:
                for row in a:
                    row[pj], row[k] = row[k], row[pj]
            piv = a[k][k]
            clean = True
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    q = a[i][k] // piv
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                    if not a[i][k].is_zero():
                        clean = False
            for j in range(k + 1, n):
                if not a[k][j].is_zero():
                    q = a[k][j] // piv
                    for row in a:
                        row[j] = row[j] - q * row[k]
                    if not a[k][j].is_zero():
                        clean = False
            if clean:
                break

    diag = [a[i][i] for i in range(n)]
    if any(d.is_zero() for d in diag):
        raise SingularPolyMatrix("singular polynomial matrix")
    diag = [d.monic() for d in diag]

    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if not diag[i].divides(diag[i + 1]):
                g = poly_gcd(diag[i], diag[i + 1])
                diag[i], diag[i + 1] = g, poly_lcm(diag[i], diag[i + 1])
                changed = True
    return InvariantFactors(diag)


@lru_cache(maxsize=None)
def invariant_factors(a: Matrix) -> InvariantFactors:
    """The full invariant of similarity: Smith form of xI - A."""
    if not a.is_square():
        raise NotSquare("invariant factors of a non-square matrix")
    return smith_normal_form(char_matrix(a))


def char_poly(a: Matrix) -> Poly:
    """det(xI - A), monic of degree n.

    Computed by cofactor expansion rather than through the Smith form, so it
    can stand against the product of the invariant factors as an independent
    cross-check.
    """
    if not a.is_square():
        raise NotSquare("characteristic polynomial of a non-square matrix")
    return poly_det(char_matrix(a))


def spectrum_in_field(a: Matrix) -> tuple[FieldElement, ...]:
    """Roots of char_poly inside F_p, with multiplicity, sorted by value.

    A partial invariant only: roots outside F_p are invisible, so distinct
    classes can share a spectrum (or an empty one).
    """
    f = char_poly(a)
    p = a.modulus
    x = Poly.x(p)
    roots = []
    for lam in range(p):
        while f.degree >= 1 and f.eval_int(lam) == 0:
            f = f // (x - Poly.constant(lam, p))
            roots.append(FieldElement(lam, p))
    return tuple(roots)


def companion_matrix(f: Poly) -> Matrix:
    """Companion matrix of a monic polynomial of degree >= 1."""
    if f.degree < 1 or not f.is_monic():
        raise InvalidChain(f"companion matrix needs a monic polynomial of degree >= 1, got {f}")
    d = f.degree
    p = f.modulus
    ent = [0] * (d * d)
    for i in range(1, d):
        ent[i * d + (i - 1)] = 1
    for i in range(d):
        ent[i * d + (d - 1)] = -f.coeffs[i] % p
    return Matrix(d, d, ent, p)


def rational_canonical_form(chain: InvariantFactors) -> Matrix:
    """Block-diagonal companion form realizing a divisibility chain.

    Unit factors contribute no block; the result is the canonical orbit
    representative with invariant_factors(result) == chain.
    """
    p = chain.modulus
    blocks = [companion_matrix(f) for f in chain if f.degree >= 1]
    if not blocks:
        raise InvalidChain("chain of units has no matrix realization")
    n = sum(b.rows for b in blocks)
    ent = [0] * (n * n)
    off = 0
    for b in blocks:
        d = b.rows
        for i in range(d):
            for j in range(d):
                ent[(off + i) * n + (off + j)] = b.entries[i * d + j]
        off += d
    return Matrix(n, n, ent, p)
