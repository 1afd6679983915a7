"""Dense exact matrices over F_p and exhaustive enumeration of matrix spaces.

Matrices are immutable value types compared entrywise.  Enumeration of
M_{n x m}(F_p) is lexicographic on the row-major entry vector, which fixes
canonical orbit representatives deterministically; GL_n(F_p) is the
invertible filter of that stream.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .algebra import FieldElement, check_prime, inverse_mod
from .errors import ModulusMismatch, NotSquare, ShapeMismatch, Singular, TooLarge

ENUMERATION_GUARD = 10_000_000


class Matrix:
    """An exact rows x cols matrix over F_p, entries row-major in [0, p)."""

    __slots__ = ("rows", "cols", "modulus", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[int], modulus: int):
        check_prime(modulus)
        if rows < 1 or cols < 1:
            raise ShapeMismatch(f"matrix shape {rows}x{cols} is empty")
        ent = tuple(int(e) % modulus for e in entries)
        if len(ent) != rows * cols:
            raise ShapeMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(ent)}"
            )
        self.rows = rows
        self.cols = cols
        self.modulus = modulus
        self.entries = ent

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: int) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ShapeMismatch("ragged rows")
            flat.extend(row)
        return cls(r, c, flat, modulus)

    @classmethod
    def zeros(cls, rows: int, cols: int, modulus: int) -> "Matrix":
        return cls(rows, cols, [0] * (rows * cols), modulus)

    @classmethod
    def identity(cls, n: int, modulus: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)], modulus)

    @classmethod
    def scalar(cls, n: int, value: int, modulus: int) -> "Matrix":
        return cls(n, n, [value if i == j else 0 for i in range(n) for j in range(n)], modulus)

    @classmethod
    def unit(cls, n: int, i: int, j: int, modulus: int) -> "Matrix":
        """The n x n matrix with a single 1 at position (i, j), zero elsewhere."""
        ent = [0] * (n * n)
        ent[i * n + j] = 1
        return cls(n, n, ent, modulus)

    # ---- structure ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __getitem__(self, idx: tuple[int, int]) -> FieldElement:
        i, j = idx
        return FieldElement(self.entries[i * self.cols + j], self.modulus)

    def row_lists(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def _check_mod(self, other: "Matrix") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")

    # ---- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_mod(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        p = self.modulus
        return Matrix(
            self.rows,
            self.cols,
            [(a + b) % p for a, b in zip(self.entries, other.entries)],
            p,
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        p = self.modulus
        return Matrix(self.rows, self.cols, [-e % p for e in self.entries], p)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")
            other = other.value
        if isinstance(other, int):
            p = self.modulus
            return Matrix(self.rows, self.cols, [e * other % p for e in self.entries], p)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_mod(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        p = self.modulus
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                s = 0
                for t in range(k):
                    s += arow[t] * b[t * m + j]
                out.append(s % p)
        return Matrix(n, m, out, p)

    def transpose(self) -> "Matrix":
        r, c = self.rows, self.cols
        e = self.entries
        return Matrix(c, r, [e[i * c + j] for j in range(c) for i in range(r)], self.modulus)

    # ---- elimination kernels -------------------------------------------

    def rank(self) -> int:
        """Rank by exact Gaussian elimination over F_p."""
        p = self.modulus
        m = self.row_lists()
        rank = 0
        for col in range(self.cols):
            pivot = next((i for i in range(rank, self.rows) if m[i][col]), None)
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            inv = inverse_mod(m[rank][col], p)
            for i in range(rank + 1, self.rows):
                f = m[i][col] * inv % p
                if f:
                    row_r = m[rank]
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], row_r)]
            rank += 1
            if rank == self.rows:
                break
        return rank

    def det(self) -> FieldElement:
        """Determinant by elimination with row-swap sign tracking."""
        if not self.is_square():
            raise NotSquare(f"det of a {self.rows}x{self.cols} matrix")
        p = self.modulus
        m = self.row_lists()
        n = self.rows
        det = 1
        for col in range(n):
            pivot = next((i for i in range(col, n) if m[i][col]), None)
            if pivot is None:
                return FieldElement(0, p)
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            det = det * m[col][col] % p
            inv = inverse_mod(m[col][col], p)
            for i in range(col + 1, n):
                f = m[i][col] * inv % p
                if f:
                    row_c = m[col]
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], row_c)]
        return FieldElement(det, p)

    def inverse(self) -> "Matrix":
        """Inverse by Gauss-Jordan elimination; raises Singular when det = 0."""
        if not self.is_square():
            raise NotSquare(f"inverse of a {self.rows}x{self.cols} matrix")
        p = self.modulus
        n = self.rows
        m = [row + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(self.row_lists())]
        for col in range(n):
            pivot = next((i for i in range(col, n) if m[i][col]), None)
            if pivot is None:
                raise Singular("matrix is singular")
            m[col], m[pivot] = m[pivot], m[col]
            inv = inverse_mod(m[col][col], p)
            m[col] = [x * inv % p for x in m[col]]
            for i in range(n):
                if i != col and m[i][col]:
                    f = m[i][col]
                    row_c = m[col]
                    m[i] = [(x - f * y) % p for x, y in zip(m[i], row_c)]
        return Matrix(n, n, [m[i][n + j] for i in range(n) for j in range(n)], p)

    def conjugate_by(self, s: "Matrix", s_inv: "Matrix | None" = None) -> "Matrix":
        """S * self * S^{-1}; pass a precomputed s_inv inside hot loops."""
        if s_inv is None:
            s_inv = s.inverse()
        return s @ self @ s_inv

    # ---- protocol -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return (
                self.rows == other.rows
                and self.cols == other.cols
                and self.modulus == other.modulus
                and self.entries == other.entries
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.rows, self.cols, self.modulus, self.entries))

    def __str__(self):
        c = self.cols
        return "\n".join(
            " ".join(str(e) for e in self.entries[i * c : (i + 1) * c])
            for i in range(self.rows)
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} mod {self.modulus}: {list(self.entries)})"


class MatrixTuple:
    """An ordered tuple of equally sized square matrices over one field.

    The transformation acting on tuples is simultaneous conjugation: one
    shared S applied to every component.  Independent transforms per
    component would define a different problem, so no such operation exists.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[Matrix]):
        parts = tuple(parts)
        if not parts:
            raise ShapeMismatch("a matrix tuple needs at least one component")
        first = parts[0]
        if not first.is_square():
            raise NotSquare("tuple components must be square")
        for m in parts[1:]:
            if m.shape != first.shape:
                raise ShapeMismatch("tuple components differ in size")
            if m.modulus != first.modulus:
                raise ModulusMismatch("tuple components over different fields")
        self.parts = parts

    @classmethod
    def scalars(cls, values: Sequence[int], n: int, modulus: int) -> "MatrixTuple":
        """The tuple (v_1 I, ..., v_a I) of scalar matrices."""
        return cls(Matrix.scalar(n, v, modulus) for v in values)

    @property
    def size(self) -> int:
        return self.parts[0].rows

    @property
    def modulus(self) -> int:
        return self.parts[0].modulus

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k: int) -> Matrix:
        return self.parts[k]

    def conjugate(self, s: Matrix, s_inv: Matrix | None = None) -> "MatrixTuple":
        """Simultaneous conjugation (S A_1 S^{-1}, ..., S A_a S^{-1})."""
        if s.shape != (self.size, self.size):
            raise ShapeMismatch(f"conjugator shape {s.shape} vs tuple size {self.size}")
        if s_inv is None:
            s_inv = s.inverse()
        return MatrixTuple(s @ m @ s_inv for m in self.parts)

    def entry_vector(self) -> tuple[int, ...]:
        """Concatenated row-major entries; the lexicographic enumeration key."""
        out = []
        for m in self.parts:
            out.extend(m.entries)
        return tuple(out)

    def __eq__(self, other):
        if isinstance(other, MatrixTuple):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"MatrixTuple({', '.join(repr(m) for m in self.parts)})"


def enumerate_matrices(rows: int, cols: int, p: int) -> Iterator[Matrix]:
    """All matrices of M_{rows x cols}(F_p), lexicographic on entry vectors."""
    check_prime(p)
    if p ** (rows * cols) > ENUMERATION_GUARD:
        raise TooLarge(f"{p}^{rows * cols} matrices exceed the enumeration guard")
    for combo in product(range(p), repeat=rows * cols):
        yield Matrix(rows, cols, combo, p)


def enumerate_gl(n: int, p: int) -> Iterator[Matrix]:
    """Every invertible n x n matrix over F_p exactly once, in lex order."""
    for m in enumerate_matrices(n, n, p):
        if m.det().value != 0:
            yield m


def gl_order(n: int, p: int) -> int:
    """|GL_n(F_p)| by the standard counting product."""
    q = p**n
    out = 1
    for k in range(n):
        out *= q - p**k
    return out


@lru_cache(maxsize=None)
def gl_pairs(n: int, p: int) -> tuple[tuple[Matrix, Matrix], ...]:
    """Cached (S, S^{-1}) pairs for GL_n(F_p) in enumeration order."""
    return tuple((s, s.inverse()) for s in enumerate_gl(n, p))


def enumerate_tuples(arity: int, n: int, p: int) -> Iterator[MatrixTuple]:
    """All a-tuples of n x n matrices, lex on concatenated entry vectors."""
    check_prime(p)
    if p ** (arity * n * n) > ENUMERATION_GUARD:
        raise TooLarge(f"{p}^{arity * n * n} tuples exceed the enumeration guard")
    mats = list(enumerate_matrices(n, n, p))
    for combo in product(mats, repeat=arity):
        yield MatrixTuple(combo)
