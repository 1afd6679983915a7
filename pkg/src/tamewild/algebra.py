"""Exact arithmetic over prime fields F_p and the polynomial ring F_p[x].

Everything here is a pure function over immutable values.  Elements are
residues stored as plain ints in [0, p); polynomials are dense coefficient
tuples, lowest degree first, with no trailing zeros.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    BothZero,
    DivisionByZeroPoly,
    DuplicateNode,
    EmptyTable,
    ModulusMismatch,
    ZeroInverse,
)

MAX_MODULUS = 2**31


@lru_cache(maxsize=None)
def check_prime(p: int) -> None:
    """Validate a field modulus by trial division.

    Eager validation lets every downstream operation assume nonzero elements
    are invertible.
    """
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"modulus must be an int, got {p!r}")
    if p < 2 or p > MAX_MODULUS:
        raise ValueError(f"modulus must be a prime in [2, 2^31], got {p}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus {p} is not prime (divisible by {d})")
        d += 1


def inverse_mod(a: int, p: int) -> int:
    """Inverse of the residue a in F_p; raises ZeroInverse on a ≡ 0."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse in F_{p}")
    return pow(a, p - 2, p)


class FieldElement:
    """A residue in the prime field F_p, always reduced to [0, p)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        check_prime(modulus)
        self.value = int(value) % modulus
        self.modulus = modulus

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"F_{self.modulus} vs F_{other.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.modulus)

    def __pow__(self, n: int):
        return FieldElement(pow(self.value, n, self.modulus), self.modulus)

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse; raises ZeroInverse for the zero element."""
        return FieldElement(inverse_mod(self.value, self.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * inverse_mod(v, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self.value}, mod {self.modulus})"

    def __str__(self):
        return str(self.value)


class PrimeField:
    """Convenience factory for elements of one fixed prime field."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int):
        check_prime(modulus)
        self.modulus = modulus

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self.modulus)

    def zero(self) -> FieldElement:
        return FieldElement(0, self.modulus)

    def one(self) -> FieldElement:
        return FieldElement(1, self.modulus)

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.modulus):
            yield FieldElement(v, self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeField):
            return self.modulus == other.modulus
        return NotImplemented

    def __hash__(self):
        return hash(("PrimeField", self.modulus))

    def __repr__(self):
        return f"PrimeField({self.modulus})"


class Poly:
    """Univariate polynomial over F_p.

    Coefficients are stored lowest degree first with no trailing zeros, so
    equality is plain tuple equality.  The zero polynomial has an empty
    coefficient tuple and degree -1 (a sentinel smaller than every natural
    degree).
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable[int], modulus: int):
        check_prime(modulus)
        cs = [int(c) % modulus for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.modulus = modulus

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, modulus: int) -> "Poly":
        return cls((), modulus)

    @classmethod
    def one(cls, modulus: int) -> "Poly":
        return cls((1,), modulus)

    @classmethod
    def constant(cls, c: int, modulus: int) -> "Poly":
        return cls((c,), modulus)

    @classmethod
    def x(cls, modulus: int) -> "Poly":
        return cls((0, 1), modulus)

    @classmethod
    def monomial(cls, coeff: int, power: int, modulus: int) -> "Poly":
        return cls([0] * power + [coeff], modulus)

    # ---- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        """Leading coefficient as an int; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "Poly":
        """Scale so the leading coefficient is 1; raises ZeroInverse on 0."""
        if self.is_zero():
            raise ZeroInverse("the zero polynomial cannot be made monic")
        if self.is_monic():
            return self
        inv = inverse_mod(self.coeffs[-1], self.modulus)
        return Poly((c * inv for c in self.coeffs), self.modulus)

    def _check(self, other: "Poly") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(f"F_{self.modulus} vs F_{other.modulus}")

    # ---- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.modulus
        return Poly(out, self.modulus)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly((-c for c in self.coeffs), self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly((c * other for c in self.coeffs), self.modulus)
        if isinstance(other, FieldElement):
            return self * other.value
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.modulus)
        p = self.modulus
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % p
        return Poly(out, p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.modulus)
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        """Exact Euclidean division: self = q*other + r with deg r < deg other."""
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroPoly("polynomial division by zero")
        p = self.modulus
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        if len(rem) < dlen:
            return Poly.zero(p), self
        inv_lead = inverse_mod(other.coeffs[-1], p)
        quot = [0] * (len(rem) - dlen + 1)
        for k in range(len(rem) - dlen, -1, -1):
            c = rem[k + dlen - 1]
            if c == 0:
                continue
            q = c * inv_lead % p
            quot[k] = q
            for i, dc in enumerate(other.coeffs):
                rem[k + i] = (rem[k + i] - q * dc) % p
        return Poly(quot, p), Poly(rem[: dlen - 1], p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True when self divides other with zero remainder."""
        return (other % self).is_zero()

    # ---- evaluation ---------------------------------------------------

    def eval_int(self, a: int) -> int:
        """Horner evaluation at a residue, returned as an int in [0, p)."""
        p = self.modulus
        a %= p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % p
        return acc

    def eval(self, a) -> FieldElement:
        if isinstance(a, FieldElement):
            if a.modulus != self.modulus:
                raise ModulusMismatch(f"F_{self.modulus} vs F_{a.modulus}")
            a = a.value
        return FieldElement(self.eval_int(a), self.modulus)

    def compose(self, inner: "Poly") -> "Poly":
        """self(inner(x)), by Horner over polynomials."""
        self._check(inner)
        acc = Poly.zero(self.modulus)
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c, self.modulus)
        return acc

    # ---- protocol -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.modulus))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{k}" if c == 1 else f"{c}x^{k}")
        return "+".join(terms)

    def __repr__(self):
        return f"Poly({self}, mod {self.modulus})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm.

    Raises BothZero when both inputs are zero.
    """
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    """Monic least common multiple."""
    if f.is_zero() or g.is_zero():
        return Poly.zero(f.modulus)
    return ((f * g) // poly_gcd(f, g)).monic()


def _node_values(nodes, modulus):
    xs, ys = [], []
    p = modulus
    for x, y in nodes:
        if isinstance(x, FieldElement):
            if p is None:
                p = x.modulus
            elif x.modulus != p:
                raise ModulusMismatch("interpolation nodes over mixed fields")
            x = x.value
        if isinstance(y, FieldElement):
            if p is None:
                p = y.modulus
            elif y.modulus != p:
                raise ModulusMismatch("interpolation nodes over mixed fields")
            y = y.value
        xs.append(x)
        ys.append(y)
    if p is None:
        raise ValueError("modulus required when nodes are plain ints")
    check_prime(p)
    return [x % p for x in xs], [y % p for y in ys], p


def interpolate(nodes: Sequence[tuple], modulus: int | None = None) -> Poly:
    """Divided-differences interpolation through (x, y) nodes over F_p.

    Builds the Newton coefficient table f[x_0..x_k] bottom up, then assembles
    sum_k c_k * prod_{i<k} (x - x_i).  The result is the unique polynomial of
    degree below the node count matching every node; evaluation at each
    abscissa reproduces the ordinate exactly.
    """
    if not nodes:
        raise EmptyTable("interpolation needs at least one node")
    xs, ys, p = _node_values(nodes, modulus)
    if len(set(xs)) != len(xs):
        raise DuplicateNode(f"repeated abscissa among {xs}")
    m = len(xs)
    coef = list(ys)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            num = (coef[i] - coef[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            coef[i] = num * inverse_mod(den, p) % p
    result = Poly.zero(p)
    basis = Poly.one(p)
    for k in range(m):
        result = result + basis * coef[k]
        basis = basis * Poly((-xs[k], 1), p)
    return result
