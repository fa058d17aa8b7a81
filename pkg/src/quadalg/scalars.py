"""Exact base-field arithmetic: rationals, square classes, quadratic
extensions K = Q(sqrt k), and Hilbert symbols at the places of Q.

Scalars are plain ``fractions.Fraction`` values.  A square class is the
signed squarefree integer representing a*Q*^2; two scalars share it iff
their ratio is a nonzero rational square.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from sympy import factorint

Scalar = Fraction
SquareClass = int

RatLike = Union[Fraction, int]


def parse_scalar(text: str) -> Fraction:
    """Parse a scalar literal "n" or "n/d" with optional sign."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar literal {text!r}") from exc


@lru_cache(maxsize=None)
def _squarefree_part(n: int) -> int:
    """Signed squarefree part of a nonzero integer."""
    sign = -1 if n < 0 else 1
    out = sign
    for p, e in factorint(abs(n)).items():
        if e % 2:
            out *= p
    return out


def square_class(a: RatLike) -> SquareClass:
    """Signed squarefree integer representing a modulo nonzero squares."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("zero has no square class")
    return _squarefree_part(a.numerator * a.denominator)


def is_square(a: RatLike) -> bool:
    a = Fraction(a)
    return a > 0 and square_class(a) == 1


def is_local_square(a: RatLike, place: "Place") -> bool:
    """Whether a is a square in the completion at the place."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("zero is not classified")
    if place.is_real:
        return a > 0
    d = square_class(a)  # squarefree integer, same local square classes
    p = place.p
    v, u = _val_unit(d, p)
    if v % 2:
        return False
    if p == 2:
        return u % 8 == 1
    return _legendre(u, p) == 1


@dataclass(frozen=True)
class Place:
    """A place of Q carrying a local invariant: the real place or a prime."""

    p: int  # 0 encodes the real place

    def __post_init__(self) -> None:
        if self.p != 0 and (self.p < 2 or not _is_prime(self.p)):
            raise ValueError(f"not a place: {self.p}")

    @property
    def is_real(self) -> bool:
        return self.p == 0

    def __repr__(self) -> str:
        return "real" if self.is_real else f"p={self.p}"


REAL = Place(0)


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


def relevant_places(*scalars: RatLike) -> list[Place]:
    """The real place, 2, and every odd prime dividing a square-class
    representative of one of the inputs.  Hilbert symbols built from the
    inputs are +1 away from this set."""
    primes = {2}
    for a in scalars:
        if Fraction(a) == 0:
            continue
        primes.update(p for p in factorint(abs(square_class(a))) if p > 1)
    return [REAL] + [Place(p) for p in sorted(primes)]


def _val_unit(n: int, p: int) -> tuple[int, int]:
    """Write n = p^v * u with u prime to p."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(u: int, p: int) -> int:
    """Legendre symbol (u|p) for odd p and u prime to p."""
    r = pow(u % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def hilbert_symbol(a: RatLike, b: RatLike, place: Place) -> int:
    """Hilbert symbol (a,b) at a place of Q: +1 iff z^2 = a x^2 + b y^2
    has a nonzero solution over the completion.

    Computed by the classical explicit formulas (Legendre symbols for odd
    p, unit residues mod 8 for p = 2, signs at the real place).
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero arguments")
    if place.is_real:
        return -1 if (a < 0 and b < 0) else 1
    # Replace by square-class representatives; symbols only see those.
    ai, bi = square_class(a), square_class(b)
    p = place.p
    alpha, u = _val_unit(ai, p)
    beta, w = _val_unit(bi, p)
    if p == 2:
        eps = ((u - 1) // 2) * ((w - 1) // 2)
        omega = alpha * ((w * w - 1) // 8) + beta * ((u * u - 1) // 8)
        return -1 if (eps + omega) % 2 else 1
    sign = 1
    if alpha * beta * ((p - 1) // 2) % 2:
        sign = -sign
    if beta % 2:
        sign *= _legendre(u, p)
    if alpha % 2:
        sign *= _legendre(w, p)
    return sign


def hilbert_symbols_everywhere(a: RatLike, b: RatLike) -> dict[Place, int]:
    """Symbols (a,b)_v at every relevant place (all others are +1)."""
    return {v: hilbert_symbol(a, b, v) for v in relevant_places(a, b)}


def is_norm_from_K(a: RatLike, k: RatLike) -> bool:
    """Whether a = x^2 - k y^2 for rational x, y; equivalently the form
    <1,-k,-a> is isotropic, i.e. the quaternion algebra (k,a) splits."""
    a, k = Fraction(a), Fraction(k)
    if a == 0:
        raise ValueError("a must be nonzero")
    if is_square(k):
        raise ValueError("k is a square, K is not a field")
    return all(hilbert_symbol(k, a, v) == 1 for v in relevant_places(a, k))


class QuadExtScalar:
    """An element x + y*sqrt(k) of K = Q(sqrt k), k a fixed nonsquare."""

    __slots__ = ("x", "y", "k")

    def __init__(self, x: RatLike, y: RatLike, k: RatLike):
        k = Fraction(k)
        if is_square(k):
            raise ValueError("k must not be a rational square")
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))
        object.__setattr__(self, "k", k)

    def __setattr__(self, *args):  # immutable
        raise AttributeError("QuadExtScalar is immutable")

    # -- ring structure ------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExtScalar):
            if other.k != self.k:
                raise ValueError("mixed quadratic extensions")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtScalar(other, 0, self.k)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtScalar(self.x + o.x, self.y + o.y, self.k)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtScalar(-self.x, -self.y, self.k)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtScalar(
            self.x * o.x + self.k * self.y * o.y,
            self.x * o.y + self.y * o.x,
            self.k,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExtScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element of K")
        return QuadExtScalar(self.x / n, -self.y / n, self.k)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- field-theoretic maps -------------------------------------------
    def conj(self) -> "QuadExtScalar":
        """The nontrivial F-automorphism iota: x + y sqrt(k) -> x - y sqrt(k)."""
        return QuadExtScalar(self.x, -self.y, self.k)

    def norm(self) -> Fraction:
        """N_{K/F}: x^2 - k y^2."""
        return self.x * self.x - self.k * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    @property
    def is_rational(self) -> bool:
        return self.y == 0

    def rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.x

    # -- comparisons -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExtScalar):
            return (self.x, self.y, self.k) == (other.x, other.y, other.k)
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y, self.k))

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def __repr__(self) -> str:
        if self.y == 0:
            return str(self.x)
        return f"{self.x}+{self.y}*sqrt({self.k})"


KScalar = Union[Fraction, QuadExtScalar]


def iota(v: KScalar) -> KScalar:
    """Conjugation, acting trivially on rationals."""
    return v.conj() if isinstance(v, QuadExtScalar) else v


def sqrt_k(k: RatLike) -> QuadExtScalar:
    return QuadExtScalar(0, 1, k)


def as_rational(v: KScalar) -> Fraction:
    """Extract a rational value, rejecting elements with a sqrt(k) part."""
    if isinstance(v, QuadExtScalar):
        return v.rational()
    return Fraction(v)
