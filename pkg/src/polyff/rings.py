"""Exact arithmetic in Z/nZ and GF(p^k), plus exact (a + b*sqrt5)/c parameters.

Two ring kinds are supported:

* ``ZMod(n)`` -- integers modulo n, elements stored as canonical residues
  in [0, n).
* ``GaloisField(p, k, ext_poly)`` -- the quotient F_p[t]/(ext_poly) with a
  monic irreducible ``ext_poly`` of degree k.  Elements are coefficient
  tuples of length k, ascending powers, entries in [0, p).  For k = 1 the
  quotient by the polynomial t is used, so GF(p) elements are plain
  residues wrapped in a length-1 tuple.

Ring specification grammar (used by :func:`ring_make` and the CLI)::

    zmod:<n> | gf:<p> | gf:<p>^<k> | gf:<p>^<k>:<poly>

where ``<poly>`` is written like ``t^2+t+1``.  Element printing is the
canonical residue for ZMod and a polynomial in t with descending powers
for GaloisField; ``parse_elem`` accepts the same syntax (signs allowed,
reduced to canonical form).

:class:`QuadRational` holds exact values (a + b*sqrt5)/c in lowest terms;
sqrt5 is the only irrationality needed by the built-in polyhedron catalog.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import (
    MixedRings,
    ModulusTooSmall,
    NonInvertibleDenominator,
    NonPrimeCharacteristic,
    NotAUnit,
    ReduciblePolynomial,
    RingSpecError,
    SqrtNotInRing,
    UnsupportedRing,
)

RawValue = Union[int, tuple]

# exhaustive square-root search refuses above this cardinality
SQRT_SEARCH_CAP = 10**6
# dense coefficient vectors stay practical only for small extension degrees
MAX_EXTENSION_DEGREE = 4


def is_prime(n: int) -> bool:
    """Trial-division primality test (desk-scale moduli only)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (dense ascending-coefficient tuples)

def _poly_trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m, over F_p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _poly_trim([v % p for v in a[:dm]])


def _poly_is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by monic polynomials of degree <= deg(m)/2."""
    k = len(m) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            g = lower + (1,)
            if not _poly_mod(m, g, p):
                return False
    return True


def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p, lowest coefficients first."""
    for lower in itertools.product(range(p), repeat=k):
        # enumerate by the constant coefficient last so small polynomials win
        m = tuple(reversed(lower)) + (1,)
        if _poly_is_irreducible(m, p):
            return m
    raise AssertionError(f"no monic irreducible of degree {k} over F_{p}")


def _poly_str(coeffs: tuple[int, ...]) -> str:
    """Descending-power rendering, e.g. (1, 1, 1) -> 't^2+t+1'."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            var = "t" if e == 1 else f"t^{e}"
            terms.append(var if c == 1 else f"{c}{var}")
    return "+".join(terms) if terms else "0"


_TERM_RE = re.compile(r"^(\d+)?(t(?:\^(\d+))?)?$")


def _poly_parse(text: str, p: int) -> list[int]:
    """Parse 't^2+3t+1' style text into an ascending coefficient list mod p."""
    s = text.replace(" ", "")
    if not s:
        raise RingSpecError("empty polynomial")
    # split into signed terms
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise RingSpecError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for piece in pieces:
        sign = 1
        body = piece
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise RingSpecError(f"bad term {piece!r} in polynomial {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            exp = 0
        else:
            exp = int(m.group(3)) if m.group(3) is not None else 1
        coeffs[exp] = (coeffs.get(exp, 0) + sign * coeff) % p
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return out


# ---------------------------------------------------------------------------
# rings

class Ring:
    """Base class: a finite commutative ring with identity.

    Subclasses provide raw-value arithmetic; user-facing values are
    :class:`RingElem` wrappers.  Instances are immutable and hashable, so
    they can be shared freely across threads.
    """

    kind: str
    cardinality: int

    # -- raw-value operations, implemented by subclasses ---------------
    def _add(self, u: RawValue, v: RawValue) -> RawValue:
        raise NotImplementedError

    def _sub(self, u: RawValue, v: RawValue) -> RawValue:
        raise NotImplementedError

    def _mul(self, u: RawValue, v: RawValue) -> RawValue:
        raise NotImplementedError

    def _neg(self, u: RawValue) -> RawValue:
        raise NotImplementedError

    def _inv(self, u: RawValue) -> RawValue:
        raise NotImplementedError

    def _is_unit(self, u: RawValue) -> bool:
        raise NotImplementedError

    def _from_int(self, m: int) -> RawValue:
        raise NotImplementedError

    def _fmt(self, u: RawValue) -> str:
        raise NotImplementedError

    def _sort_key(self, u: RawValue):
        raise NotImplementedError

    def _iter_values(self) -> Iterator[RawValue]:
        raise NotImplementedError

    def _parse(self, text: str) -> RawValue:
        raise NotImplementedError

    # -- public API ------------------------------------------------------
    @property
    def is_field(self) -> bool:
        raise NotImplementedError

    @property
    def zero(self) -> RingElem:
        return RingElem(self, self._from_int(0))

    @property
    def one(self) -> RingElem:
        return RingElem(self, self._from_int(1))

    def from_int(self, m: int) -> RingElem:
        """Image of the integer m under Z -> R."""
        return RingElem(self, self._from_int(m))

    def elem(self, value) -> RingElem:
        """Coerce an int, raw tuple, string or RingElem into this ring."""
        if isinstance(value, RingElem):
            if value.ring != self:
                raise MixedRings(f"element of {value.ring} used in {self}")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse_elem(value)
        if isinstance(value, (tuple, list)) and self.kind == "gf":
            return RingElem(self, self._canon_tuple(tuple(value)))  # type: ignore[attr-defined]
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def elements(self) -> Iterator[RingElem]:
        """All elements in canonical ascending order."""
        for v in self._iter_values():
            yield RingElem(self, v)

    def parse_elem(self, text: str) -> RingElem:
        return RingElem(self, self._parse(text))

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.spec_string()


class ZMod(Ring):
    """Integers modulo n, n >= 2."""

    kind = "zmod"

    def __init__(self, n: int):
        if n < 2:
            raise ModulusTooSmall(f"zmod modulus must be >= 2, got {n}")
        self.modulus = n
        self.cardinality = n
        self._prime = is_prime(n)

    @property
    def is_field(self) -> bool:
        return self._prime

    def __eq__(self, other) -> bool:
        return isinstance(other, ZMod) and other.modulus == self.modulus

    def __hash__(self) -> int:
        return hash(("zmod", self.modulus))

    def _add(self, u, v):
        return (u + v) % self.modulus

    def _sub(self, u, v):
        return (u - v) % self.modulus

    def _mul(self, u, v):
        return (u * v) % self.modulus

    def _neg(self, u):
        return -u % self.modulus

    def _inv(self, u):
        try:
            return pow(u, -1, self.modulus)
        except ValueError:
            raise NotAUnit(f"{u} is not invertible mod {self.modulus}") from None

    def _is_unit(self, u):
        return math.gcd(u, self.modulus) == 1

    def _from_int(self, m):
        return m % self.modulus

    def _fmt(self, u):
        return str(u)

    def _sort_key(self, u):
        return (u,)

    def _iter_values(self):
        return iter(range(self.modulus))

    def _parse(self, text):
        try:
            return int(text.strip()) % self.modulus
        except ValueError:
            raise RingSpecError(f"bad element literal {text!r} for {self}") from None

    def spec_string(self) -> str:
        return f"zmod:{self.modulus}"


class GaloisField(Ring):
    """GF(p^k) as F_p[t]/(ext_poly) with a monic irreducible ext_poly.

    When no polynomial is supplied, a monic irreducible of degree k is found
    by exhaustive search (deterministic: smallest in the enumeration order).
    Degree-1 fields use the convention ext_poly = t.
    """

    kind = "gf"

    def __init__(self, p: int, k: int = 1, ext_poly: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"gf characteristic must be prime, got {p}")
        if k < 1:
            raise RingSpecError(f"extension degree must be >= 1, got {k}")
        if k > MAX_EXTENSION_DEGREE:
            raise UnsupportedRing(f"extension degree {k} > {MAX_EXTENSION_DEGREE} not supported")
        self.modulus = p
        self.degree = k
        if ext_poly is None:
            ext_poly = (0, 1) if k == 1 else _find_irreducible(p, k)
        else:
            ext_poly = tuple(c % p for c in ext_poly)
            if len(ext_poly) != k + 1 or ext_poly[-1] != 1:
                raise RingSpecError(
                    f"extension polynomial must be monic of degree {k}: {_poly_str(ext_poly)}")
            if k > 1 and not _poly_is_irreducible(ext_poly, p):
                raise ReduciblePolynomial(
                    f"{_poly_str(ext_poly)} is reducible over F_{p}")
        self.ext_poly = ext_poly
        self.cardinality = p**k
        # t^k == sum(_reduction[j] * t^j): used to fold products back to degree < k
        self._reduction = tuple(-c % p for c in ext_poly[:k])

    @property
    def is_field(self) -> bool:
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, GaloisField) and other.modulus == self.modulus
                and other.ext_poly == self.ext_poly)

    def __hash__(self) -> int:
        return hash(("gf", self.modulus, self.ext_poly))

    def _canon_tuple(self, v: tuple) -> tuple[int, ...]:
        if len(v) > self.degree:
            raise RingSpecError(f"coefficient vector too long for {self}")
        v = tuple(int(c) % self.modulus for c in v)
        return v + (0,) * (self.degree - len(v))

    def _add(self, u, v):
        p = self.modulus
        return tuple((a + b) % p for a, b in zip(u, v))

    def _sub(self, u, v):
        p = self.modulus
        return tuple((a - b) % p for a, b in zip(u, v))

    def _neg(self, u):
        p = self.modulus
        return tuple(-a % p for a in u)

    def _mul(self, u, v):
        p = self.modulus
        k = self.degree
        if k == 1:
            return ((u[0] * v[0]) % p,)
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    prod[i + j] = (prod[i + j] + a * b) % p
        red = self._reduction
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                base = i - k
                for j, r in enumerate(red):
                    if r:
                        prod[base + j] = (prod[base + j] + c * r) % p
        return tuple(prod[:k])

    def _is_unit(self, u):
        return any(u)

    def _inv(self, u):
        if not any(u):
            raise NotAUnit(f"0 is not invertible in {self}")
        # u^(q-2) by square-and-multiply; fine at the cardinalities we support
        e = self.cardinality - 2
        result = self._from_int(1)
        base = u
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def _from_int(self, m):
        return (m % self.modulus,) + (0,) * (self.degree - 1)

    def _fmt(self, u):
        if self.degree == 1:
            return str(u[0])
        return _poly_str(u)

    def _sort_key(self, u):
        return u

    def _iter_values(self):
        return itertools.product(range(self.modulus), repeat=self.degree)

    def _parse(self, text):
        coeffs = _poly_parse(text, self.modulus)
        if len(coeffs) > self.degree:
            # reduce higher powers by the extension polynomial
            coeffs = list(_poly_mod(tuple(coeffs), self.ext_poly, self.modulus))
        return self._canon_tuple(tuple(coeffs))

    def spec_string(self) -> str:
        if self.degree == 1:
            return f"gf:{self.modulus}"
        return f"gf:{self.modulus}^{self.degree}:{_poly_str(self.ext_poly)}"


@dataclass(frozen=True)
class RingElem:
    """An element of a specific ring, always kept in canonical reduced form."""

    ring: Ring
    val: RawValue

    def _check(self, other: RingElem) -> None:
        if other.ring != self.ring:
            raise MixedRings(f"cannot combine elements of {self.ring} and {other.ring}")

    def __add__(self, other: RingElem) -> RingElem:
        self._check(other)
        return RingElem(self.ring, self.ring._add(self.val, other.val))

    def __sub__(self, other: RingElem) -> RingElem:
        self._check(other)
        return RingElem(self.ring, self.ring._sub(self.val, other.val))

    def __mul__(self, other: RingElem) -> RingElem:
        self._check(other)
        return RingElem(self.ring, self.ring._mul(self.val, other.val))

    def __neg__(self) -> RingElem:
        return RingElem(self.ring, self.ring._neg(self.val))

    def inv(self) -> RingElem:
        """Multiplicative inverse; raises NotAUnit if none exists."""
        return RingElem(self.ring, self.ring._inv(self.val))

    @property
    def is_unit(self) -> bool:
        return self.ring._is_unit(self.val)

    @property
    def is_zero(self) -> bool:
        return self.val == self.ring._from_int(0)

    @property
    def sort_key(self):
        return self.ring._sort_key(self.val)

    def __str__(self) -> str:
        return self.ring._fmt(self.val)


# ---------------------------------------------------------------------------
# exact quadratic-rational parameters

@dataclass(frozen=True)
class QuadRational:
    """Exact value (a + b*sqrt5)/c with c >= 1 and gcd(a, b, c) = 1.

    b = 0 encodes an ordinary rational a/c.  Addition and multiplication are
    exact arithmetic in Q(sqrt5).
    """

    a: int
    b: int = 0
    c: int = 1

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if c == 0:
            raise ZeroDivisionError("QuadRational denominator is zero")
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(abs(a), abs(b)), c)
        if g > 1:
            a, b, c = a // g, b // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __add__(self, other: QuadRational) -> QuadRational:
        return QuadRational(self.a * other.c + other.a * self.c,
                            self.b * other.c + other.b * self.c,
                            self.c * other.c)

    def __sub__(self, other: QuadRational) -> QuadRational:
        return self + (-other)

    def __neg__(self) -> QuadRational:
        return QuadRational(-self.a, -self.b, self.c)

    def __mul__(self, other: QuadRational) -> QuadRational:
        return QuadRational(self.a * other.a + 5 * self.b * other.b,
                            self.a * other.b + self.b * other.a,
                            self.c * other.c)

    def denominator_primes(self) -> set[int]:
        """Primes dividing the reduced denominator."""
        c = self.c
        out = set()
        d = 2
        while d * d <= c:
            if c % d == 0:
                out.add(d)
                while c % d == 0:
                    c //= d
            d += 1
        if c > 1:
            out.add(c)
        return out

    def to_json(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b, "c": self.c}

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        if self.b == 1:
            root = "sqrt5"
        elif self.b == -1:
            root = "-sqrt5"
        else:
            root = f"{self.b}sqrt5"
        if self.a == 0:
            num = root
            bare = True
        else:
            num = f"{self.a}+{root}" if self.b > 0 else f"{self.a}{root}"
            bare = False
        if self.c == 1:
            return num
        return f"{num}/{self.c}" if bare else f"({num})/{self.c}"


# ---------------------------------------------------------------------------
# module-level operations

_SPEC_RE = re.compile(r"^gf:(\d+)(?:\^(\d+))?(?::(.+))?$")


def ring_make(spec: str) -> Ring:
    """Build a ring from its specification string (see module docstring)."""
    s = spec.strip()
    if s.startswith("zmod:"):
        body = s[len("zmod:"):]
        try:
            n = int(body)
        except ValueError:
            raise RingSpecError(f"bad zmod modulus {body!r}") from None
        return ZMod(n)
    m = _SPEC_RE.match(s)
    if m:
        p = int(m.group(1))
        k = int(m.group(2)) if m.group(2) else 1
        poly_text = m.group(3)
        if poly_text is None:
            return GaloisField(p, k)
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"gf characteristic must be prime, got {p}")
        coeffs = _poly_parse(poly_text, p)
        return GaloisField(p, k, tuple(coeffs))
    raise RingSpecError(f"cannot parse ring spec {spec!r}")


def sqrt_in_field(d: RingElem) -> RingElem | None:
    """Some r with r*r = d, or None; ties broken by smallest canonical form.

    Exhaustive search, refused above cardinality 10**6.  Valid over any
    finite field (GaloisField, or ZMod with prime modulus).
    """
    ring = d.ring
    if not ring.is_field:
        raise UnsupportedRing(f"square roots need a field, got {ring}")
    if ring.cardinality > SQRT_SEARCH_CAP:
        raise UnsupportedRing(
            f"square-root search capped at cardinality {SQRT_SEARCH_CAP}")
    for r in ring.elements():
        if r * r == d:
            return r
    return None


def reduce_quadrational(q: QuadRational, ring: Ring) -> RingElem:
    """Evaluate (a + b*sqrt5)/c inside the given ring.

    Division is multiplication by inv(c).  Raises NonInvertibleDenominator
    when c is not a unit, UnsupportedRing when b != 0 over a non-field, and
    SqrtNotInRing when sqrt5 does not exist in the field (callers may retry
    over a quadratic extension).
    """
    c = ring.from_int(q.c)
    if not c.is_unit:
        raise NonInvertibleDenominator(
            f"denominator {q.c} is not a unit in {ring}")
    num = ring.from_int(q.a)
    if q.b != 0:
        if not ring.is_field:
            raise UnsupportedRing(
                f"sqrt5 parameters need a field, got {ring}")
        s = sqrt_in_field(ring.from_int(5))
        if s is None:
            raise SqrtNotInRing(f"5 has no square root in {ring}")
        num = num + ring.from_int(q.b) * s
    return num * c.inv()
