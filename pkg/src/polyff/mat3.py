"""3x3 matrices over a finite ring: the element type of all generated groups.

Matrices are immutable, entrywise-canonical, and hashable.  The column
convention is used throughout: a matrix acts on column vectors, and the
columns are the images of the three basis vectors.

Text format for reports: row-major, rows separated by ``;`` and entries by
``,`` (entries may be any parseable element literal, e.g. ``-1`` before
canonical reduction).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import MixedRings, NotInvertible
from .rings import Ring, RingElem, ZMod


class _Unbounded:
    """Sentinel: a multiplicative order that exceeded the search cap."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()

ORDER_CAP_DEFAULT = 10**6


class Mat3:
    """A 3x3 matrix over a ring, entries in row-major order."""

    __slots__ = ("ring", "vals")

    def __init__(self, ring: Ring, entries: Iterable):
        elems = [ring.elem(e) for e in entries]
        if len(elems) != 9:
            raise ValueError(f"expected 9 entries, got {len(elems)}")
        self.ring = ring
        self.vals = tuple(e.val for e in elems)

    @classmethod
    def _raw(cls, ring: Ring, vals: tuple) -> Mat3:
        m = object.__new__(cls)
        m.ring = ring
        m.vals = vals
        return m

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence]) -> Mat3:
        return cls(ring, [e for row in rows for e in row])

    @classmethod
    def identity(cls, ring: Ring) -> Mat3:
        one = ring._from_int(1)
        zero = ring._from_int(0)
        return cls._raw(ring, (one, zero, zero, zero, one, zero, zero, zero, one))

    def entry(self, i: int, j: int) -> RingElem:
        return RingElem(self.ring, self.vals[3 * i + j])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat3) and other.ring == self.ring
                and other.vals == self.vals)

    def __hash__(self) -> int:
        return hash(self.vals)

    def __mul__(self, other: Mat3) -> Mat3:
        if other.ring != self.ring:
            raise MixedRings("cannot multiply matrices over different rings")
        ring = self.ring
        a = self.vals
        b = other.vals
        if isinstance(ring, ZMod):
            # unrolled integer path: this is the closure hot loop
            n = ring.modulus
            a0, a1, a2, a3, a4, a5, a6, a7, a8 = a
            b0, b1, b2, b3, b4, b5, b6, b7, b8 = b
            vals = (
                (a0 * b0 + a1 * b3 + a2 * b6) % n,
                (a0 * b1 + a1 * b4 + a2 * b7) % n,
                (a0 * b2 + a1 * b5 + a2 * b8) % n,
                (a3 * b0 + a4 * b3 + a5 * b6) % n,
                (a3 * b1 + a4 * b4 + a5 * b7) % n,
                (a3 * b2 + a4 * b5 + a5 * b8) % n,
                (a6 * b0 + a7 * b3 + a8 * b6) % n,
                (a6 * b1 + a7 * b4 + a8 * b7) % n,
                (a6 * b2 + a7 * b5 + a8 * b8) % n,
            )
        else:
            add = ring._add
            mul = ring._mul
            vals = tuple(
                add(add(mul(a[3 * i], b[j]), mul(a[3 * i + 1], b[3 + j])),
                    mul(a[3 * i + 2], b[6 + j]))
                for i in range(3) for j in range(3)
            )
        return Mat3._raw(ring, vals)

    def det(self) -> RingElem:
        """Determinant by cofactor expansion along the first row."""
        ring = self.ring
        a = self.vals
        mul = ring._mul
        sub = ring._sub
        add = ring._add
        m0 = sub(mul(a[4], a[8]), mul(a[5], a[7]))
        m1 = sub(mul(a[3], a[8]), mul(a[5], a[6]))
        m2 = sub(mul(a[3], a[7]), mul(a[4], a[6]))
        d = add(sub(mul(a[0], m0), mul(a[1], m1)), mul(a[2], m2))
        return RingElem(ring, d)

    def is_identity(self) -> bool:
        return self.vals == Mat3.identity(self.ring).vals

    def order(self, cap: int = ORDER_CAP_DEFAULT):
        """Least m >= 1 with self^m = I, or UNBOUNDED past the cap.

        Computed by iterated multiplication; over a finite ring UNBOUNDED
        only means the cap was too small.
        """
        if not self.det().is_unit:
            raise NotInvertible("matrix order undefined: determinant is not a unit")
        ident = Mat3.identity(self.ring).vals
        m = 1
        power = self
        while power.vals != ident:
            power = power * self
            m += 1
            if m > cap:
                return UNBOUNDED
        return m

    def key(self) -> bytes:
        """Canonical byte key: ring cardinality, then all entry coefficients.

        Distinct matrices over one ring always get distinct keys.
        """
        ring = self.ring
        width = max(1, ((ring.modulus - 1).bit_length() + 7) // 8)
        parts = [ring.cardinality.to_bytes(8, "big")]
        for v in self.vals:
            if isinstance(v, int):
                parts.append(v.to_bytes(width, "big"))
            else:
                for c in v:
                    parts.append(c.to_bytes(width, "big"))
        return b"".join(parts)

    def to_text(self) -> str:
        fmt = self.ring._fmt
        return ";".join(
            ",".join(fmt(self.vals[3 * i + j]) for j in range(3)) for i in range(3)
        )

    @classmethod
    def from_text(cls, ring: Ring, text: str) -> Mat3:
        rows = text.strip().split(";")
        if len(rows) != 3:
            raise ValueError(f"expected 3 rows, got {len(rows)}")
        entries = []
        for row in rows:
            cells = row.split(",")
            if len(cells) != 3:
                raise ValueError(f"expected 3 entries per row, got {len(cells)}")
            entries.extend(ring.parse_elem(cell) for cell in cells)
        return cls(ring, entries)

    def __repr__(self) -> str:
        return f"Mat3({self.ring}, {self.to_text()!r})"


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    """Matrix product (same as ``a * b``)."""
    return a * b


def mat_det(a: Mat3) -> RingElem:
    """Determinant (same as ``a.det()``)."""
    return a.det()


def mat_order(a: Mat3, cap: int = ORDER_CAP_DEFAULT):
    """Multiplicative order (same as ``a.order(cap)``)."""
    return a.order(cap)
