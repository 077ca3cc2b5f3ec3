"""Finite closure of matrix generators, order spectra, and group recognition.

Closure is a breadth-first walk from the identity under right
multiplication by the generators, which gives a deterministic element
order (discovery order) for any fixed generator list.  The resulting
group is summarized by an isomorphism-invariant fingerprint: order,
multiset of element orders, abelian flag, and center size.  For the small
groups named in the recognition table the fingerprint identifies the
group; this is a lookup guarantee for table entries only, not a general
isomorphism test.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceeded, MixedRings, NonInvertibleGenerator
from .mat3 import Mat3
from .rings import Ring

CLOSURE_CAP_DEFAULT = 10**6
CAYLEY_RETENTION_BOUND = 10_000


@dataclass(frozen=True)
class GroupFingerprint:
    """Isomorphism-invariant summary of a finite group."""

    order: int
    spectrum: tuple[tuple[int, int], ...]  # sorted (element order, count)
    abelian: bool
    center_size: int

    def serialize(self) -> str:
        spec = ",".join(f"{d}:{c}" for d, c in self.spectrum)
        ab = "true" if self.abelian else "false"
        return f"order={self.order};spectrum={spec};abelian={ab};center={self.center_size}"


class GeneratedGroup:
    """The closure of a generator list: elements, labels, and Cayley edges.

    ``elements[0]`` is always the identity.  ``cayley`` (when retained) maps
    element index i and generator index g to the index of elements[i] *
    gens[g]; it is dropped for groups larger than ``cayley_bound`` to bound
    memory.  Instances are immutable after construction.
    """

    def __init__(self, ring: Ring, elements: list[Mat3],
                 generators: list[tuple[str, Mat3]],
                 cayley: list[tuple[int, ...]] | None):
        self.ring = ring
        self.elements = elements
        self.generators = generators
        self.cayley = cayley
        self._index = {m.vals: i for i, m in enumerate(elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, m: Mat3) -> int:
        return self._index[m.vals]

    def __contains__(self, m: Mat3) -> bool:
        return isinstance(m, Mat3) and m.ring == self.ring and m.vals in self._index

    def generator(self, label: str) -> Mat3:
        for name, m in self.generators:
            if name == label:
                return m
        raise KeyError(label)


def generate(gens: Sequence[Mat3], cap: int = CLOSURE_CAP_DEFAULT,
             labels: Sequence[str] | None = None,
             cayley_bound: int = CAYLEY_RETENTION_BOUND) -> GeneratedGroup:
    """Breadth-first closure of the generators under right multiplication.

    Deterministic: the element order depends only on the generator list.
    Raises CapExceeded (with the partial count) if the closure passes
    ``cap`` elements.
    """
    if not gens:
        raise ValueError("need at least one generator")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise MixedRings("generators live in different rings")
        if not g.det().is_unit:
            raise NonInvertibleGenerator(f"generator determinant {g.det()} is not a unit")
    if labels is None:
        labels = [f"g{i}" for i in range(len(gens))]
    elif len(labels) != len(gens):
        raise ValueError("labels and generators differ in length")

    ident = Mat3.identity(ring)
    elements = [ident]
    index = {ident.vals: 0}
    cayley: list[tuple[int, ...]] | None = []
    i = 0
    while i < len(elements):
        a = elements[i]
        row = []
        for g in gens:
            b = a * g
            j = index.get(b.vals)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded(partial_count=len(elements), cap=cap)
                index[b.vals] = j
                elements.append(b)
            row.append(j)
        if cayley is not None:
            cayley.append(tuple(row))
            if len(elements) > cayley_bound:
                cayley = None  # too large: stop recording edges
        i += 1
    if cayley is not None and len(cayley) != len(elements):
        cayley = None
    return GeneratedGroup(ring, elements, list(zip(labels, gens)), cayley)


def order_spectrum(G: GeneratedGroup) -> GroupFingerprint:
    """Element-order multiset plus abelian flag and center size.

    The abelian flag tests generator pairs only (generators commuting
    pairwise forces the whole group abelian); the center is the set of
    elements commuting with every generator.
    """
    counts: Counter[int] = Counter()
    cap = max(G.order, 1)
    for m in G.elements:
        counts[m.order(cap)] += 1
    gens = [g for _, g in G.generators]
    abelian = all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])
    center = sum(1 for z in G.elements if all(z * g == g * z for g in gens))
    return GroupFingerprint(G.order, tuple(sorted(counts.items())), abelian, center)


# ---------------------------------------------------------------------------
# recognition

def _totient(n: int) -> int:
    out = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(math.isqrt(n)) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


def cyclic_spectrum(n: int) -> tuple[tuple[int, int], ...]:
    """Order spectrum of the cyclic group C_n."""
    return tuple((d, _totient(d)) for d in _divisors(n))


def dihedral_spectrum(n: int) -> tuple[tuple[int, int], ...]:
    """Order spectrum of the dihedral group D_n of order 2n (n >= 2)."""
    counts = Counter({d: _totient(d) for d in _divisors(n)})
    counts[2] += n  # the n reflections
    return tuple(sorted(counts.items()))


# spectra verified against brute-force permutation enumeration (see tests)
RECOGNITION_TABLE: dict[str, tuple[int, tuple[tuple[int, int], ...], bool]] = {
    "S3": (6, ((1, 1), (2, 3), (3, 2)), False),
    "A4": (12, ((1, 1), (2, 3), (3, 8)), False),
    "S4": (24, ((1, 1), (2, 9), (3, 8), (4, 6)), False),
    "A5": (60, ((1, 1), (2, 15), (3, 20), (5, 24)), False),
}


def recognize(fp: GroupFingerprint) -> str:
    """Name the group by exact fingerprint match, or "unrecognized".

    Checks the named table (S3, A4, S4, A5), then cyclic groups (abelian
    with an element of full order), then dihedral groups by spectrum.
    """
    for name, (order, spectrum, abelian) in RECOGNITION_TABLE.items():
        if fp.order == order and fp.spectrum == spectrum and fp.abelian == abelian:
            return name
    if fp.abelian and any(d == fp.order for d, _ in fp.spectrum):
        if fp.spectrum == cyclic_spectrum(fp.order):
            return f"C{fp.order}"
    if fp.order % 2 == 0 and fp.order >= 4:
        n = fp.order // 2
        if fp.spectrum == dihedral_spectrum(n) and fp.abelian == (n <= 2):
            return f"D{n}"
    return "unrecognized"
