"""Regular-map reconstruction from a generated rotation group.

A finite group generated by labeled rotations (rho_v, rho_e, rho_f) acts
simply transitively on the darts (oriented flags) of a regular map, so the
darts can be identified with the group elements themselves.  With p the
order of rho_v and q the order of rho_f, the counts are

    V = |G| / p,   E = |G| / 2,   F = |G| / q,

and the genus comes from 2g - 2 = |G| - V - E - F, equivalently
2g - 2 = E (1 - 2/p - 2/q).  When rho_e fails to have order 2 (or the
counts fail to divide), the map is not defined and the report carries a
degeneracy reason instead.

Dart permutations are right multiplications by the three rotations on the
deterministic element order; their export format is one header line
``darts <n>`` followed by ``v:``, ``e:``, ``f:`` lines in disjoint-cycle
notation with 0-based darts (fixed points omitted, cycles sorted by
smallest element).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CayleyNotRetained,
    DegreeTooLarge,
    InvariantViolation,
    MissingLabel,
    NonIntegralGenus,
)
from .groupgen import GeneratedGroup, GroupFingerprint, order_spectrum, recognize

ROTATION_LABELS = ("rho_v", "rho_e", "rho_f")
EQUIVALENCE_DEGREE_BOUND = 10_000


@dataclass(frozen=True)
class RegularMapReport:
    """Combinatorial summary of one specialization."""

    p: int
    q: int
    e_order: int
    group_order: int
    V: int | None
    E: int | None
    F: int | None
    genus: int | None
    euler: int | None
    degenerate: bool
    degeneracy_reason: str | None
    fingerprint: GroupFingerprint
    recognized: str


def genus_formula(p: int, q: int, E: int) -> Fraction:
    """Exact genus g with 2g - 2 = E(1 - 2/p - 2/q)."""
    if p < 2 or q < 2 or E < 1:
        raise ValueError(f"need p, q >= 2 and E >= 1, got ({p}, {q}, {E})")
    rhs = E * (Fraction(1) - Fraction(2, p) - Fraction(2, q))
    return (rhs + 2) / 2


def genus_exact(p: int, q: int, E: int) -> int:
    """Integer genus; raises NonIntegralGenus for triples not from a group."""
    g = genus_formula(p, q, E)
    if g.denominator != 1:
        raise NonIntegralGenus(f"genus {g} for (p={p}, q={q}, E={E}) is not an integer")
    return int(g)


def _rotation_orders(G: GeneratedGroup, labels: tuple[str, str, str]) -> tuple[int, int, int]:
    orders = []
    for label in labels:
        try:
            gen = G.generator(label)
        except KeyError:
            raise MissingLabel(f"group has no generator labeled {label!r}") from None
        orders.append(gen.order(cap=max(G.order, 1)))
    return tuple(orders)  # type: ignore[return-value]


def analyze(G: GeneratedGroup,
            labels: tuple[str, str, str] = ROTATION_LABELS) -> RegularMapReport:
    """Build the map report for a group with labeled rotation generators."""
    p, e_order, q = _rotation_orders(G, labels)
    fp = order_spectrum(G)
    name = recognize(fp)
    order = G.order

    reason = None
    if e_order != 2:
        reason = f"rho_e has order {e_order}, expected 2"
    elif p < 2:
        reason = f"rho_v has order {p} < 2"
    elif q < 2:
        reason = f"rho_f has order {q} < 2"
    elif order % 2:
        reason = f"group order {order} is odd"
    elif order % p or order % q:
        reason = (f"non-integral counts: |G| = {order} not divisible by "
                  f"p = {p} or q = {q}")

    if reason is not None:
        return RegularMapReport(p, q, e_order, order, None, None, None, None,
                                None, True, reason, fp, name)

    V, E, F = order // p, order // 2, order // q
    doubled = order - V - E - F + 2  # equals 2g
    if doubled < 0 or doubled % 2:
        return RegularMapReport(p, q, e_order, order, V, E, F, None, None, True,
                                f"genus would be {Fraction(doubled, 2)}", fp, name)
    genus = doubled // 2
    if genus_formula(p, q, E) != genus:
        raise InvariantViolation(
            f"genus mismatch: counts give {genus}, formula gives {genus_formula(p, q, E)}")
    return RegularMapReport(p, q, e_order, order, V, E, F, genus, V - E + F,
                            False, None, fp, name)


# ---------------------------------------------------------------------------
# dart permutations

def _perm_cycles(perm: tuple[int, ...]) -> list[list[int]]:
    """Nontrivial cycles, each starting at its smallest element, sorted."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        j = perm[start]
        while j != start:
            cycle.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(cycle)
    return cycles


def _cycles_str(perm: tuple[int, ...]) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in _perm_cycles(perm))


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in _perm_cycles(perm)))


@dataclass(frozen=True)
class DartModel:
    """The map as three permutations of darts {0..degree-1}.

    Applying perm_v then perm_e then perm_f is the identity, mirroring the
    matrix identity rho_v * rho_e * rho_f = I.
    """

    degree: int
    perm_v: tuple[int, ...]
    perm_e: tuple[int, ...]
    perm_f: tuple[int, ...]

    def perms(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return (self.perm_v, self.perm_e, self.perm_f)

    def to_text(self) -> str:
        lines = [f"darts {self.degree}"]
        for name, perm in zip("vef", self.perms()):
            cyc = _cycles_str(perm)
            lines.append(f"{name}: {cyc}" if cyc else f"{name}:")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> DartModel:
        lines = text.strip("\n").split("\n")
        header = lines[0].split()
        if len(lines) != 4 or header[0] != "darts" or len(header) != 2:
            raise ValueError("bad dart-model text")
        degree = int(header[1])
        perms = []
        for name, line in zip("vef", lines[1:]):
            prefix = f"{name}:"
            if not line.startswith(prefix):
                raise ValueError(f"expected line starting with {prefix!r}")
            perm = list(range(degree))
            for cycle_text in re.findall(r"\(([0-9 ]+)\)", line[len(prefix):]):
                cycle = [int(tok) for tok in cycle_text.split()]
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    perm[a] = b
            perms.append(tuple(perm))
        return cls(degree, *perms)


def _transitive(perms, degree: int) -> bool:
    seen = [False] * degree
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        a = stack.pop()
        for perm in perms:
            b = perm[a]
            if not seen[b]:
                seen[b] = True
                count += 1
                stack.append(b)
    return count == degree


def dart_model(G: GeneratedGroup,
               labels: tuple[str, str, str] = ROTATION_LABELS) -> DartModel:
    """Dart permutations by right multiplication on the element order.

    Requires Cayley edges (groups within the retention bound).  The model
    invariants are checked before returning; a failure there is a bug trap,
    not a user error.
    """
    if G.cayley is None:
        raise CayleyNotRetained(
            f"Cayley edges not retained for group of order {G.order}")
    gen_labels = [name for name, _ in G.generators]
    perms = []
    for label in labels:
        if label not in gen_labels:
            raise MissingLabel(f"group has no generator labeled {label!r}")
        col = gen_labels.index(label)
        perms.append(tuple(row[col] for row in G.cayley))
    model = DartModel(G.order, *perms)

    pv, pe, pf = model.perms()
    n = model.degree
    if any(pf[pe[pv[i]]] != i for i in range(n)):
        raise InvariantViolation("dart permutations do not compose to the identity")
    if any(pe[pe[i]] != i for i in range(n)):
        raise InvariantViolation("rho_e dart permutation is not an involution")
    if pe != tuple(range(n)) and any(pe[i] == i for i in range(n)):
        raise InvariantViolation("rho_e dart involution has fixed points")
    if not _transitive(model.perms(), n):
        raise InvariantViolation("dart action is not transitive")
    return model


def maps_equivalent(a: DartModel, b: DartModel) -> bool:
    """Whether some dart bijection conjugates a's permutations to b's.

    The action is regular, so a candidate bijection is determined by the
    image of dart 0; each candidate is extended along the action and
    rejected at the first inconsistency.
    """
    if a.degree > EQUIVALENCE_DEGREE_BOUND or b.degree > EQUIVALENCE_DEGREE_BOUND:
        raise DegreeTooLarge(
            f"equivalence search capped at degree {EQUIVALENCE_DEGREE_BOUND}")
    if a.degree != b.degree:
        return False
    pa = a.perms()
    pb = b.perms()
    if any(_cycle_type(x) != _cycle_type(y) for x, y in zip(pa, pb)):
        return False
    n = a.degree
    for image in range(n):
        phi = [-1] * n
        phi[0] = image
        used = [False] * n
        used[image] = True
        stack = [0]
        ok = True
        while stack and ok:
            s = stack.pop()
            for qa, qb in zip(pa, pb):
                ta, tb = qa[s], qb[phi[s]]
                if phi[ta] == -1:
                    if used[tb]:
                        ok = False
                        break
                    phi[ta] = tb
                    used[tb] = True
                    stack.append(ta)
                elif phi[ta] != tb:
                    ok = False
                    break
        if ok and all(v >= 0 for v in phi):
            return True
    return False
