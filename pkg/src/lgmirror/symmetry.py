"""Finite diagonal symmetry groups of invertible polynomials.

A diagonal symmetry is stored as its vector of phases: ``g`` acts on
coordinate i by multiplication with e[phase_i] where e[x] = exp(2 pi i x).
Membership in the maximal group of diagonal symmetries is the exact
integrality test E . phases in Z^n; the dual-group pairing is evaluated
through integer coordinate vectors.  Groups enumerate their elements
eagerly, in lexicographic order, and are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import NotASubgroup, NotASymmetry, NotInvertible
from .ip_core import InvertiblePolynomial, canonical_weights, det, inverse_rows, transpose

__all__ = [
    "PhaseVector",
    "DiagonalGroup",
    "AgeReport",
    "phase_vector",
    "gfin",
    "g0",
    "g0_group",
    "is_symmetry",
    "trivial_group",
    "group_from_generators",
    "dual_group",
    "age_and_fix",
    "junior_count",
    "subgroup_fixing_coordinate",
    "in_sl",
    "is_sl_subgroup",
    "contains_g0",
    "subgroups_containing_g0",
    "parse_group_spec",
    "format_group",
]


@dataclass(frozen=True, order=True)
class PhaseVector:
    """Phases (each in [0,1)) of a diagonal map diag(e[p_1], ..., e[p_n])."""

    phases: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash(self.phases))

    def __add__(self, other: "PhaseVector") -> "PhaseVector":
        return PhaseVector(tuple((a + b) % 1 for a, b in zip(self.phases, other.phases)))

    def __neg__(self) -> "PhaseVector":
        return PhaseVector(tuple((-a) % 1 for a in self.phases))

    def is_identity(self) -> bool:
        return all(p == 0 for p in self.phases)

    def order(self) -> int:
        """Multiplicative order: lcm of the phase denominators."""
        r = 1
        for p in self.phases:
            r = r * p.denominator // gcd(r, p.denominator)
        return r

    def __str__(self):
        return "(" + ", ".join(str(p) for p in self.phases) + ")"


PhaseVector.__hash__ = lambda self: self._hash


def phase_vector(values) -> PhaseVector:
    """Build a phase vector, reducing every entry mod 1."""
    return PhaseVector(tuple(Fraction(v) % 1 for v in values))


@dataclass(frozen=True)
class DiagonalGroup:
    """A finite group of diagonal symmetries of ``context``.

    ``elements`` is the full closure, sorted lexicographically by phase
    tuples; ``order`` = len(elements).
    """

    context: InvertiblePolynomial
    generators: tuple[PhaseVector, ...]
    elements: tuple[PhaseVector, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(
            self, "_hash", hash((self.context, self.generators, self.elements)))

    def __contains__(self, g: PhaseVector) -> bool:
        return g in _element_set(self)

    def __str__(self):
        return format_group(self)


DiagonalGroup.__hash__ = lambda self: self._hash


@lru_cache(maxsize=None)
def _element_set(G: DiagonalGroup) -> frozenset:
    return frozenset(G.elements)


@dataclass(frozen=True)
class AgeReport:
    age: Fraction
    nfix: int
    fixed: frozenset[int]


# ---------------------------------------------------------------------------
# scaled-integer closure helpers (phases times d, arithmetic mod d)

def _scale(g: PhaseVector, d: int) -> tuple[int, ...]:
    out = []
    for p in g.phases:
        q, r = divmod(d, p.denominator)
        if r:
            raise NotASymmetry(f"phase {p} has denominator not dividing {d}")
        out.append(p.numerator * q)
    return tuple(out)


def _unscale(t: tuple[int, ...], d: int) -> PhaseVector:
    return PhaseVector(tuple(Fraction(a, d) for a in t))


def _closure_ints(gens: list[tuple[int, ...]], d: int, n: int) -> list[tuple[int, ...]]:
    zero = (0,) * n
    elements = {zero}
    frontier = [zero]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % d for a, b in zip(x, g))
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return sorted(elements)


def _make_group(f: InvertiblePolynomial, gens: list[PhaseVector]) -> DiagonalGroup:
    d = abs(det(f))
    scaled = [_scale(g, d) for g in gens]
    elements = tuple(_unscale(t, d) for t in _closure_ints(scaled, d, f.n))
    return DiagonalGroup(
        context=f, generators=tuple(gens), elements=elements, order=len(elements))


# ---------------------------------------------------------------------------
# construction of the standard groups

def is_symmetry(f: InvertiblePolynomial, g: PhaseVector) -> bool:
    """Membership in the maximal diagonal symmetry group: E . phases in Z^n."""
    return all(
        sum(e * p for e, p in zip(row, g.phases)).denominator == 1
        for row in f.E)


@lru_cache(maxsize=None)
def gfin(f: InvertiblePolynomial) -> DiagonalGroup:
    """Maximal group of diagonal symmetries, generated by the columns of E^{-1}.

    (The rows of E^{-1} generate the symmetry group of the transpose.)
    """
    gens = [phase_vector(col) for col in zip(*inverse_rows(f))]
    for g in gens:
        if not is_symmetry(f, g):
            raise NotInvertible(f"generator {g} is not a symmetry; bad matrix?")
    G = _make_group(f, gens)
    if G.order != abs(det(f)):
        raise NotInvertible(
            f"symmetry group order {G.order} != |det E| = {abs(det(f))}")
    return G


@lru_cache(maxsize=None)
def g0(f: InvertiblePolynomial) -> PhaseVector:
    """Exponential grading operator: phases (q_1, ..., q_n) mod 1."""
    return phase_vector(canonical_weights(f).q)


def trivial_group(f: InvertiblePolynomial) -> DiagonalGroup:
    return _make_group(f, [])


def group_from_generators(context: InvertiblePolynomial, gens) -> DiagonalGroup:
    """Closure of the given phase vectors inside the symmetry group of ``context``."""
    gens = [g if isinstance(g, PhaseVector) else phase_vector(g) for g in gens]
    for g in gens:
        if not is_symmetry(context, g):
            raise NotASymmetry(f"{g} does not leave every monomial invariant")
    return _make_group(context, gens)


@lru_cache(maxsize=None)
def g0_group(f: InvertiblePolynomial) -> DiagonalGroup:
    """The cyclic group generated by the exponential grading operator."""
    return _make_group(f, [g0(f)])


# ---------------------------------------------------------------------------
# duality

@lru_cache(maxsize=None)
def dual_group(f: InvertiblePolynomial, G: DiagonalGroup) -> DiagonalGroup:
    """Krawitz dual: the subgroup of the transpose's symmetries pairing
    integrally with every generator of G.

    For u in the transpose's symmetry group and a generator v of G the
    pairing is sum_i phases(u)_i * s_i with the integer vector s = E . v.
    """
    if G.context != f:
        raise NotASubgroup("group context does not match the polynomial")
    for g in G.generators:
        if not is_symmetry(f, g):
            raise NotASubgroup(f"{g} is not a diagonal symmetry of the polynomial")
    ft = transpose(f)
    d = abs(det(f))
    svecs = []
    for v in G.generators:
        svecs.append(tuple(
            int(sum(e * p for e, p in zip(row, v.phases))) for row in f.E))
    kept = []
    for u in gfin(ft).elements:
        nums = _scale(u, d)
        if all(sum(a * s for a, s in zip(nums, sv)) % d == 0 for sv in svecs):
            kept.append(u)
    return DiagonalGroup(
        context=ft, generators=tuple(kept), elements=tuple(kept), order=len(kept))


# ---------------------------------------------------------------------------
# ages, fixed loci, junior elements

def age_and_fix(g: PhaseVector) -> AgeReport:
    """Age = sum of phases taken in [0,1); fixed coordinates have phase 0."""
    fixed = frozenset(i for i, p in enumerate(g.phases) if p == 0)
    return AgeReport(age=sum(g.phases, Fraction(0)), nfix=len(fixed), fixed=fixed)


def junior_count(G: DiagonalGroup) -> int:
    """Number of elements of age exactly 1 fixing only the origin."""
    count = 0
    for g in G.elements:
        if all(p != 0 for p in g.phases) and sum(g.phases) == 1:
            count += 1
    return count


def subgroup_fixing_coordinate(G: DiagonalGroup, i: int) -> DiagonalGroup:
    """Maximal subgroup of G whose elements have phase 0 at coordinate i."""
    kept = tuple(g for g in G.elements if g.phases[i] == 0)
    return DiagonalGroup(
        context=G.context, generators=kept, elements=kept, order=len(kept))


def in_sl(g: PhaseVector) -> bool:
    """Determinant 1: the phases sum to an integer."""
    return sum(g.phases).denominator == 1


def is_sl_subgroup(G: DiagonalGroup) -> bool:
    return all(in_sl(g) for g in G.generators)


def contains_g0(G: DiagonalGroup) -> bool:
    return g0(G.context) in _element_set(G)


# ---------------------------------------------------------------------------
# subgroup enumeration for the verification harness

@lru_cache(maxsize=None)
def subgroups_containing_g0(f: InvertiblePolynomial) -> tuple[DiagonalGroup, ...]:
    """All subgroups G with G_0 <= G <= G^fin, in deterministic order.

    Works in the finite abelian quotient G^fin/G_0 (order cf, small at desk
    scale): walks its subgroup lattice upward by adjoining cosets and closing,
    deduplicating by element set, then pulls each subgroup back.
    """
    d = abs(det(f))
    n = f.n
    g0set = frozenset(_closure_ints([_scale(g0(f), d)], d, n))
    rep_cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    def rep(x):
        if x not in rep_cache:
            r = min(tuple((a + b) % d for a, b in zip(x, s)) for s in g0set)
            for s in g0set:
                rep_cache[tuple((a + b) % d for a, b in zip(x, s))] = r
        return rep_cache[x]

    reps = sorted({rep(_scale(g, d)) for g in gfin(f).elements})
    zero_rep = rep((0,) * n)

    def q_add(a, b):
        return rep(tuple((x + y) % d for x, y in zip(a, b)))

    def q_closure(gens):
        elements = {zero_rep}
        frontier = [zero_rep]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = q_add(x, g)
                    if y not in elements:
                        elements.add(y)
                        new.append(y)
            frontier = new
        return frozenset(elements)

    base = frozenset({zero_rep})
    found: dict[frozenset, list] = {base: []}
    frontier = [base]
    while frontier:
        new = []
        for S in frontier:
            for x in reps:
                if x in S:
                    continue
                T = q_closure(found[S] + [x])
                if T not in found:
                    found[T] = found[S] + [x]
                    new.append(T)
        frontier = new
    groups = []
    for S in sorted(found, key=lambda s: (len(s), sorted(s))):
        elements = sorted(
            tuple((a + b) % d for a, b in zip(r, s))
            for r in S for s in g0set)
        gens = [g0(f)] + [_unscale(t, d) for t in found[S]]
        groups.append(DiagonalGroup(
            context=f, generators=tuple(gens),
            elements=tuple(_unscale(t, d) for t in elements),
            order=len(elements)))
    return tuple(groups)


# ---------------------------------------------------------------------------
# group literals

def parse_group_spec(f: InvertiblePolynomial, spec: str) -> DiagonalGroup:
    """Parse a group literal relative to ``f``.

    Accepted forms: ``G0``, ``Gfin``, ``trivial`` (or ``1``),
    ``index:<k>`` (the unique subgroup of index k in G^fin containing G_0),
    and explicit generators ``1/r(a,b,c)`` joined by ``;``.
    """
    spec = spec.strip()
    if spec in ("G0", "g0"):
        return g0_group(f)
    if spec in ("Gfin", "gfin", "GFIN"):
        return gfin(f)
    if spec in ("trivial", "1", "{1}"):
        return trivial_group(f)
    if spec.startswith("index:"):
        k = int(spec.split(":", 1)[1])
        d = abs(det(f))
        matches = [G for G in subgroups_containing_g0(f) if d == k * G.order]
        if len(matches) != 1:
            raise NotASubgroup(
                f"index {k}: found {len(matches)} subgroups, need exactly 1")
        return matches[0]
    gens = []
    for part in spec.split(";"):
        part = part.strip()
        m = _GROUP_RE.fullmatch(part)
        if not m:
            raise NotASymmetry(f"cannot parse group literal {part!r}")
        r = int(m.group(1))
        nums = [int(x) for x in m.group(2).split(",")]
        if len(nums) != f.n or r <= 0:
            raise NotASymmetry(f"bad generator {part!r}")
        gens.append(phase_vector(Fraction(a, r) for a in nums))
    return group_from_generators(f, gens)


_GROUP_RE = re.compile(r"1\s*/\s*(\d+)\s*\(\s*([-\d\s,]+)\s*\)")


def format_group(G: DiagonalGroup) -> str:
    """Render a group as its generator list in 1/r(a,b,c) notation."""
    if G.order == 1:
        return "trivial"
    parts = []
    for g in _minimal_generators(G):
        r = 1
        for p in g.phases:
            r = r * p.denominator // gcd(r, p.denominator)
        nums = ",".join(str(int(p * r)) for p in g.phases)
        parts.append(f"1/{r}({nums})")
    return ";".join(parts)


def _minimal_generators(G: DiagonalGroup) -> list[PhaseVector]:
    """Greedy small generating set, for readable output only."""
    d = abs(det(G.context))
    target = {_scale(g, d) for g in G.elements}
    gens: list[tuple[int, ...]] = []
    have = {(0,) * G.context.n}
    for g, t in sorted(((g, _scale(g, d)) for g in G.elements),
                       key=lambda pair: (-pair[0].order(), pair[1])):
        if t not in have:
            gens.append(t)
            have = set(_closure_ints(gens, d, G.context.n))
            if have == target:
                break
    return [_unscale(t, d) for t in gens]
