"""Exact cyclotomic products, Poincare series and characteristic polynomials.

The shared currency is the signed product prod_m (1 - t^m)^{e(m)}, stored as
the map m -> e(m) (:class:`CycloVector`).  Multiplication is entrywise
addition of exponents, equality is map equality, and the (virtual) degree is
sum m*e(m).  Characteristic polynomials of group sectors are recovered from
integer monodromy traces by Moebius inversion; everything stays in exact
integer / rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    LGMirrorError,
    MoebiusInconsistent,
    NonIntegralTrace,
    NotASubgroup,
    NotGraded,
    NotPolynomial,
    NotSL,
)
from .ip_core import InvertiblePolynomial, canonical_weights, cf, classify3, reduced_weights, transpose
from .curve_side import dolgachev, genus
from .symmetry import (
    DiagonalGroup,
    dual_group,
    g0_group,
    gfin,
    is_sl_subgroup,
    is_symmetry,
)

__all__ = [
    "CycloVector",
    "ExponentList",
    "LefschetzTable",
    "PoincareVerdict",
    "cyclo_mul",
    "cyclo_div",
    "cyclo_eq",
    "cyclo_degree",
    "cyclo_expand",
    "poincare_series",
    "psi",
    "psi_closed_form",
    "lefschetz_numbers",
    "equivariant_char_poly",
    "char_poly_qh",
    "verify_poincare_theorem",
]


# ---------------------------------------------------------------------------
# number-theoretic helpers

def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _moebius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _euler_phi(n: int) -> int:
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _ramanujan(m: int, k: int) -> int:
    """Sum of k-th powers of the primitive m-th roots of unity."""
    g = gcd(k, m)
    mg = m // g
    mu = _moebius(mg)
    if mu == 0:
        return 0
    return mu * (_euler_phi(m) // _euler_phi(mg))


# ---------------------------------------------------------------------------
# cyclotomic vectors

@dataclass(frozen=True)
class CycloVector:
    """prod_m (1 - t^m)^{e(m)} stored as sorted (m, e) pairs with e != 0."""

    items: tuple[tuple[int, int], ...]

    @classmethod
    def from_entries(cls, entries) -> "CycloVector":
        merged: dict[int, int] = {}
        pairs = entries.items() if isinstance(entries, dict) else entries
        for m, e in pairs:
            if m < 1:
                raise LGMirrorError(f"cyclotomic index {m} must be positive")
            merged[m] = merged.get(m, 0) + e
        return cls(tuple(sorted((m, e) for m, e in merged.items() if e != 0)))

    @classmethod
    def one(cls) -> "CycloVector":
        return cls(())

    @property
    def entries(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def degree(self) -> int:
        return sum(m * e for m, e in self.items)

    def __mul__(self, other: "CycloVector") -> "CycloVector":
        return CycloVector.from_entries(list(self.items) + list(other.items))

    def __truediv__(self, other: "CycloVector") -> "CycloVector":
        return CycloVector.from_entries(
            list(self.items) + [(m, -e) for m, e in other.items])

    def to_json(self) -> dict[str, int]:
        return {str(m): e for m, e in self.items}

    def __str__(self):
        if not self.items:
            return "1"
        num = [f"(1-t^{m})" + (f"^{e}" if e > 1 else "")
               for m, e in self.items if e > 0]
        den = [f"(1-t^{m})" + (f"^{-e}" if e < -1 else "")
               for m, e in self.items if e < 0]
        text = "".join(num) or "1"
        return text + (" / " + "".join(den) if den else "")


def cyclo_mul(a: CycloVector, b: CycloVector) -> CycloVector:
    return a * b


def cyclo_div(a: CycloVector, b: CycloVector) -> CycloVector:
    return a / b


def cyclo_eq(a: CycloVector, b: CycloVector) -> bool:
    return a.items == b.items


def cyclo_degree(v: CycloVector) -> int:
    return v.degree


def _poly_mul_one_minus_tm(coeffs: list[int], m: int) -> list[int]:
    out = coeffs + [0] * m
    for j in range(len(coeffs)):
        out[j + m] -= coeffs[j]
    return out


def _poly_div_one_minus_tm(coeffs: list[int], m: int) -> list[int]:
    # (1 - t^m) * Q = P  =>  q_j = p_j + q_{j-m}; the top m coefficients of
    # the running quotient must vanish for the division to be exact.
    q = list(coeffs)
    for j in range(m, len(q)):
        q[j] += q[j - m]
    if any(q[j] != 0 for j in range(max(0, len(q) - m), len(q))):
        raise NotPolynomial(f"division by (1 - t^{m}) is inexact")
    return q[: max(0, len(q) - m)] or [0]


def cyclo_expand(v: CycloVector) -> tuple[int, ...]:
    """Exact integer coefficients of prod (1-t^m)^{e(m)}; NotPolynomial otherwise."""
    coeffs = [1]
    for m, e in v.items:
        for _ in range(max(e, 0)):
            coeffs = _poly_mul_one_minus_tm(coeffs, m)
    for m, e in v.items:
        for _ in range(max(-e, 0)):
            coeffs = _poly_div_one_minus_tm(coeffs, m)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# Poincare series and psi

def poincare_series(f: InvertiblePolynomial, G: DiagonalGroup) -> CycloVector:
    """(1-t^{d/c}) / prod_i (1-t^{w_i/c}) with c = |G^fin/G|."""
    ws = canonical_weights(f)
    order_fin = gfin(f).order
    if order_fin % G.order != 0:
        raise NotASubgroup("group order does not divide |G^fin|")
    c = order_fin // G.order
    if ws.d % c != 0 or any(w % c != 0 for w in ws.w):
        raise NotGraded(f"index {c} does not divide the weight system {ws}")
    entries = [(ws.d // c, 1)] + [(w // c, -1) for w in ws.w]
    return CycloVector.from_entries(entries)


def psi(f: InvertiblePolynomial, G: DiagonalGroup) -> CycloVector:
    """Poincare series times (1-t)^{2-2g} prod_alpha (1-t^alpha)/(1-t)."""
    p = poincare_series(f, G)
    g = genus(f, G)
    A = dolgachev(f, G).multiset
    extra = [(1, 2 - 2 * g - len(A))] + [(a, 1) for a in A]
    return p * CycloVector.from_entries(extra)


def _exact(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise LGMirrorError(f"internal: {a} not divisible by {b}")
    return q


def psi_closed_form(f: InvertiblePolynomial) -> CycloVector:
    """Closed form of psi(f, G_0) per classification type.

    Instantiates the per-type product with c = cf, the pairwise gcd
    parameters, and g = genus(f, G_0); an independent fixture generator for
    :func:`psi`.
    """
    tag = classify3(f)
    c = cf(f)
    g = genus(f, g0_group(f))
    num: list[tuple[int, int]] = []
    den: list[tuple[int, int]] = []
    if tag.tag == "I":
        p1, p2, p3 = tag.params
        c1, c2, c3 = gcd(p2, p3), gcd(p1, p3), gcd(p1, p2)
        num = [(_exact(p1 * c1, c), c1), (_exact(p2 * c2, c), c2),
               (_exact(p3 * c3, c), c3), (_exact(p1 * p2 * p3, c), 1)]
        den = [(1, c1 + c2 + c3 - 2 + 2 * g), (_exact(p2 * p3, c), 1),
               (_exact(p3 * p1, c), 1), (_exact(p1 * p2, c), 1)]
    elif tag.tag == "II":
        p1, p2, p3 = tag.params
        c1, c2 = gcd(p3 // p2, p2 - 1), gcd(p1, p2)
        num = [(_exact(p1 * c1, c), c1), (_exact(p3 * c2, p2 * c), c2),
               (_exact(p1 * p3, c), 1)]
        den = [(1, c1 + c2 - 1 + 2 * g), (_exact(p3, c), 1),
               (_exact(p1 * p3, p2 * c), 1)]
    elif tag.tag == "III":
        p1, q2, q3 = tag.params
        p2 = q2 * q3 + q2 + q3
        c1 = gcd(q2, q3)
        num = [(_exact(p1 * c1, c), c1), (_exact(p1 * p2, c), 1)]
        den = [(1, c1 + 2 * g), (_exact(p2, c), 1)]
    elif tag.tag == "IV":
        p1, p2, p3 = tag.params
        c1 = gcd(p2 // p1, p1 - 1)
        num = [(_exact(p3 * c1, p2 * c), c1), (_exact(p3, c), 1)]
        den = [(1, c1 + 2 * g), (_exact(p3, p1 * c), 1)]
    else:  # V
        q1, q2, q3 = tag.params
        num = [(_exact(q1 * q2 * q3 + 1, c), 1)]
        den = [(1, 1 + 2 * g)]
    return CycloVector.from_entries(num + [(m, -e) for m, e in den])


# ---------------------------------------------------------------------------
# monodromy traces and characteristic polynomials

@dataclass(frozen=True)
class ExponentList:
    """Multiset of monodromy exponents q (eigenvalues e[q]), denominators | d-tilde."""

    exponents: tuple[Fraction, ...]

    @property
    def count(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class LefschetzTable:
    """Integer traces L_k of the k-th monodromy power, k = 1..modulus."""

    values: tuple[int, ...]
    modulus: int

    def __getitem__(self, k: int) -> int:
        if k < 1:
            raise KeyError(k)
        return self.values[(k - 1) % self.modulus]


def lefschetz_numbers(f: InvertiblePolynomial, G: DiagonalGroup) -> LefschetzTable:
    """Sector-summed monodromy traces of the pair (f, G), G inside SL.

    L_k = sum_g (-1)^{n_g+1} (1/|G|) sum_h prod_{i in Fix(g)}
          ( [phase_i(h) + k q_i in Z] / q_i  -  1 ),
    exact rationals throughout; every L_k is asserted integral.
    """
    if G.context != f:
        raise NotASubgroup("group context does not match the polynomial")
    for g in G.generators:
        if not is_symmetry(f, g):
            raise NotASubgroup(f"{g} is not a symmetry of the polynomial")
    if not is_sl_subgroup(G):
        raise NotSL("trace formula needs G inside SL_n")
    ws = reduced_weights(f)
    wt, dt = ws.w, ws.d
    d = canonical_weights(f).d
    scale = d // dt
    # phases scaled to numerators mod d
    scaled = [tuple(int(p * d) for p in h.phases) for h in G.elements]
    fixes = [tuple(i for i, p in enumerate(g.phases) if p == 0) for g in G.elements]
    order = G.order
    values = []
    for k in range(1, dt + 1):
        kq = [(k * wi * scale) % d for wi in wt]
        total = Fraction(0)
        for fix in fixes:
            sign = -1 if len(fix) % 2 == 0 else 1
            inner = Fraction(0)
            for nums in scaled:
                num, den = 1, 1
                for i in fix:
                    if (nums[i] + kq[i]) % d == 0:
                        num *= dt - wt[i]
                        den *= wt[i]
                    else:
                        num = -num
                inner += Fraction(num, den)
            total += sign * inner
        total /= order
        if total.denominator != 1:
            raise NonIntegralTrace(f"L_{k} = {total} is not an integer")
        values.append(int(total))
    return LefschetzTable(values=tuple(values), modulus=dt)


def _invert_traces(table: LefschetzTable) -> CycloVector:
    """Recover e(m) from traces: m e(m) = sum_{k|m} mu(m/k) L_k, m | modulus."""
    dt = table.modulus
    e: dict[int, int] = {}
    for m in _divisors(dt):
        s = sum(_moebius(m // k) * table[k] for k in _divisors(m))
        q, r = divmod(s, m)
        if r:
            raise MoebiusInconsistent(f"m*e(m) = {s} not divisible by m = {m}")
        if q:
            e[m] = q
    for k in range(1, dt + 1):
        recon = sum(m * em for m, em in e.items() if k % m == 0)
        if recon != table[k]:
            raise MoebiusInconsistent(
                f"trace reconstruction failed at k={k}: {recon} != {table[k]}")
    return CycloVector.from_entries(e)


def equivariant_char_poly(f: InvertiblePolynomial, G: DiagonalGroup) -> CycloVector:
    """Signed product over group sectors of monodromy characteristic polynomials."""
    return _invert_traces(lefschetz_numbers(f, G))


def char_poly_qh(f: InvertiblePolynomial) -> tuple[ExponentList, CycloVector]:
    """Monodromy exponents and characteristic polynomial of weighted
    homogeneous f, by direct expansion of prod_i (u^{w_i} - u^{d}) / (1 - u^{w_i})
    over the reduced weights.

    The cyclotomic form is recovered from the exponent multiset through the
    integer trace sums L_k = sum_q e[k q] and Moebius inversion, a route fully
    independent of :func:`lefschetz_numbers`.
    """
    ws = reduced_weights(f)
    wt, dt = ws.w, ws.d
    coeffs = [1]
    for w in wt:
        factor = [0] * (dt + 1)
        factor[w] += 1
        factor[dt] -= 1
        coeffs = _poly_mul(coeffs, factor)
    for w in wt:
        coeffs = _poly_div_one_minus_tm(coeffs, w)
    if any(c < 0 for c in coeffs):
        raise NotPolynomial("expansion produced negative multiplicities")
    exponents = []
    residue_counts = [0] * dt
    for a, c in enumerate(coeffs):
        if c:
            exponents.extend([Fraction(a, dt)] * c)
            residue_counts[a % dt] += c
    # eigenvalue multiplicities must be constant on classes of equal order
    # (integer characteristic polynomial), which licenses Ramanujan sums
    class_count: dict[int, int] = {}
    for r in range(dt):
        g = gcd(r, dt)
        if g in class_count:
            if class_count[g] != residue_counts[r]:
                raise NonIntegralTrace(
                    "eigenvalue multiplicities are not Galois-stable")
        else:
            class_count[g] = residue_counts[r]
    traces = []
    for k in range(1, dt + 1):
        traces.append(sum(
            count * _ramanujan(dt // g, k) for g, count in class_count.items()))
    table = LefschetzTable(values=tuple(traces), modulus=dt)
    vec = _invert_traces(table)
    if vec.degree != len(exponents):
        raise MoebiusInconsistent(
            f"degree {vec.degree} != exponent count {len(exponents)}")
    return ExponentList(exponents=tuple(sorted(exponents))), vec


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# the Poincare series identity

@dataclass(frozen=True)
class PoincareVerdict:
    status: str  # "equal" | "not_equal" | "not_applicable"
    reason: str | None
    psi: CycloVector | None
    phi: CycloVector | None

    @property
    def applicable(self) -> bool:
        return self.status != "not_applicable"

    @property
    def equal(self) -> bool:
        return self.status == "equal"


def verify_poincare_theorem(f: InvertiblePolynomial) -> PoincareVerdict:
    """Compare psi(f, G_0) with the equivariant characteristic polynomial of
    the dual pair, when cf(f) = cf(f^T) and the genus vanishes."""
    ft = transpose(f)
    if cf(f) != cf(ft):
        return PoincareVerdict(
            status="not_applicable",
            reason=f"cf(f) = {cf(f)} != cf(f^T) = {cf(ft)}", psi=None, phi=None)
    G0 = g0_group(f)
    g = genus(f, G0)
    if g != 0:
        return PoincareVerdict(
            status="not_applicable", reason=f"genus = {g} != 0", psi=None, phi=None)
    left = psi(f, G0)
    right = equivariant_char_poly(ft, dual_group(f, G0))
    status = "equal" if cyclo_eq(left, right) else "not_equal"
    return PoincareVerdict(status=status, reason=None, psi=left, phi=right)
