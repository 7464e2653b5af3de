"""Truncated formal power series over the enveloping algebra and its
tensor square/cube.

A :class:`GradedSeries` stores, per hbar-degree d in 0..N, a sparse element
of U(g) (rank 1) or of a tensor power (rank 2, 3) with exact Gaussian
rational coefficients.  The grading comes entirely from the specialization
of the formal parameters (each deformation parameter contributes degree 1);
generators themselves carry no degree.  Arithmetic never consults degrees
beyond the truncation order.

Series composition (exp, log1p, sqrt1p, arctan, geometric inverse) is plain
Maclaurin composition on arguments of positive valuation, with exact
rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .lie import LieElement
from .scalars import (
    GaussianRational,
    NonPolynomialSpecialization,
    Scalar,
    SpecializationMap,
    specialize_laurent,
)
from .uea import PBWContext, UNIT


class GradingError(Exception):
    """A series operation would create terms of negative hbar-degree, or an
    exponential argument fails the positive-valuation requirement."""


class GradedSeries:
    """Degree-indexed truncated series of (tensor) enveloping elements."""

    __slots__ = ("ctx", "rank", "order", "data")

    def __init__(self, ctx: PBWContext, rank: int, order: int, data: dict | None = None):
        if rank not in (1, 2, 3):
            raise ValueError("rank must be 1, 2 or 3")
        self.ctx = ctx
        self.rank = rank
        self.order = order
        self.data = {}
        if data:
            for d, el in data.items():
                if d < 0:
                    raise GradingError(f"negative degree {d} in series")
                if d <= order and el:
                    self.data[d] = dict(el)

    # -- constructors --------------------------------------------------------
    @staticmethod
    def unit(ctx: PBWContext, rank: int, order: int) -> "GradedSeries":
        key = {1: UNIT, 2: (UNIT, UNIT), 3: (UNIT, UNIT, UNIT)}[rank]
        return GradedSeries(ctx, rank, order, {0: {key: ctx.domain.one}})

    @staticmethod
    def zero(ctx: PBWContext, rank: int, order: int) -> "GradedSeries":
        return GradedSeries(ctx, rank, order, {})

    # -- structure -------------------------------------------------------------
    def degree_part(self, d: int) -> dict:
        return self.data.get(d, {})

    def valuation(self):
        if not self.data:
            return None
        return min(self.data)

    def is_zero(self) -> bool:
        return not self.data

    def truncate(self, order: int) -> "GradedSeries":
        return GradedSeries(self.ctx, self.rank, order,
                            {d: el for d, el in self.data.items() if d <= order})

    def _join(self, other: "GradedSeries") -> int:
        if self.ctx is not other.ctx or self.rank != other.rank:
            raise GradingError("series over different contexts or ranks")
        return min(self.order, other.order)

    # -- linear operations --------------------------------------------------------
    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        order = self._join(other)
        out = {}
        for d in set(self.data) | set(other.data):
            if d > order:
                continue
            el = self.ctx.tensor_add(self.degree_part(d), other.degree_part(d))
            if el:
                out[d] = el
        return GradedSeries(self.ctx, self.rank, order, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return GradedSeries(self.ctx, self.rank, self.order,
                            {d: {t: -c for t, c in el.items()}
                             for d, el in self.data.items()})

    def scale(self, c: GaussianRational) -> "GradedSeries":
        if not c:
            return GradedSeries.zero(self.ctx, self.rank, self.order)
        return GradedSeries(self.ctx, self.rank, self.order,
                            {d: {t: v * c for t, v in el.items()}
                             for d, el in self.data.items()})

    def scale_laurent(self, laurent: dict) -> "GradedSeries":
        """Multiply by a Laurent polynomial in hbar {degree: constant}.

        Degrees may be negative (coefficients like a ratio of parameters of
        unequal degree); the result must stay in nonnegative degrees.
        """
        out: dict = {}
        for shift, c in laurent.items():
            if not c:
                continue
            for d, el in self.data.items():
                nd = d + shift
                if nd < 0:
                    raise GradingError(
                        f"scaling sends degree {d} to {nd} < 0")
                if nd > self.order:
                    continue
                cur = out.get(nd, {})
                out[nd] = self.ctx.tensor_add(cur,
                                              {t: v * c for t, v in el.items()})
        out = {d: el for d, el in out.items() if el}
        return GradedSeries(self.ctx, self.rank, self.order, out)

    # -- multiplicative structure ----------------------------------------------
    def __mul__(self, other):
        if isinstance(other, GradedSeries):
            order = self._join(other)
            out: dict = {}
            for d1, e1 in self.data.items():
                for d2, e2 in other.data.items():
                    d = d1 + d2
                    if d > order:
                        continue
                    prod = (self.ctx.mul(e1, e2) if self.rank == 1
                            else self.ctx.tensor_mul(e1, e2, self.rank))
                    cur = out.get(d)
                    out[d] = prod if cur is None else self.ctx.tensor_add(cur, prod)
            out = {d: el for d, el in out.items() if el}
            return GradedSeries(self.ctx, self.rank, order, out)
        if isinstance(other, GaussianRational):
            return self.scale(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(GaussianRational(other))
        return NotImplemented

    __rmul__ = __mul__

    def power(self, k: int, order: int | None = None) -> "GradedSeries":
        order = self.order if order is None else order
        out = GradedSeries.unit(self.ctx, self.rank, order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        order = self._join(other)
        for d in range(order + 1):
            if not self.ctx.equal(self.degree_part(d), other.degree_part(d)):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        if not self.data:
            return "O(h^inf)"
        bits = []
        for d in sorted(self.data):
            bits.append(f"h^{d}*[{self.ctx.pretty(self.data[d], tensor=self.rank > 1)}]")
        return " + ".join(bits) + f" + O(h^{self.order + 1})"


# ---------------------------------------------------------------------------
# Maclaurin series functions
# ---------------------------------------------------------------------------

def _coeffs_exp(n):
    return [GaussianRational(Fraction(1, factorial(k))) for k in range(n + 1)]


def _coeffs_log1p(n):
    return [GaussianRational(0)] + [
        GaussianRational(Fraction((-1) ** (k + 1), k)) for k in range(1, n + 1)]


def _coeffs_sqrt1p(n):
    out = [Fraction(1)]
    for k in range(1, n + 1):
        out.append(out[-1] * (Fraction(1, 2) - (k - 1)) / k)
    return [GaussianRational(c) for c in out]


def _coeffs_arctan(n):
    out = []
    for k in range(n + 1):
        if k % 2 == 1:
            out.append(GaussianRational(Fraction((-1) ** ((k - 1) // 2), k)))
        else:
            out.append(GaussianRational(0))
    return out


def _coeffs_geom_inv(n):
    return [GaussianRational((-1) ** k) for k in range(n + 1)]


_SERIES_COEFFS = {
    "exp": _coeffs_exp,
    "log1p": _coeffs_log1p,
    "sqrt1p": _coeffs_sqrt1p,
    "arctan": _coeffs_arctan,
    "geom_inv": _coeffs_geom_inv,
}


def series_function(kind: str, s: GradedSeries, order: int | None = None) -> GradedSeries:
    """Maclaurin composition f(s) for f in exp/log1p/sqrt1p/arctan/geom_inv.

    The argument must have hbar-valuation >= 1 (for the non-exp kinds it is
    the deviation from 1, e.g. geom_inv(s) = 1/(1+s)).
    """
    if kind not in _SERIES_COEFFS:
        raise ValueError(f"unknown series function {kind!r}")
    order = s.order if order is None else order
    s = s.truncate(order)
    v = s.valuation()
    if v is not None and v < 1:
        raise GradingError(f"series argument of {kind} has valuation {v} < 1")
    coeffs = _SERIES_COEFFS[kind](order)
    out = GradedSeries.zero(s.ctx, s.rank, order)
    power = GradedSeries.unit(s.ctx, s.rank, order)
    for k, c in enumerate(coeffs):
        if k:
            power = power * s
            if power.is_zero():
                break
        if c:
            out = out + power.scale(c)
    return out


def neumann_inverse(f: GradedSeries) -> GradedSeries:
    """Inverse of a series with unit degree-0 part, degree by degree."""
    unit = GradedSeries.unit(f.ctx, f.rank, f.order)
    x = f - unit
    if not x.is_zero() and x.valuation() < 1:
        raise GradingError("inverse requires degree-0 part equal to the unit")
    out = GradedSeries.unit(f.ctx, f.rank, f.order)
    power = GradedSeries.unit(f.ctx, f.rank, f.order)
    for k in range(1, f.order + 1):
        power = power * x
        if power.is_zero():
            break
        out = out + power.scale(GaussianRational((-1) ** k))
    return out


# ---------------------------------------------------------------------------
# Bridges from the symbolic layer
# ---------------------------------------------------------------------------

def lie_series(x: LieElement, m: SpecializationMap, ctx: PBWContext,
               order: int) -> GradedSeries:
    """A Lie element with parameter coefficients as a rank-1 graded series."""
    data: dict = {}
    for i, c in x.coeffs.items():
        for d, v in specialize_laurent(c, m).items():
            if d < 0:
                raise GradingError(
                    f"coefficient of {x.algebra.basis[i]} has degree {d} < 0")
            if d > order:
                continue
            el = data.setdefault(d, {})
            key = ((i, 1),)
            s = el.get(key, GaussianRational(0)) + v
            if s:
                el[key] = s
            else:
                el.pop(key, None)
    return GradedSeries(ctx, 1, order, data)


def uea_series(terms_by_degree: dict, ctx: PBWContext, order: int) -> GradedSeries:
    return GradedSeries(ctx, 1, order, terms_by_degree)


def scalar_series(c: Scalar, m: SpecializationMap, ctx: PBWContext,
                  order: int) -> GradedSeries:
    """A symbolic scalar as a rank-1 series (multiples of the unit)."""
    data = {}
    for d, v in specialize_laurent(c, m).items():
        if d < 0:
            raise GradingError(f"scalar has degree {d} < 0")
        if d <= order:
            data[d] = {UNIT: v}
    return GradedSeries(ctx, 1, order, data)


def tensor2(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    """Outer product of two rank-1 series into a rank-2 series."""
    assert a.rank == 1 and b.rank == 1
    order = min(a.order, b.order)
    out: dict = {}
    for d1, e1 in a.data.items():
        for d2, e2 in b.data.items():
            d = d1 + d2
            if d > order:
                continue
            el = out.setdefault(d, {})
            for m1, c1 in e1.items():
                for m2, c2 in e2.items():
                    key = (m1, m2)
                    s = el.get(key, GaussianRational(0)) + c1 * c2
                    if s:
                        el[key] = s
                    else:
                        el.pop(key, None)
    out = {d: el for d, el in out.items() if el}
    return GradedSeries(a.ctx, 2, order, out)


def wedge2(a: GradedSeries, b: GradedSeries) -> GradedSeries:
    """a ^ b = a (x) b - b (x) a on rank-1 series."""
    return tensor2(a, b) - tensor2(b, a)


def bivector_series(r, m: SpecializationMap, ctx: PBWContext,
                    order: int) -> GradedSeries:
    """A parameterized bivector as a rank-2 graded series."""
    out: dict = {}
    for (j, k), c in r.coeffs.items():
        for d, v in specialize_laurent(c, m).items():
            if d < 0:
                raise GradingError(f"bivector coefficient has degree {d} < 0")
            if d > order:
                continue
            el = out.setdefault(d, {})
            for key, sign in (( (((j, 1),), ((k, 1),)), 1),
                              ((((k, 1),), ((j, 1),)), -1)):
                s = el.get(key, GaussianRational(0)) + (v if sign > 0 else -v)
                if s:
                    el[key] = s
                else:
                    el.pop(key, None)
    out = {d: el for d, el in out.items() if el}
    return GradedSeries(ctx, 2, order, out)


# ---------------------------------------------------------------------------
# Hopf operations lifted to series
# ---------------------------------------------------------------------------

def coproduct_series(a: GradedSeries) -> GradedSeries:
    """Apply the coproduct to a rank-1 series, yielding a rank-2 series."""
    assert a.rank == 1
    out = {}
    for d, el in a.data.items():
        nel: dict = {}
        for mono, c in el.items():
            for (ml, mr), k in a.ctx.coproduct_mono(mono).items():
                key = (ml, mr)
                s = nel.get(key, GaussianRational(0)) + c * k
                if s:
                    nel[key] = s
                else:
                    nel.pop(key, None)
        if nel:
            out[d] = nel
    return GradedSeries(a.ctx, 2, a.order, out)


def delta_slot(a: GradedSeries, slot: int) -> GradedSeries:
    """(Delta (x) id) for slot=0 or (id (x) Delta) for slot=1 on rank 2."""
    assert a.rank == 2 and slot in (0, 1)
    out = {}
    for d, el in a.data.items():
        nel: dict = {}
        for (m1, m2), c in el.items():
            target = m1 if slot == 0 else m2
            for (ml, mr), k in a.ctx.coproduct_mono(target).items():
                key = (ml, mr, m2) if slot == 0 else (m1, ml, mr)
                s = nel.get(key, GaussianRational(0)) + c * k
                if s:
                    nel[key] = s
                else:
                    nel.pop(key, None)
        if nel:
            out[d] = nel
    return GradedSeries(a.ctx, 3, a.order, out)


def embed12(a: GradedSeries) -> GradedSeries:
    return _embed(a, (0, 1))


def embed23(a: GradedSeries) -> GradedSeries:
    return _embed(a, (1, 2))


def embed13(a: GradedSeries) -> GradedSeries:
    return _embed(a, (0, 2))


def _embed(a: GradedSeries, slots) -> GradedSeries:
    assert a.rank == 2
    out = {}
    for d, el in a.data.items():
        nel = {}
        for (m1, m2), c in el.items():
            key = [UNIT, UNIT, UNIT]
            key[slots[0]] = m1
            key[slots[1]] = m2
            nel[tuple(key)] = c
        out[d] = nel
    return GradedSeries(a.ctx, 3, a.order, out)


def counit_slot(a: GradedSeries, slot: int) -> GradedSeries:
    """Apply the counit to one slot of a rank-2 series."""
    assert a.rank == 2 and slot in (0, 1)
    out = {}
    for d, el in a.data.items():
        nel: dict = {}
        for (m1, m2), c in el.items():
            killed, kept = (m1, m2) if slot == 0 else (m2, m1)
            if killed != UNIT:
                continue
            s = nel.get(kept, GaussianRational(0)) + c
            if s:
                nel[kept] = s
            else:
                nel.pop(kept, None)
        if nel:
            out[d] = nel
    return GradedSeries(a.ctx, 1, a.order, out)


def multiply_slots(a: GradedSeries) -> GradedSeries:
    """Multiplication map m: rank-2 series -> rank-1 series."""
    assert a.rank == 2
    out = {}
    for d, el in a.data.items():
        nel: dict = {}
        for (m1, m2), c in el.items():
            for mono, k in a.ctx.mul_mono(m1, m2).items():
                s = nel.get(mono, GaussianRational(0)) + c * k
                if s:
                    nel[mono] = s
                else:
                    nel.pop(mono, None)
        if nel:
            out[d] = nel
    return GradedSeries(a.ctx, 1, a.order, out)


def antipode_slot(a: GradedSeries, slot: int) -> GradedSeries:
    """Apply the undeformed antipode to one slot of a rank-2 series."""
    assert a.rank == 2 and slot in (0, 1)
    out = {}
    for d, el in a.data.items():
        nel: dict = {}
        for (m1, m2), c in el.items():
            target = m1 if slot == 0 else m2
            for mono, k in a.ctx.antipode_mono(target).items():
                key = (mono, m2) if slot == 0 else (m1, mono)
                s = nel.get(key, GaussianRational(0)) + c * k
                if s:
                    nel[key] = s
                else:
                    nel.pop(key, None)
        if nel:
            out[d] = nel
    return GradedSeries(a.ctx, 2, a.order, out)


def conjugate_slot(a: GradedSeries, slot: int, left: GradedSeries,
                   right: GradedSeries) -> GradedSeries:
    """Replace slot entries x by (left * x * right) degree-by-degree.

    left/right are rank-1 series; used for conjugation inside one slot of a
    rank-2 series (the twisted antipode machinery).
    """
    assert a.rank == 2 and slot in (0, 1)
    order = min(a.order, left.order, right.order)
    out = GradedSeries.zero(a.ctx, 2, order)
    for d, el in a.data.items():
        for (m1, m2), c in el.items():
            target = m1 if slot == 0 else m2
            mono_series = GradedSeries(a.ctx, 1, order, {0: {target: a.ctx.domain.one}})
            conj = left * mono_series * right
            for d2, el2 in conj.data.items():
                nd = d + d2
                if nd > order:
                    continue
                add = {}
                for mono, k in el2.items():
                    key = (mono, m2) if slot == 0 else (m1, mono)
                    add[key] = c * k
                out.data[nd] = a.ctx.tensor_add(out.data.get(nd, {}), add)
    out.data = {d: el for d, el in out.data.items() if el}
    return out
