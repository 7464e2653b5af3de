"""Exact coefficient arithmetic.

Every coefficient in the engine lives in the field Q(i)(p1, ..., pn):
rational functions in a set of formal deformation parameters, with Gaussian
rational constants.  All arithmetic is exact, and equality is decided
syntactically (cross-multiplied polynomial comparison), never numerically.

A :class:`SpecializationMap` sends every parameter to ``c * hbar**d`` for a
fixed nonzero rational constant ``c`` and degree ``d`` (normally 1).  Under a
specialization a symbolic scalar collapses to a polynomial in the single
bookkeeping symbol ``hbar``; this is the grading the truncated-series layer
runs on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class ScalarError(Exception):
    pass


class ScalarDivisionError(ScalarError):
    """Division by an identically-zero scalar."""


class ConjugationError(ScalarError):
    """Conjugation of a parameter with no declared reality flag."""


class NonPolynomialSpecialization(ScalarError):
    """A specialized scalar is not a polynomial in hbar (ill-graded)."""


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """Exact complex number a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, *a):
        raise AttributeError("GaussianRational is immutable")

    # -- ring structure ----------------------------------------------------
    def __add__(self, other):
        try:
            other = _coerce_gr(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = _coerce_gr(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce_gr(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        try:
            other = _coerce_gr(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_gr(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ScalarDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _coerce_gr(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- comparisons / hashing ----------------------------------------------
    def __eq__(self, other):
        try:
            other = _coerce_gr(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational(self) -> bool:
        return self.im == 0

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i" if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{istr}"


def _coerce_gr(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"cannot coerce {x!r} to GaussianRational")


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def gr(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions or 'p/q' strings."""
    def conv(v):
        return Fraction(v) if isinstance(v, str) else _frac(v)
    return GaussianRational(conv(re), conv(im))


# ---------------------------------------------------------------------------
# Parameters and sparse multivariate polynomials
# ---------------------------------------------------------------------------

REALITIES = ("real", "imaginary", "unrestricted")


@dataclass(frozen=True)
class ParamSymbol:
    """A formal deformation parameter with an optional reality flag.

    The flag drives conjugation: a real parameter is fixed, a pure imaginary
    one changes sign, an unrestricted one cannot be conjugated inside Q(i).
    """

    name: str
    reality: str = "unrestricted"

    def __post_init__(self):
        if self.reality not in REALITIES:
            raise ValueError(f"unknown reality flag {self.reality!r}")

    def __repr__(self):
        return self.name


# A monomial is a tuple of (ParamSymbol, positive exponent) pairs sorted by
# symbol name; () is the unit monomial.
Mono = tuple

_UNIT: Mono = ()


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = {}
    for p, e in m1:
        d[p] = d.get(p, 0) + e
    for p, e in m2:
        d[p] = d.get(p, 0) + e
    return tuple(sorted(d.items(), key=lambda t: t[0].name))


def _mono_sortkey(m: Mono):
    return (sum(e for _, e in m), tuple((p.name, e) for p, e in m))


class _Poly:
    """Sparse multivariate polynomial over GaussianRational (internal)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, GaussianRational]):
        self.terms = {m: c for m, c in terms.items() if c}

    @staticmethod
    def const(c: GaussianRational) -> "_Poly":
        return _Poly({_UNIT: c} if c else {})

    @staticmethod
    def symbol(p: ParamSymbol) -> "_Poly":
        return _Poly({((p, 1),): GR_ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "_Poly") -> "_Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, GR_ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _Poly(out)

    def __neg__(self) -> "_Poly":
        return _Poly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "_Poly") -> "_Poly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, GR_ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return _Poly(out)

    def scale(self, c: GaussianRational) -> "_Poly":
        if not c:
            return _Poly({})
        return _Poly({m: k * c for m, k in self.terms.items()})

    def conj(self) -> "_Poly":
        out = {}
        for m, c in self.terms.items():
            sign = 1
            for p, e in m:
                if p.reality == "real":
                    continue
                if p.reality == "imaginary":
                    if e % 2:
                        sign = -sign
                else:
                    raise ConjugationError(
                        f"parameter {p.name} has no reality flag; cannot conjugate"
                    )
            c2 = c.conj()
            out[m] = -c2 if sign < 0 else c2
        return _Poly(out)

    def content(self) -> dict:
        """Per-symbol minimum exponent over all terms (the monomial GCD)."""
        if not self.terms:
            return {}
        it = iter(self.terms)
        first = next(it)
        common = {p: e for p, e in first}
        for m in it:
            d = dict(m)
            for p in list(common):
                common[p] = min(common[p], d.get(p, 0))
                if common[p] == 0:
                    del common[p]
            if not common:
                break
        return common

    def strip_content(self, content: dict) -> "_Poly":
        if not content:
            return self
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            for p, e in content.items():
                d[p] -= e
                if d[p] == 0:
                    del d[p]
            out[tuple(sorted(d.items(), key=lambda t: t[0].name))] = c
        return _Poly(out)

    def lead_coeff(self) -> GaussianRational:
        m = min(self.terms, key=_mono_sortkey)
        return self.terms[m]

    def symbols(self) -> set:
        return {p for m in self.terms for p, _ in m}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _mono_sortkey(t[0]))

    def __eq__(self, other):
        return isinstance(other, _Poly) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                p.name if e == 1 else f"{p.name}^{e}" for p, e in m
            )
            if not mono:
                bits.append(f"{c!r}")
            elif c == GR_ONE:
                bits.append(mono)
            else:
                bits.append(f"({c!r})*{mono}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Scalar: reduced rational function
# ---------------------------------------------------------------------------

class Scalar:
    """Element of the coefficient field Q(i)(params).

    Stored as a pair of polynomials num/den with the common monomial content
    cancelled and the denominator's leading coefficient normalized to 1.
    Equality is exact, via cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: _Poly, den: _Poly | None = None):
        if den is None:
            den = _Poly.const(GR_ONE)
        if den.is_zero():
            raise ScalarDivisionError("denominator is identically zero")
        if num.is_zero():
            num, den = _Poly({}), _Poly.const(GR_ONE)
        else:
            cn, cd = num.content(), den.content()
            common = {
                p: min(e, cd.get(p, 0)) for p, e in cn.items() if cd.get(p, 0)
            }
            common = {p: e for p, e in common.items() if e}
            if common:
                num = num.strip_content(common)
                den = den.strip_content(common)
            lead = den.lead_coeff()
            if lead != GR_ONE:
                inv = GR_ONE / lead
                num = num.scale(inv)
                den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- constructors --------------------------------------------------------
    @staticmethod
    def from_gaussian(c) -> "Scalar":
        return Scalar(_Poly.const(_coerce_gr(c)))

    @staticmethod
    def param(p: ParamSymbol | str, reality: str = "unrestricted") -> "Scalar":
        if isinstance(p, str):
            p = ParamSymbol(p, reality)
        return Scalar(_Poly.symbol(p))

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self) -> bool:
        return set(self.num.terms) <= {_UNIT} and set(self.den.terms) <= {_UNIT}

    def to_gaussian(self) -> GaussianRational:
        if not self.is_constant():
            raise ScalarError(f"not a constant scalar: {self!r}")
        if self.is_zero():
            return GR_ZERO
        return self.num.terms[_UNIT] / self.den.terms[_UNIT]

    def symbols(self) -> set:
        return self.num.symbols() | self.den.symbols()

    # -- field operations ------------------------------------------------------
    def __add__(self, other):
        try:
            other = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_scalar(other) + (-self)

    def __neg__(self):
        return Scalar(-self.num, self.den)

    def __mul__(self, other):
        try:
            other = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_scalar(other)
        if other.is_zero():
            raise ScalarDivisionError("division by identically-zero scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_scalar(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return ONE / self ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def conj(self) -> "Scalar":
        return Scalar(self.num.conj(), self.den.conj())

    def canonicalize(self) -> "Scalar":
        """Re-run the constructor normalization (idempotent by design)."""
        return Scalar(self.num, self.den)

    # -- equality ---------------------------------------------------------------
    def __eq__(self, other):
        try:
            other = _coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return (self.num * other.den) == (other.num * self.den)

    __hash__ = None  # not hashable: use is_zero / == for decisions

    def __repr__(self):
        if self.den == _Poly.const(GR_ONE):
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _coerce_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction, GaussianRational)):
        return Scalar.from_gaussian(_coerce_gr(x))
    raise TypeError(f"cannot coerce {x!r} to Scalar")


ZERO = Scalar(_Poly({}))
ONE = Scalar.from_gaussian(GR_ONE)
I = Scalar.from_gaussian(GR_I)


def rational(p, q=1) -> Scalar:
    return Scalar.from_gaussian(GaussianRational(Fraction(p, q)))


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Uniform entry point for coefficient arithmetic.

    ``op`` is one of add, mul, div, neg, conj; binary ops require ``b``.
    """
    a = _coerce_scalar(a)
    if op in ("neg", "conj"):
        if b is not None:
            raise ValueError(f"{op} is unary")
        return -a if op == "neg" else a.conj()
    b = _coerce_scalar(b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Specialization to the grading parameter hbar
# ---------------------------------------------------------------------------

#: Generic default constants: distinct-ish small rationals keeping every
#: denominator that appears in the catalog away from zero.
DEFAULT_CONSTANTS = {
    "alpha": Fraction(2, 3),
    "alpha_bar": Fraction(5, 7),
    "alpha1": Fraction(3, 5),
    "alpha2": Fraction(7, 11),
    "beta": Fraction(4, 9),
    "beta1": Fraction(3, 5),
    "beta2": Fraction(5, 8),
    "gamma": Fraction(2, 7),
    "gamma1": Fraction(6, 11),
    "lam": Fraction(1),
    "chi": Fraction(1),
    "xi": Fraction(1, 2),
}


class SpecializationMap:
    """Assignment parameter -> (hbar-degree, nonzero constant).

    Deformation parameters always carry degree exactly 1; the constant must
    be nonzero so denominators survive the substitution.
    """

    def __init__(self, assignments: Mapping[str, tuple] | None = None):
        self.assignments: dict[str, tuple[int, GaussianRational]] = {}
        if assignments:
            for name, (deg, const) in assignments.items():
                self.assign(name, deg, const)

    def assign(self, name: str, degree: int, const) -> "SpecializationMap":
        const = _coerce_gr(const)
        if degree < 0:
            raise ValueError("hbar-degree must be nonnegative")
        if not const:
            raise ValueError(f"specialization constant for {name} must be nonzero")
        self.assignments[name] = (degree, const)
        return self

    @classmethod
    def default(cls, overrides: Mapping[str, object] | None = None) -> "SpecializationMap":
        m = cls()
        for name, c in DEFAULT_CONSTANTS.items():
            m.assign(name, 1, GaussianRational(c))
        if overrides:
            for name, c in overrides.items():
                m.assign(name, 1, c)
        return m

    def lookup(self, p: ParamSymbol) -> tuple[int, GaussianRational]:
        try:
            return self.assignments[p.name]
        except KeyError:
            raise NonPolynomialSpecialization(
                f"no specialization for parameter {p.name}"
            ) from None

    def constants_repr(self) -> dict:
        return {
            name: repr(const)
            for name, (deg, const) in sorted(self.assignments.items())
        }


def _spec_poly(p: _Poly, m: SpecializationMap) -> dict:
    """Substitute parameters; returns {hbar-degree: GaussianRational}."""
    out: dict[int, GaussianRational] = {}
    for mono, c in p.terms.items():
        deg = 0
        val = c
        for sym, e in mono:
            d, const = m.lookup(sym)
            deg += d * e
            val = val * const ** e
        s = out.get(deg, GR_ZERO) + val
        if s:
            out[deg] = s
        else:
            out.pop(deg, None)
    return out


def _laurent_divide(num: dict, den: dict) -> dict:
    """Exact division of Laurent polynomials in hbar; raises if inexact."""
    if not den:
        raise ScalarDivisionError("zero denominator after specialization")
    if not num:
        return {}
    nmin, dmin = min(num), min(den)
    n = {k - nmin: v for k, v in num.items()}
    d = {k - dmin: v for k, v in den.items()}
    ddeg = max(d)
    dlead = d[ddeg]
    quot: dict[int, GaussianRational] = {}
    rem = dict(n)
    while rem:
        rdeg = max(rem)
        if rdeg < ddeg:
            raise NonPolynomialSpecialization(
                "denominator does not divide numerator after specialization"
            )
        f = rem[rdeg] / dlead
        quot[rdeg - ddeg] = f
        for k, v in d.items():
            key = rdeg - ddeg + k
            s = rem.get(key, GR_ZERO) - f * v
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    shift = nmin - dmin
    return {k + shift: v for k, v in quot.items()}


def specialize_laurent(s: Scalar, m: SpecializationMap) -> dict:
    """Specialize allowing negative hbar-degrees (internal grading tool)."""
    return _laurent_divide(_spec_poly(s.num, m), _spec_poly(s.den, m))


def specialize(s: Scalar, m: SpecializationMap) -> dict:
    """Specialize to a polynomial {degree: coefficient} in hbar.

    Raises :class:`NonPolynomialSpecialization` when hbar survives in the
    denominator, i.e. when the result would have a negative-degree term.
    """
    out = specialize_laurent(s, m)
    if out and min(out) < 0:
        raise NonPolynomialSpecialization(
            f"specialization of {s!r} has hbar-valuation {min(out)} < 0"
        )
    return out
