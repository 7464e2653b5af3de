"""Bivector and trivector calculus over a Lie algebra.

This is where candidate r-matrices are interrogated: the Schouten bracket
and the classical Yang-Baxter classification (homogeneous / modified /
neither), the momentum-boost decomposition of Poincare bivectors with its
four compatibility conditions, subordination between r-matrices, the
recognition of Abelian and Jordanian-type data, and the anti-Hermiticity
check under the direct and flipped liftings of the star operation.

Conventions (fixed, used consistently everywhere):

- wedge of elements: ``x ^ y = x (x) y - y (x) x`` with no 1/2,
- wedge of three: the full six-term alternating sum,
- with these identifications ``schouten(r, r)`` equals exactly twice the
  tensor-cube Yang-Baxter left side computed in the enveloping algebra
  (see :func:`twistforge.uea.cybe_lhs_tensor`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lie import (
    LieAlgebra,
    LieElement,
    LieError,
    bracket,
    echelonize,
    in_span,
    star,
    subalgebra_closure,
)
from .scalars import GR_ONE, Scalar, _coerce_scalar


def _sc(x) -> Scalar:
    return _coerce_scalar(x)


_ONE = Scalar.from_gaussian(GR_ONE)


# ---------------------------------------------------------------------------
# Bivectors and trivectors
# ---------------------------------------------------------------------------

class Bivector:
    """Antisymmetric rank-2 tensor, stored on ordered basis pairs j < k."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: LieAlgebra, coeffs: dict | None = None):
        self.algebra = algebra
        self.coeffs = {}
        if coeffs:
            for (j, k), c in coeffs.items():
                self._accum(j, k, _sc(c))

    def _accum(self, j: int, k: int, c: Scalar):
        if not c or j == k:
            return
        if j > k:
            j, k, c = k, j, -c
        key = (j, k)
        s = self.coeffs.get(key)
        s = c if s is None else s + c
        if s:
            self.coeffs[key] = s
        else:
            self.coeffs.pop(key, None)

    @staticmethod
    def zero(algebra: LieAlgebra) -> "Bivector":
        return Bivector(algebra)

    def copy(self) -> "Bivector":
        out = Bivector(self.algebra)
        out.coeffs = dict(self.coeffs)
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise LieError("bivectors over different algebras")

    def __add__(self, other: "Bivector") -> "Bivector":
        self._check(other)
        out = self.copy()
        for (j, k), c in other.coeffs.items():
            out._accum(j, k, c)
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = Bivector(self.algebra)
        out.coeffs = {p: -c for p, c in self.coeffs.items()}
        return out

    def __rmul__(self, c):
        c = _sc(c)
        out = Bivector(self.algebra)
        if c:
            out.coeffs = {p: c * v for p, v in self.coeffs.items()}
        return out

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, Bivector):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def leg_span(self) -> list:
        """Echelonized basis of the smallest subspace V with r in V ^ V."""
        A = self.algebra
        cols: dict[int, dict] = {}
        for (j, k), c in self.coeffs.items():
            cols.setdefault(k, {})[j] = cols.setdefault(k, {}).get(j, _sc(0)) + c
            cols.setdefault(j, {})[k] = cols.setdefault(j, {}).get(k, _sc(0)) - c
        vecs = [LieElement(A, col) for col in cols.values()]
        return echelonize([v for v in vecs if not v.is_zero()])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = self.algebra.basis
        bits = []
        for (j, k) in sorted(self.coeffs):
            c = self.coeffs[(j, k)]
            term = f"{names[j]}^{names[k]}"
            bits.append(term if c == 1 else f"({c!r})*{term}")
        return " + ".join(bits)


def wedge(x: LieElement, y: LieElement) -> Bivector:
    """x ^ y = x (x) y - y (x) x."""
    x._check(y)
    out = Bivector(x.algebra)
    for j, cx in x.coeffs.items():
        for k, cy in y.coeffs.items():
            out._accum(j, k, cx * cy)
    return out


class Trivector:
    """Alternating rank-3 tensor on ordered basis triples j < k < l."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: LieAlgebra, coeffs: dict | None = None):
        self.algebra = algebra
        self.coeffs = {}
        if coeffs:
            for (j, k, l), c in coeffs.items():
                self._accum(j, k, l, _sc(c))

    def _accum(self, j: int, k: int, l: int, c: Scalar):
        if not c or j == k or j == l or k == l:
            return
        idx = [j, k, l]
        sign = 1
        # sort three indices tracking parity
        for a in range(2):
            for b in range(2 - a):
                if idx[b] > idx[b + 1]:
                    idx[b], idx[b + 1] = idx[b + 1], idx[b]
                    sign = -sign
        key = tuple(idx)
        v = c if sign > 0 else -c
        s = self.coeffs.get(key)
        s = v if s is None else s + v
        if s:
            self.coeffs[key] = s
        else:
            self.coeffs.pop(key, None)

    @staticmethod
    def zero(algebra: LieAlgebra) -> "Trivector":
        return Trivector(algebra)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other: "Trivector") -> "Trivector":
        if self.algebra is not other.algebra:
            raise LieError("trivectors over different algebras")
        out = Trivector(self.algebra)
        out.coeffs = dict(self.coeffs)
        for (j, k, l), c in other.coeffs.items():
            out._accum(j, k, l, c)
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = Trivector(self.algebra)
        out.coeffs = {p: -c for p, c in self.coeffs.items()}
        return out

    def __rmul__(self, c):
        c = _sc(c)
        out = Trivector(self.algebra)
        if c:
            out.coeffs = {p: c * v for p, v in self.coeffs.items()}
        return out

    __mul__ = __rmul__

    def __eq__(self, other):
        if not isinstance(other, Trivector):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = self.algebra.basis
        bits = []
        for (j, k, l) in sorted(self.coeffs):
            c = self.coeffs[(j, k, l)]
            term = f"{names[j]}^{names[k]}^{names[l]}"
            bits.append(term if c == 1 else f"({c!r})*{term}")
        return " + ".join(bits)


def wedge3(x: LieElement, y: LieElement, z: LieElement) -> Trivector:
    out = Trivector(x.algebra)
    for j, cx in x.coeffs.items():
        for k, cy in y.coeffs.items():
            cxy = cx * cy
            for l, cz in z.coeffs.items():
                out._accum(j, k, l, cxy * cz)
    return out


# ---------------------------------------------------------------------------
# Adjoint action and Schouten bracket
# ---------------------------------------------------------------------------

def adjoint_action(x: LieElement, r: Bivector) -> Bivector:
    """delta_x(r) = [x (x) 1 + 1 (x) x, r], the Leibniz action on both legs."""
    if x.algebra is not r.algebra:
        raise LieError("element and bivector over different algebras")
    A = r.algebra
    out = Bivector(A)
    for (j, k), c in r.coeffs.items():
        for i, ci in x.coeffs.items():
            cij = ci * c
            for l, cl in A.bracket_gens(i, j).items():
                out._accum(l, k, cij * cl)
            for l, cl in A.bracket_gens(i, k).items():
                out._accum(j, l, cij * cl)
    return out


def adjoint_action_tri(x: LieElement, t: Trivector) -> Trivector:
    A = t.algebra
    out = Trivector(A)
    for (j, k, l), c in t.coeffs.items():
        for i, ci in x.coeffs.items():
            cic = ci * c
            for m, cm in A.bracket_gens(i, j).items():
                out._accum(m, k, l, cic * cm)
            for m, cm in A.bracket_gens(i, k).items():
                out._accum(j, m, l, cic * cm)
            for m, cm in A.bracket_gens(i, l).items():
                out._accum(j, k, m, cic * cm)
    return out


def schouten(r1: Bivector, r2: Bivector) -> Trivector:
    """Schouten bracket of two bivectors.

    On decomposables: [[x^y, u^v]] = [x,u]^y^v - [y,u]^x^v - [x,v]^y^u
    + [y,v]^x^u, extended bilinearly over the basis pairs.
    """
    r1._check(r2)
    A = r1.algebra
    out = Trivector(A)
    for (j, k), c1 in r1.coeffs.items():
        for (u, v), c2 in r2.coeffs.items():
            c = c1 * c2
            for m, cm in A.bracket_gens(j, u).items():
                out._accum(m, k, v, c * cm)
            for m, cm in A.bracket_gens(k, u).items():
                out._accum(m, j, v, -(c * cm))
            for m, cm in A.bracket_gens(j, v).items():
                out._accum(m, k, u, -(c * cm))
            for m, cm in A.bracket_gens(k, v).items():
                out._accum(m, j, u, c * cm)
    return out


def is_ad_invariant(t: Trivector) -> bool:
    """True iff every basis generator annihilates t under the adjoint action."""
    A = t.algebra
    for i in range(A.dim):
        g = LieElement(A, {i: _ONE})
        if not adjoint_action_tri(g, t).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# Yang-Baxter classification
# ---------------------------------------------------------------------------

HOMOGENEOUS = "Homogeneous"
MODIFIED = "Modified"
NOT_CYBE = "NotCYBE"


@dataclass
class CYBEVerdict:
    kind: str
    omega: Trivector
    invariant_witness: bool

    def __repr__(self):
        return f"CYBEVerdict({self.kind})"


def cybe_classify(r: Bivector) -> CYBEVerdict:
    """Classify r by its Schouten square.

    Homogeneous when [[r, r]] = 0; Modified when nonzero but invariant
    under the adjoint action of the whole algebra; NotCYBE otherwise.
    """
    omega = schouten(r, r)
    if omega.is_zero():
        return CYBEVerdict(HOMOGENEOUS, omega, True)
    inv = is_ad_invariant(omega)
    return CYBEVerdict(MODIFIED if inv else NOT_CYBE, omega, inv)


# ---------------------------------------------------------------------------
# Momentum / boost decomposition and its compatibility conditions
# ---------------------------------------------------------------------------

def decompose_abc(r: Bivector):
    """Split r = a + b + c by momentum content of the two legs.

    a has both legs among the momenta, c both legs in the Lorentz sector,
    b one of each.  Requires an algebra with sector labels.
    """
    A = r.algebra
    mom = set(A.momentum_indices())
    a, b, c = Bivector(A), Bivector(A), Bivector(A)
    for (j, k), v in r.coeffs.items():
        n = (j in mom) + (k in mom)
        (c, b, a)[n]._accum(j, k, v)
    return a, b, c


@dataclass
class ZakrzewskiReport:
    """Outcome of the four decomposition conditions for a Poincare bivector."""

    a: Bivector
    b: Bivector
    c: Bivector
    cc: Trivector          # [[c, c]]
    bc: Trivector          # [[b, c]]
    mixed: Trivector       # 2[[a, c]] + [[b, b]]
    ab: Trivector          # [[a, b]]
    eq_cc: bool            # [[c, c]] = 0
    eq_bc: bool            # [[b, c]] = 0
    eq_mixed: bool         # 2[[a,c]] + [[b,b]] invariant (zero allowed)
    eq_ab: bool            # [[a, b]] = 0

    @property
    def all_pass(self) -> bool:
        return self.eq_cc and self.eq_bc and self.eq_mixed and self.eq_ab

    def verdicts(self) -> dict:
        return {
            "cc_vanishes": self.eq_cc,
            "bc_vanishes": self.eq_bc,
            "mixed_invariant": self.eq_mixed,
            "ab_vanishes": self.eq_ab,
        }


def check_zakrzewski_conditions(r: Bivector) -> ZakrzewskiReport:
    a, b, c = decompose_abc(r)
    cc = schouten(c, c)
    bc = schouten(b, c)
    mixed = _sc(2) * schouten(a, c) + schouten(b, b)
    ab = schouten(a, b)
    return ZakrzewskiReport(
        a, b, c, cc, bc, mixed, ab,
        eq_cc=cc.is_zero(),
        eq_bc=bc.is_zero(),
        eq_mixed=mixed.is_zero() or is_ad_invariant(mixed),
        eq_ab=ab.is_zero(),
    )


# ---------------------------------------------------------------------------
# Support, subordination, Abelian / Jordanian recognition
# ---------------------------------------------------------------------------

def support(r: Bivector) -> list:
    """Sup(r): the subalgebra generated by the legs of r.

    Computed from the echelonized leg span, hence independent of how r was
    presented as a sum of wedges.
    """
    return subalgebra_closure(r.leg_span())


def is_subordinated(r1: Bivector, r2: Bivector) -> bool:
    """True iff the support of r2 acts trivially on r1 (r1 > r2)."""
    r1._check(r2)
    for x in support(r2):
        if not adjoint_action(x, r1).is_zero():
            return False
    return True


def is_abelian_type(r: Bivector) -> bool:
    """True iff the subalgebra generated by the legs of r is abelian."""
    basis = support(r)
    for i, x in enumerate(basis):
        for y in basis[i + 1:]:
            if not bracket(x, y).is_zero():
                return False
    return True


@dataclass
class JordanianData:
    """Candidate data (x0, y0, pairs (x_i, y_i, t_i), xi) of Jordanian type.

    Nothing is assumed: verify_jordanian_data checks every required
    relation and, if a target bivector is attached, that
    xi * (y0 ^ x0 + sum_i y_i ^ x_i) reproduces it.
    """

    x0: LieElement
    y0: LieElement
    pairs: list = field(default_factory=list)   # [(x_i, y_i, t_i: Scalar)]
    xi: Scalar = _ONE
    rmatrix: Bivector | None = None

    def as_bivector(self) -> Bivector:
        out = self.xi * wedge(self.y0, self.x0)
        for x, y, _t in self.pairs:
            out = out + self.xi * wedge(y, x)
        return out


def verify_jordanian_data(d: JordanianData):
    """Check the defining relations; returns (ok, first violated relation)."""
    x0, y0 = d.x0, d.y0
    if bracket(x0, y0) != y0:
        return False, "[x0, y0] = y0"
    for i, (xi_, yi_, ti) in enumerate(d.pairs, start=1):
        ti = _sc(ti)
        if bracket(x0, yi_) != ti * yi_:
            return False, f"[x0, y{i}] = t{i} y{i}"
        if bracket(x0, xi_) != (_ONE - ti) * xi_:
            return False, f"[x0, x{i}] = (1 - t{i}) x{i}"
        if bracket(y0, xi_):
            return False, f"[y0, x{i}] = 0"
        if bracket(y0, yi_):
            return False, f"[y0, y{i}] = 0"
    for i, (xi_, yi_, _t) in enumerate(d.pairs, start=1):
        for j, (xj_, yj_, _tj) in enumerate(d.pairs, start=1):
            want = y0 if i == j else y0.algebra.zero()
            if bracket(xi_, yj_) != want:
                return False, f"[x{i}, y{j}] = {'y0' if i == j else '0'}"
            if bracket(xi_, xj_):
                return False, f"[x{i}, x{j}] = 0"
            if bracket(yi_, yj_):
                return False, f"[y{i}, y{j}] = 0"
    if d.rmatrix is not None and d.as_bivector() != d.rmatrix:
        return False, "xi * sum y_nu ^ x_nu reproduces the r-matrix"
    return True, None


# ---------------------------------------------------------------------------
# Reality of r-matrices
# ---------------------------------------------------------------------------

def star_reality_check(r: Bivector, lifting: str) -> bool:
    """Check r* = -r under the chosen lifting of the star operation.

    direct lifting: (x (x) y)* = x* (x) y*; flipped: (x (x) y)* = y* (x) x*.
    Parameters must carry reality flags for the coefficient conjugation.
    """
    if lifting not in ("direct", "flipped"):
        raise ValueError(f"unknown lifting {lifting!r}")
    A = r.algebra
    out = Bivector(A)
    for (j, k), c in r.coeffs.items():
        gj = star(LieElement(A, {j: _ONE}))
        gk = star(LieElement(A, {k: _ONE}))
        w = wedge(gj, gk)
        # (x^y)* is x*^y* under direct lifting and -(x*^y*) under flipped.
        coeff = c.conj() if lifting == "direct" else -c.conj()
        out = out + coeff * w
    return out == -r
