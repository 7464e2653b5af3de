"""Finite-dimensional Lie algebras over the exact scalar field.

An algebra is a table of structure constants over named generators, with an
optional antilinear star structure, a fixed PBW generator order (the basis
order), and a nonnegative filtration degree per generator.  The built-in
algebras are the D=4 Lorentz algebra in its canonical and complexified
bases, and the Poincare algebra in both the physical basis (rotations,
boosts, four-momenta) and the light-cone basis the twist catalog is sparse
in.

The light-cone structure constants are frozen literals; a regression test
re-derives them from the physical table through the basis map so that a
transcription slip cannot survive silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import (
    GR_I,
    GR_ONE,
    GaussianRational,
    Scalar,
    ScalarError,
    _coerce_scalar,
)


class LieError(Exception):
    pass


def _sc(x) -> Scalar:
    return _coerce_scalar(x)


_I = Scalar.from_gaussian(GR_I)
_MI = Scalar.from_gaussian(-GR_I)


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class LieElement:
    """Sparse linear combination of generators of one algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "LieAlgebra", coeffs: dict):
        self.algebra = algebra
        self.coeffs = {i: c for i, c in coeffs.items() if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other: "LieElement"):
        if self.algebra is not other.algebra:
            raise LieError(
                f"elements of different algebras: {self.algebra.name} vs "
                f"{other.algebra.name}"
            )

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            s = out.get(i, None)
            out[i] = c if s is None else s + c
        return LieElement(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LieElement(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def __rmul__(self, c):
        c = _sc(c)
        return LieElement(self.algebra, {i: c * v for i, v in self.coeffs.items()})

    __mul__ = __rmul__

    def bracket(self, other: "LieElement") -> "LieElement":
        return bracket(self, other)

    def star(self) -> "LieElement":
        return star(self)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        self._check(other)
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = self.algebra.basis
        bits = []
        for i in sorted(self.coeffs):
            c = self.coeffs[i]
            if c == 1:
                bits.append(names[i])
            else:
                bits.append(f"({c!r})*{names[i]}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------

class LieAlgebra:
    """Structure-constant presentation of a finite-dimensional Lie algebra.

    ``table`` maps ordered generator pairs (i, j) with i < j to the sparse
    expansion of [g_i, g_j]; antisymmetry is structural.  Construction
    validates the Jacobi identity on every basis triple, the compatibility
    of the star map with brackets, and the declared filtration.
    """

    def __init__(
        self,
        name: str,
        basis: tuple,
        table: dict,
        star_map: dict | None = None,
        grading: dict | None = None,
        sector: dict | None = None,
        validate: bool = True,
    ):
        self.name = name
        self.basis = tuple(basis)
        self.index = {g: i for i, g in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.table = {}
        for (i, j), terms in table.items():
            if not (0 <= i < j < self.dim):
                raise LieError(f"bad structure key ({i},{j})")
            cleaned = {l: _sc(c) for l, c in terms.items() if _sc(c)}
            if cleaned:
                self.table[(i, j)] = cleaned
        self.star_map = None
        if star_map is not None:
            self.star_map = {self.index[g]: star_map[g] for g in star_map}
        self.grading = tuple((grading or {}).get(g, 0) for g in self.basis)
        self.sector = dict(sector) if sector else None
        if validate:
            ok, triple = check_jacobi(self)
            if not ok:
                raise LieError(f"Jacobi identity fails on {triple}")
            self._validate_grading()
            if self.star_map is not None:
                self._validate_star()

    # -- accessors ----------------------------------------------------------
    def gen(self, name: str) -> LieElement:
        return LieElement(self, {self.index[name]: Scalar.from_gaussian(GR_ONE)})

    def gens(self, *names):
        return tuple(self.gen(n) for n in names)

    def zero(self) -> LieElement:
        return LieElement(self, {})

    def element(self, coeffs: dict) -> LieElement:
        return LieElement(self, {self.index[g]: _sc(c) for g, c in coeffs.items()})

    def bracket_gens(self, i: int, j: int) -> dict:
        """[g_i, g_j] as a sparse {index: Scalar} map."""
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        flipped = self.table.get((j, i), {})
        return {l: -c for l, c in flipped.items()}

    def momentum_indices(self) -> tuple:
        if not self.sector:
            raise LieError(f"algebra {self.name} has no sector labels")
        return tuple(
            i for i, g in enumerate(self.basis) if self.sector.get(g) == "momentum"
        )

    # -- validation ----------------------------------------------------------
    def _validate_grading(self):
        bad = grading_violations(self)
        if bad:
            raise LieError(f"filtration violated at {bad[0]}")

    def _validate_star(self):
        for i in range(self.dim):
            x = LieElement(self, {i: Scalar.from_gaussian(GR_ONE)})
            if star(star(x)) != x:
                raise LieError(f"star is not an involution on {self.basis[i]}")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                x = LieElement(self, {i: Scalar.from_gaussian(GR_ONE)})
                y = LieElement(self, {j: Scalar.from_gaussian(GR_ONE)})
                if star(bracket(x, y)) != bracket(star(y), star(x)):
                    raise LieError(
                        f"star incompatible with bracket on "
                        f"({self.basis[i]}, {self.basis[j]})"
                    )

    def __repr__(self):
        return f"<LieAlgebra {self.name} dim={self.dim}>"


# ---------------------------------------------------------------------------
# Core operations
# ---------------------------------------------------------------------------

def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Lie bracket, the bilinear extension of the structure constants."""
    x._check(y)
    A = x.algebra
    out: dict = {}
    for i, ci in x.coeffs.items():
        for j, cj in y.coeffs.items():
            if i == j:
                continue
            cij = ci * cj
            for l, c in A.bracket_gens(i, j).items():
                s = out.get(l, None)
                v = cij * c
                out[l] = v if s is None else s + v
    return LieElement(A, out)


def check_jacobi(A: LieAlgebra):
    """Exhaustive Jacobi check; returns (ok, offending generator triple)."""
    for i in range(A.dim):
        x = LieElement(A, {i: Scalar.from_gaussian(GR_ONE)})
        for j in range(i + 1, A.dim):
            y = LieElement(A, {j: Scalar.from_gaussian(GR_ONE)})
            for k in range(j + 1, A.dim):
                z = LieElement(A, {k: Scalar.from_gaussian(GR_ONE)})
                total = (
                    bracket(x, bracket(y, z))
                    + bracket(y, bracket(z, x))
                    + bracket(z, bracket(x, y))
                )
                if not total.is_zero():
                    return False, (A.basis[i], A.basis[j], A.basis[k])
    return True, None


def grading_violations(A: LieAlgebra):
    """Pairs where some bracket component has degree below deg(x)+deg(y)."""
    bad = []
    for (i, j), terms in A.table.items():
        need = A.grading[i] + A.grading[j]
        for l in terms:
            if A.grading[l] < need:
                bad.append((A.basis[i], A.basis[j], A.basis[l]))
    return bad


def star(x: LieElement) -> LieElement:
    """Antilinear star: conjugates coefficients, applies the basis star map."""
    A = x.algebra
    if A.star_map is None:
        raise LieError(f"algebra {A.name} has no star structure")
    out = A.zero()
    for i, c in x.coeffs.items():
        out = out + c.conj() * A.star_map[i]
    return out


# -- linear algebra over the scalar field -----------------------------------

def echelonize(vectors) -> list:
    """Row-reduce a list of LieElements; returns a pivot-normalized basis."""
    pivots: dict[int, LieElement] = {}
    for v in vectors:
        v = _reduce_against(v, pivots)
        if v.is_zero():
            continue
        p = min(v.coeffs)
        v = (Scalar.from_gaussian(GR_ONE) / v.coeffs[p]) * v
        for q, w in list(pivots.items()):
            if p in w.coeffs:
                pivots[q] = w - w.coeffs[p] * v
        pivots[p] = v
    return [pivots[p] for p in sorted(pivots)]


def _reduce_against(v: LieElement, pivots: dict) -> LieElement:
    for p in sorted(pivots):
        if p in v.coeffs:
            v = v - v.coeffs[p] * pivots[p]
    return v


def in_span(v: LieElement, basis: list) -> bool:
    pivots = {min(b.coeffs): b for b in basis}
    return _reduce_against(v, pivots).is_zero()


def subalgebra_closure(elements) -> list:
    """Basis of the smallest subalgebra containing the given elements.

    Fixed-point iteration: close the linear span under brackets, with rank
    tests over the scalar field; the result is echelonized.
    """
    elements = [e for e in elements if not e.is_zero()]
    basis = echelonize(elements)
    while True:
        new = []
        for a in basis:
            for b in basis:
                c = bracket(a, b)
                if not c.is_zero() and not in_span(c, basis + new):
                    new.append(c)
                    new = echelonize(new)
        if not new:
            return basis
        basis = echelonize(basis + new)


# ---------------------------------------------------------------------------
# Basis maps
# ---------------------------------------------------------------------------

class BasisMap:
    """Invertible linear identification between two bases of one algebra."""

    def __init__(self, name: str, source: LieAlgebra, target: LieAlgebra,
                 forward: dict, backward: dict):
        self.name = name
        self.source = source
        self.target = target
        self.forward = {g: forward[g] for g in source.basis}
        self.backward = {g: backward[g] for g in target.basis}
        for g in source.basis:
            back = self.apply(self.forward[g], direction="backward")
            if back != source.gen(g):
                raise LieError(f"basis map {name} does not round-trip on {g}")
        for g in target.basis:
            fwd = self.apply(self.backward[g], direction="forward")
            if fwd != target.gen(g):
                raise LieError(f"basis map {name} does not round-trip on {g}")

    def apply(self, x: LieElement, direction: str = "forward") -> LieElement:
        if direction == "forward":
            table, src, dst = self.forward, self.source, self.target
        elif direction == "backward":
            table, src, dst = self.backward, self.target, self.source
        else:
            raise ValueError(f"unknown direction {direction!r}")
        if x.algebra is not src:
            raise LieError(f"element not in the {direction} source basis")
        out = dst.zero()
        for i, c in x.coeffs.items():
            out = out + c * table[src.basis[i]]
        return out


def apply_basis_map(m: BasisMap, x: LieElement, direction: str = "forward") -> LieElement:
    return m.apply(x, direction)


# ---------------------------------------------------------------------------
# Built-in algebras
# ---------------------------------------------------------------------------

LORENTZ_BASIS = ("e+", "e'+", "h", "h'", "e-", "e'-")
COMPLEX_BASIS = ("E1+", "E2+", "H1", "H2", "E1-", "E2-")
POINCARE_BASIS = ("P+", "P-", "P1", "P2", "e+", "e'+", "h", "h'", "e-", "e'-")
PHYSICAL_BASIS = ("M1", "M2", "M3", "N1", "N2", "N3", "P0", "P1", "P2", "P3")

MOMENTUM_GENS = ("P+", "P-", "P1", "P2")


def _mktable(basis, entries):
    """entries: list of (gi, gj, [(coeff, gl), ...]) with arbitrary order."""
    idx = {g: i for i, g in enumerate(basis)}
    table: dict = {}
    for gi, gj, terms in entries:
        i, j = idx[gi], idx[gj]
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        if i == j:
            raise LieError("diagonal bracket entry")
        row = table.setdefault((i, j), {})
        for c, gl in terms:
            c = _sc(c) if sign > 0 else -_sc(c)
            l = idx[gl]
            row[l] = row.get(l, Scalar.from_gaussian(GaussianRational(0))) + c
    return table


# Canonical Lorentz relations.
_LORENTZ_ENTRIES = [
    ("h", "e+", [(1, "e+")]),
    ("h", "e-", [(-1, "e-")]),
    ("e+", "e-", [(2, "h")]),
    ("h", "e'+", [(1, "e'+")]),
    ("h", "e'-", [(-1, "e'-")]),
    ("h'", "e+", [(1, "e'+")]),
    ("h'", "e-", [(-1, "e'-")]),
    ("e+", "e'-", [(2, "h'")]),
    ("e-", "e'+", [(-2, "h'")]),
    ("h'", "e'+", [(-1, "e+")]),
    ("h'", "e'-", [(1, "e-")]),
    ("e'+", "e'-", [(-2, "h")]),
]

# Complexified Lorentz: two commuting sl(2) copies.
_COMPLEX_ENTRIES = [
    ("H1", "E1+", [(1, "E1+")]),
    ("H1", "E1-", [(-1, "E1-")]),
    ("E1+", "E1-", [(2, "H1")]),
    ("H2", "E2+", [(1, "E2+")]),
    ("H2", "E2-", [(-1, "E2-")]),
    ("E2+", "E2-", [(2, "H2")]),
]

# Physical Poincare relations: rotations M, boosts N, momenta P.
_EPS = {
    (1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
    (2, 1, 3): -1, (3, 2, 1): -1, (1, 3, 2): -1,
}


def _physical_entries():
    entries = []
    for (i, j, k), s in _EPS.items():
        if i < j:
            entries.append((f"M{i}", f"M{j}", [(GaussianRational(0, s), f"M{k}")]))
            entries.append((f"N{i}", f"N{j}", [(GaussianRational(0, -s), f"M{k}")]))
        entries.append((f"M{i}", f"N{j}", [(GaussianRational(0, s), f"N{k}")]))
        entries.append((f"M{i}", f"P{j}", [(GaussianRational(0, s), f"P{k}")]))
    for j in (1, 2, 3):
        entries.append((f"N{j}", f"P{j}", [(GaussianRational(0, -1), "P0")]))
        entries.append((f"N{j}", "P0", [(GaussianRational(0, -1), f"P{j}")]))
    return entries


# Light-cone Poincare structure constants, frozen.  Derived once from the
# physical relations through the basis map below; see derive_lightcone_table
# and the regression test that recomputes them.
_LIGHTCONE_ENTRIES = [
    # Lorentz sector: same as the canonical relations.
    *_LORENTZ_ENTRIES,
    # Lorentz action on the light-cone momenta.
    ("h", "P+", [(1, "P+")]),
    ("h", "P-", [(-1, "P-")]),
    ("h'", "P1", [(-1, "P2")]),
    ("h'", "P2", [(1, "P1")]),
    ("e+", "P-", [(2, "P1")]),
    ("e+", "P1", [(1, "P+")]),
    ("e'+", "P-", [(-2, "P2")]),
    ("e'+", "P2", [(-1, "P+")]),
    ("e-", "P+", [(2, "P1")]),
    ("e-", "P1", [(1, "P-")]),
    ("e'-", "P+", [(2, "P2")]),
    ("e'-", "P2", [(1, "P-")]),
]


_CACHE: dict = {}


def lorentz() -> LieAlgebra:
    """D=4 Lorentz algebra in the canonical anti-Hermitian basis."""
    if "lorentz" not in _CACHE:
        A = LieAlgebra(
            "lorentz",
            LORENTZ_BASIS,
            _mktable(LORENTZ_BASIS, _LORENTZ_ENTRIES),
        )
        A.star_map = {A.index[g]: -A.gen(g) for g in LORENTZ_BASIS}
        A._validate_star()
        _CACHE["lorentz"] = A
    return _CACHE["lorentz"]


def lorentz_complex() -> LieAlgebra:
    """Complexified Lorentz basis: two commuting sl(2) copies."""
    if "lorentz_complex" not in _CACHE:
        A = LieAlgebra(
            "lorentz_complex",
            COMPLEX_BASIS,
            _mktable(COMPLEX_BASIS, _COMPLEX_ENTRIES),
        )
        # Real-structure star swaps the two copies with a sign.
        A.star_map = {
            A.index["H1"]: -A.gen("H2"),
            A.index["H2"]: -A.gen("H1"),
            A.index["E1+"]: -A.gen("E2+"),
            A.index["E2+"]: -A.gen("E1+"),
            A.index["E1-"]: -A.gen("E2-"),
            A.index["E2-"]: -A.gen("E1-"),
        }
        A._validate_star()
        _CACHE["lorentz_complex"] = A
    return _CACHE["lorentz_complex"]


def poincare_physical() -> LieAlgebra:
    """Poincare algebra over rotations M_i, boosts N_i and momenta P_mu."""
    if "poincare_physical" not in _CACHE:
        _CACHE["poincare_physical"] = LieAlgebra(
            "poincare_physical",
            PHYSICAL_BASIS,
            _mktable(PHYSICAL_BASIS, _physical_entries()),
            grading={g: 1 for g in ("P0", "P1", "P2", "P3")},
            sector={g: ("momentum" if g.startswith("P") else "lorentz")
                    for g in PHYSICAL_BASIS},
        )
    return _CACHE["poincare_physical"]


def poincare() -> LieAlgebra:
    """Poincare algebra in the light-cone basis (P+, P-, P1, P2 | Lorentz)."""
    if "poincare" not in _CACHE:
        _CACHE["poincare"] = LieAlgebra(
            "poincare",
            POINCARE_BASIS,
            _mktable(POINCARE_BASIS, _LIGHTCONE_ENTRIES),
            grading={g: 1 for g in MOMENTUM_GENS},
            sector={g: ("momentum" if g in MOMENTUM_GENS else "lorentz")
                    for g in POINCARE_BASIS},
        )
    return _CACHE["poincare"]


def poincare_map() -> BasisMap:
    """Identification between the physical and light-cone Poincare bases."""
    if "poincare_map" not in _CACHE:
        phys, lc = poincare_physical(), poincare()
        half = Fraction(1, 2)
        mhalf_i = Scalar.from_gaussian(GaussianRational(0, -half))
        half_i = Scalar.from_gaussian(GaussianRational(0, half))
        forward = {
            "M1": mhalf_i * (lc.gen("e'+") + lc.gen("e'-")),
            "M2": mhalf_i * (lc.gen("e+") - lc.gen("e-")),
            "M3": _MI * lc.gen("h'"),
            "N1": mhalf_i * (lc.gen("e+") + lc.gen("e-")),
            "N2": half_i * (lc.gen("e'+") - lc.gen("e'-")),
            "N3": _MI * lc.gen("h"),
            "P0": _sc(half) * (lc.gen("P+") + lc.gen("P-")),
            "P1": lc.gen("P1"),
            "P2": lc.gen("P2"),
            "P3": _sc(half) * (lc.gen("P+") - lc.gen("P-")),
        }
        backward = {
            "P+": phys.gen("P0") + phys.gen("P3"),
            "P-": phys.gen("P0") - phys.gen("P3"),
            "P1": phys.gen("P1"),
            "P2": phys.gen("P2"),
            "e+": _I * (phys.gen("N1") + phys.gen("M2")),
            "e'+": _I * (phys.gen("M1") - phys.gen("N2")),
            "h": _I * phys.gen("N3"),
            "h'": _I * phys.gen("M3"),
            "e-": _I * (phys.gen("N1") - phys.gen("M2")),
            "e'-": _I * (phys.gen("M1") + phys.gen("N2")),
        }
        _CACHE["poincare_map"] = BasisMap("poincare_lightcone", phys, lc,
                                          forward, backward)
    return _CACHE["poincare_map"]


def lorentz_complex_map() -> BasisMap:
    """Identification between the canonical and complexified Lorentz bases."""
    if "lorentz_complex_map" not in _CACHE:
        can, cx = lorentz(), lorentz_complex()
        half = Scalar.from_gaussian(GaussianRational(Fraction(1, 2)))
        half_i = Scalar.from_gaussian(GaussianRational(0, Fraction(1, 2)))
        forward = {
            "e+": cx.gen("E1+") + cx.gen("E2+"),
            "e'+": _MI * (cx.gen("E1+") - cx.gen("E2+")),
            "h": cx.gen("H1") + cx.gen("H2"),
            "h'": _MI * (cx.gen("H1") - cx.gen("H2")),
            "e-": cx.gen("E1-") + cx.gen("E2-"),
            "e'-": _MI * (cx.gen("E1-") - cx.gen("E2-")),
        }
        backward = {
            "E1+": half * can.gen("e+") + half_i * can.gen("e'+"),
            "E2+": half * can.gen("e+") - half_i * can.gen("e'+"),
            "H1": half * can.gen("h") + half_i * can.gen("h'"),
            "H2": half * can.gen("h") - half_i * can.gen("h'"),
            "E1-": half * can.gen("e-") + half_i * can.gen("e'-"),
            "E2-": half * can.gen("e-") - half_i * can.gen("e'-"),
        }
        _CACHE["lorentz_complex_map"] = BasisMap("lorentz_complex", can, cx,
                                                 forward, backward)
    return _CACHE["lorentz_complex_map"]


def derive_lightcone_table() -> dict:
    """Recompute the light-cone structure constants from the physical table.

    Used by the regression test guarding the frozen literals above.
    """
    m = poincare_map()
    lc = poincare()
    out = {}
    for i in range(lc.dim):
        for j in range(i + 1, lc.dim):
            xi = m.apply(lc.gen(lc.basis[i]), "backward")
            xj = m.apply(lc.gen(lc.basis[j]), "backward")
            res = m.apply(bracket(xi, xj), "forward")
            if res.coeffs:
                out[(i, j)] = res.coeffs
    return out


def structure_table(A: LieAlgebra) -> str:
    """Plain-text audit dump: one line per nonzero structure constant."""
    lines = [f"# algebra {A.name}  basis: {' '.join(A.basis)}"]
    for (i, j) in sorted(A.table):
        for l in sorted(A.table[(i, j)]):
            c = A.table[(i, j)][l]
            lines.append(f"c[{A.basis[i]},{A.basis[j]};{A.basis[l]}] = {c!r}")
    return "\n".join(lines) + "\n"
