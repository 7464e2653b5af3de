"""The classification catalog: every r-matrix of the built-in algebras,
its expected Yang-Baxter class, its decomposition into subordinated pieces
with Abelian/Jordanian tags and verified Jordanian data, and the ordered
twist recipe where a twist is known.

Entry ids: "L1".."L4" for the Lorentz family, "1".."21" for the Poincare
rows, plus two report-only probes "tilde9" and "tilde12" (the undeformed
row-9 form with its chi parameter, and the row-12 form with alpha2 kept
symbolic).  The Poincare row 5 *is* the second Lorentz r-matrix; its twist
delegates to the Lorentz recipe, so eighteen of the Poincare rows carry a
twist of their own.

All r-matrices keep their parameters symbolic.  Twist factor recipes store
the exact exponential argument both as a printable string and as a builder
producing the truncated series under a specialization map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lie import LieAlgebra, LieElement, lorentz, lorentz_complex_map, poincare
from .rmatrix import Bivector, JordanianData, wedge
from .scalars import (
    GaussianRational,
    ParamSymbol,
    Scalar,
    SpecializationMap,
    specialize_laurent,
)
from .series import GradedSeries, lie_series, series_function, tensor2, wedge2
from .twist import FactorRecipe, TwistRecipe, jordanian_arguments

HOMOGENEOUS = "Homogeneous"
MODIFIED = "Modified"
NOT_CYBE = "NotCYBE"
REPORT_ONLY = "Report-only"

ABELIAN = "abelian"
JORDANIAN = "jordanian"
OTHER = "other"

PARAM_NAMES = ("alpha", "alpha_bar", "alpha1", "alpha2", "beta", "beta1",
               "beta2", "gamma", "gamma1", "chi", "lam", "xi")


class UnknownEntry(KeyError):
    pass


def params(reality: str = "unrestricted") -> dict:
    """Fresh symbolic parameters, all carrying the given reality flag."""
    return {n: Scalar.param(ParamSymbol(n, reality)) for n in PARAM_NAMES}


def _num(p, q=1) -> Scalar:
    return Scalar.from_gaussian(GaussianRational(Fraction(p, q)))


_HALF = _num(1, 2)
_I = Scalar.from_gaussian(GaussianRational(0, 1))


# ---------------------------------------------------------------------------
# r-matrix constructors
# ---------------------------------------------------------------------------

def lorentz_r(j: int, reality: str = "unrestricted") -> Bivector:
    """The four Lorentz r-matrices; the sign branch of the fourth one is
    carried by the parameter lam (reducible to +-1 by an automorphism).

    The fourth entry is fixed in the orientation where the jump term
    lam e+ ^ e'+ keeps the Schouten square invariant (the realification of
    its complexified two-piece form); equivalently it is the third entry at
    (-alpha, beta = 0, gamma = alpha) plus the jump.
    """
    L = lorentz()
    p = params(reality)
    ep, epp, h, hp, em, epm = L.gens("e+", "e'+", "h", "h'", "e-", "e'-")
    al, be, ga, lam = p["alpha"], p["beta"], p["gamma"], p["lam"]
    if j == 1:
        return al * wedge(ep, h)
    if j == 2:
        return al * (wedge(ep, h) - wedge(epp, hp)) + _num(2) * be * wedge(epp, ep)
    if j == 3:
        return (al * (wedge(epp, em) + wedge(ep, epm))
                + be * (wedge(ep, em) - wedge(epp, epm))
                - _num(2) * ga * wedge(h, hp))
    if j == 4:
        return (-1 * al * (wedge(epp, em) + wedge(ep, epm)
                           + _num(2) * wedge(h, hp))
                + lam * wedge(ep, epp))
    raise UnknownEntry(f"lorentz_r index {j}")


def b_pplus() -> Bivector:
    """P1 ^ e+ - P2 ^ e'+ + P+ ^ h."""
    P = poincare()
    return (wedge(P.gen("P1"), P.gen("e+")) - wedge(P.gen("P2"), P.gen("e'+"))
            + wedge(P.gen("P+"), P.gen("h")))


def b_p2() -> Bivector:
    """2 P1 ^ h' + P- ^ e'+ - P+ ^ e'-."""
    P = poincare()
    return (_num(2) * wedge(P.gen("P1"), P.gen("h'"))
            + wedge(P.gen("P-"), P.gen("e'+"))
            - wedge(P.gen("P+"), P.gen("e'-")))


@dataclass
class BHelper:
    b_Pplus: Bivector
    b_P2: Bivector


def b_helpers() -> BHelper:
    return BHelper(b_pplus(), b_p2())


def _p0(P: LieAlgebra) -> LieElement:
    return _HALF * (P.gen("P+") + P.gen("P-"))


def _p3(P: LieAlgebra) -> LieElement:
    return _HALF * (P.gen("P+") - P.gen("P-"))


def poincare_r(n, reality: str = "unrestricted") -> Bivector:
    """The Poincare catalog r-matrices by row number.

    Row 9 is the modified variant that actually satisfies the
    compatibility conditions; the undeformed row form is "tilde9".  Row 12
    is stored at alpha2 = 0 (the only value where it is a classical
    r-matrix); the symbolic-alpha2 form is "tilde12".  Row 5 is the second
    Lorentz r-matrix living inside the Poincare algebra.
    """
    P = poincare()
    p = params(reality)
    Pp, Pm, P1, P2 = P.gens("P+", "P-", "P1", "P2")
    ep, epp, h, hp, em, epm = P.gens("e+", "e'+", "h", "h'", "e-", "e'-")
    P0, P3 = _p0(P), _p3(P)
    al, alb = p["alpha"], p["alpha_bar"]
    a1, a2 = p["alpha1"], p["alpha2"]
    be, b1, b2 = p["beta"], p["beta1"], p["beta2"]
    ga, g1, chi = p["gamma"], p["gamma1"], p["chi"]

    if n == 1:
        return ga * wedge(hp, h) + al * wedge(Pp, Pm) + alb * wedge(P1, P2)
    if n == 2:
        return ga * wedge(epp, ep) + b1 * b_pplus() + b2 * wedge(Pp, hp)
    if n == 3:
        return ga * wedge(epp, ep) + b1 * b_pplus() + al * wedge(Pp, P1)
    if n == 4:
        return (ga * (wedge(epp, ep) + b1 * wedge(P1, ep) + b1 * wedge(P2, epp)
                      - b1 * b1 * wedge(P1, P2))
                + wedge(Pp, a1 * P1 + a2 * P2))
    if n == 5:
        return (al * (wedge(ep, h) - wedge(epp, hp))
                + _num(2) * be * wedge(epp, ep))
    if n == 6:
        return ga * wedge(h, ep) + b1 * b_p2() + b2 * wedge(P2, ep)
    if n == 7:
        return b1 * b_pplus() + b2 * wedge(Pp, hp)
    if n == 8:
        return b1 * b_pplus() + b2 * wedge(Pp, ep)
    if n == 9:
        y = b1 * ep + b2 * epp
        return (wedge(P1, y) + wedge(Pp, b1 * h + chi * y) + al * wedge(Pp, P2))
    if n == "tilde9":
        return (wedge(P1, b1 * ep + b2 * epp)
                + b1 * wedge(Pp, h + chi * ep) + al * wedge(Pp, P2))
    if n == 10:
        return (b1 * (wedge(P1, epp) + wedge(Pp, ep))
                + a1 * wedge(Pm, P1) + a2 * wedge(Pp, P2))
    if n == 11:
        return b1 * wedge(P2, ep) + a1 * wedge(Pp, P1) + a2 * wedge(Pm, P2)
    if n == 12:
        return (b1 * wedge(Pp, ep) + wedge(Pm, al * Pp + a1 * P1)
                + alb * wedge(Pp, P2))
    if n == "tilde12":
        return (b1 * wedge(Pp, ep) + wedge(Pm, al * Pp + a1 * P1 + a2 * P2)
                + alb * wedge(Pp, P2))
    if n == 13:
        return b1 * wedge(P0, hp) + a1 * wedge(P0, P3) + a2 * wedge(P1, P2)
    if n == 14:
        return b1 * wedge(P3, hp) + a1 * wedge(P0, P3) + a2 * wedge(P1, P2)
    if n == 15:
        return b1 * wedge(Pp, hp) + a1 * wedge(P0, P3) + a2 * wedge(P1, P2)
    if n == 16:
        return b1 * wedge(P1, h) + a1 * wedge(P0, P3) + a2 * wedge(P1, P2)
    if n == 17:
        return b1 * wedge(Pp, h) + a1 * wedge(P1, P2) + a2 * wedge(Pp, P1)
    if n == 18:
        return wedge(Pp, b1 * h + b2 * hp) + al * wedge(P1, P2)
    if n == 19:
        return al * wedge(P1, Pp)
    if n == 20:
        return al * wedge(P1, P2)
    if n == 21:
        return a1 * wedge(P0, P3) + a2 * wedge(P1, P2)
    raise UnknownEntry(f"poincare_r index {n}")


# ---------------------------------------------------------------------------
# Catalog data model
# ---------------------------------------------------------------------------

@dataclass
class Piece:
    name: str
    kind: str  # abelian | jordanian | other
    r: Bivector
    jordanian: JordanianData | None = None
    note: str = ""


@dataclass
class CatalogEntry:
    id: str
    algebra: str  # lorentz | poincare
    r: Bivector
    expected_cybe: str
    pieces: list = field(default_factory=list)
    claims: list = field(default_factory=list)  # [(prefix piece names, piece)]
    twist: TwistRecipe | None = None
    twist_note: str = ""
    report_only: bool = False
    decomposed: bool = True

    def piece(self, name: str) -> Piece:
        for p in self.pieces:
            if p.name == name:
                return p
        raise UnknownEntry(f"{self.id} has no piece {name}")

    def piece_sum(self) -> Bivector:
        out = Bivector.zero(self.r.algebra)
        for p in self.pieces:
            out = out + p.r
        return out


# ---------------------------------------------------------------------------
# Factor recipe helpers
# ---------------------------------------------------------------------------

def sigma_plus(m: SpecializationMap, ctx, order: int) -> GradedSeries:
    """sigma+ = (1/2) ln(1 + beta1 P+), shared by the Jordanian-bearing rows."""
    P = ctx.algebra
    b1 = Scalar.param(ParamSymbol("beta1"))
    arg = lie_series(b1 * P.gen("P+"), m, ctx, order)
    return series_function("log1p", arg).scale(GaussianRational(Fraction(1, 2)))


def _fr_wedge(label: str, x: LieElement, y: LieElement, describe: str) -> FactorRecipe:
    def build(m, order, ctx):
        return wedge2(lie_series(x, m, ctx, order), lie_series(y, m, ctx, order))
    return FactorRecipe(label, "abelian-exp", describe, build)


def _fr_wedge_sum(label: str, pairs: list, describe: str) -> FactorRecipe:
    def build(m, order, ctx):
        out = GradedSeries.zero(ctx, 2, order)
        for x, y in pairs:
            out = out + wedge2(lie_series(x, m, ctx, order),
                               lie_series(y, m, ctx, order))
        return out
    return FactorRecipe(label, "abelian-exp", describe, build)


def _fr_wedge_sigma(label: str, x: LieElement, coeff: Scalar | None,
                    describe: str, sigma_first: bool = False) -> FactorRecipe:
    def build(m, order, ctx):
        s = sigma_plus(m, ctx, order)
        xs = lie_series(x, m, ctx, order)
        w = wedge2(s, xs) if sigma_first else wedge2(xs, s)
        if coeff is not None:
            w = w.scale_laurent(specialize_laurent(coeff, m))
        return w
    return FactorRecipe(label, "abelian-exp", describe, build)


def _fr_jordanian(label: str, data: JordanianData, part: str,
                  describe: str) -> FactorRecipe:
    def build(m, order, ctx):
        args = jordanian_arguments(data, m, ctx, order)
        if part == "pairs":
            if len(args) != 2:
                raise UnknownEntry(f"{label}: no pairs factor")
            return args[0]
        return args[-1]
    return FactorRecipe(label, "jordanian-exp", describe, build)


# ---------------------------------------------------------------------------
# Entry construction
# ---------------------------------------------------------------------------

def _lorentz_entries(out: dict):
    L = lorentz()
    p = params()
    al, be, ga, lam = p["alpha"], p["beta"], p["gamma"], p["lam"]
    ep, epp, h, hp = L.gens("e+", "e'+", "h", "h'")
    cmap = lorentz_complex_map()

    def cx(name):
        return cmap.backward[name]

    # L1: the Jordanian r-matrix.
    r1 = lorentz_r(1)
    d1 = JordanianData(x0=L.gen("h"), y0=L.gen("e+"), pairs=[], xi=al, rmatrix=r1)
    out["L1"] = CatalogEntry(
        id="L1", algebra="lorentz", r=r1, expected_cybe=HOMOGENEOUS,
        pieces=[Piece("r'", JORDANIAN, r1, jordanian=d1)],
        twist=TwistRecipe("F_L1", "lorentz", [
            _fr_jordanian("F_L1", d1, "core",
                          "2 h (x) sigma,  sigma = (1/2) ln(1 + alpha e+)"),
        ]),
    )

    # L2: two-parameter twist with the sigma / phi pair.
    r2 = lorentz_r(2)

    def build_l2_head(m, order, ctx):
        A = lie_series(al * L.gen("e+"), m, ctx, order)
        B = lie_series(al * L.gen("e'+"), m, ctx, order)
        sig = series_function("log1p", A.scale(GaussianRational(2)) + A * A + B * B)
        sig = sig.scale(GaussianRational(Fraction(1, 2)))
        phi = series_function("arctan", B * series_function("geom_inv", A))
        coeff = _I * be / (al * al)
        return wedge2(sig, phi).scale_laurent(specialize_laurent(coeff, m))

    def build_l2_core(m, order, ctx):
        A = lie_series(al * L.gen("e+"), m, ctx, order)
        B = lie_series(al * L.gen("e'+"), m, ctx, order)
        sig = series_function("log1p", A.scale(GaussianRational(2)) + A * A + B * B)
        sig = sig.scale(GaussianRational(Fraction(1, 2)))
        phi = series_function("arctan", B * series_function("geom_inv", A))
        hs = lie_series(L.gen("h"), m, ctx, order)
        hps = lie_series(L.gen("h'"), m, ctx, order)
        return tensor2(hs, sig) - tensor2(hps, phi)

    out["L2"] = CatalogEntry(
        id="L2", algebra="lorentz", r=r2, expected_cybe=HOMOGENEOUS,
        pieces=[Piece("r", OTHER, r2,
                      note="quantized wholesale by the sigma/phi twist")],
        twist=TwistRecipe("F_L2", "lorentz", [
            FactorRecipe("F_L2:head", "series-exp",
                         "(i beta / alpha^2) sigma ^ phi", build_l2_head),
            FactorRecipe("F_L2:core", "series-exp",
                         "h (x) sigma - h' (x) phi,  "
                         "sigma = (1/2) ln((1+alpha e+)^2 + (alpha e'+)^2), "
                         "phi = arctan(alpha e'+ / (1 + alpha e+))",
                         build_l2_core),
        ]),
    )

    # L3 / L4: modified r-matrices, decomposed in the complexified basis.
    # Orientation of the two sl(2) coefficients fixed so the pieces sum to r.
    r3 = lorentz_r(3)
    zp = be + _I * al   # beta + i alpha
    zm = be - _I * al
    r3_main = (_num(2) * zm * wedge(cx("E1+"), cx("E1-"))
               + _num(2) * zp * wedge(cx("E2+"), cx("E2-")))
    r3_cartan = _num(4) * _I * ga * wedge(cx("H2"), cx("H1"))
    out["L3"] = CatalogEntry(
        id="L3", algebra="lorentz", r=r3, expected_cybe=MODIFIED,
        pieces=[
            Piece("r'", OTHER, r3_main,
                  note="sum of the two standard sl(2) r-matrices"),
            Piece("r''", ABELIAN, r3_cartan),
        ],
        claims=[(("r'",), "r''")],
        twist=None,
        twist_note="quantization passes through the q-deformed algebra; "
                   "out of scope for the classical engine",
    )

    r4 = lorentz_r(4)
    r4_main = _num(2) * _I * al * (wedge(cx("E1+"), cx("E1-"))
                                   - wedge(cx("E2+"), cx("E2-"))
                                   - _num(2) * wedge(cx("H1"), cx("H2")))
    r4_jump = _num(2) * _I * lam * wedge(cx("E1+"), cx("E2+"))
    out["L4"] = CatalogEntry(
        id="L4", algebra="lorentz", r=r4, expected_cybe=MODIFIED,
        pieces=[
            Piece("r'", OTHER, r4_main, note="Cartan-type modified part"),
            Piece("r''", ABELIAN, r4_jump),
        ],
        claims=[],
        twist=None,
        twist_note="q-exponential twist of the quantized algebra; out of scope",
    )


def _poincare_entries(out: dict):
    P = poincare()
    p = params()
    Pp, Pm, P1, P2 = P.gens("P+", "P-", "P1", "P2")
    ep, epp, h, hp, em, epm = P.gens("e+", "e'+", "h", "h'", "e-", "e'-")
    P0, P3 = _p0(P), _p3(P)
    al, alb = p["alpha"], p["alpha_bar"]
    a1, a2 = p["alpha1"], p["alpha2"]
    be, b1, b2 = p["beta"], p["beta1"], p["beta2"]
    ga, chi = p["gamma"], p["chi"]

    def entry(id_, r, pieces, claims, twist, **kw):
        out[id_] = CatalogEntry(id=id_, algebra="poincare", r=r,
                                expected_cybe=kw.pop("expected", HOMOGENEOUS),
                                pieces=pieces, claims=claims, twist=twist, **kw)

    # ---- 1
    r = poincare_r(1)
    rp = al * wedge(Pp, Pm) + alb * wedge(P1, P2)
    rpp = ga * wedge(hp, h)
    entry("1", r,
          [Piece("r'", ABELIAN, rp), Piece("r''", ABELIAN, rpp)],
          [(("r'",), "r''")],
          TwistRecipe("F_1", "poincare", [
              _fr_wedge("F_1''", ga * h, hp, "gamma h ^ h'"),
              _fr_wedge_sum("F_1'", [(al * Pm, Pp), (alb * P2, P1)],
                            "alpha P- ^ P+ + alpha_bar P2 ^ P1"),
          ]))

    # ---- shared Jordanian data for rows 2, 7, 8
    d_bp = JordanianData(
        x0=P.gen("h"), y0=P.gen("P+"),
        pairs=[(ep, P1, 0), (-1 * epp, P2, 0)], xi=b1,
        rmatrix=b1 * b_pplus())

    jord_bp_pairs = _fr_jordanian("F_bP+:pairs", d_bp, "pairs",
                                  "beta1 (e+ (x) P1 - e'+ (x) P2)")
    jord_bp_core = _fr_jordanian("F_bP+:core", d_bp, "core",
                                 "2 h (x) sigma+")

    # ---- 2
    r = poincare_r(2)
    entry("2", r,
          [Piece("r'", JORDANIAN, b1 * b_pplus(), jordanian=d_bp),
           Piece("r''", ABELIAN, ga * wedge(epp, ep)),
           Piece("r'''", ABELIAN, b2 * wedge(Pp, hp))],
          [(("r'",), "r''"), (("r'", "r''"), "r'''")],
          TwistRecipe("F_2", "poincare", [
              _fr_wedge_sigma("F_2'''", hp, b2 / b1, "(beta2/beta1) h' ^ sigma+"),
              _fr_wedge("F_2''", ga * ep, epp, "gamma e+ ^ e'+"),
              jord_bp_pairs, jord_bp_core,
          ]))

    # ---- 3
    r = poincare_r(3)
    d3 = JordanianData(
        x0=P.gen("h"), y0=P.gen("P+"),
        pairs=[(ep - (al / b1) * Pp, P1, 0), (-1 * epp, P2, 0)], xi=b1,
        rmatrix=(wedge(P1, b1 * ep - al * Pp) - b1 * wedge(P2, epp)
                 + b1 * wedge(Pp, h)))
    entry("3", r,
          [Piece("r'", JORDANIAN, d3.rmatrix, jordanian=d3),
           Piece("r''", ABELIAN, ga * wedge(epp, ep - (al / b1) * Pp)),
           Piece("r'''", ABELIAN, (ga * al / b1) * wedge(epp, Pp))],
          [(("r'",), "r''"), (("r'", "r''"), "r'''")],
          TwistRecipe("F_3", "poincare", [
              _fr_wedge_sigma("F_3'''", epp, ga * al / (b1 * b1),
                              "(gamma alpha / beta1^2) sigma+ ^ e'+",
                              sigma_first=True),
              _fr_wedge("F_3''", ga * (ep - (al / b1) * Pp), epp,
                        "gamma (e+ - (alpha/beta1) P+) ^ e'+"),
              _fr_jordanian("F_3':pairs", d3, "pairs",
                            "(beta1 e+ - alpha P+) (x) P1 - beta1 e'+ (x) P2"),
              _fr_jordanian("F_3':core", d3, "core", "2 h (x) sigma+"),
          ]))

    # ---- 4
    r = poincare_r(4)
    entry("4", r,
          [Piece("r'", ABELIAN, wedge(Pp, a1 * P1 + a2 * P2)),
           Piece("r''", ABELIAN, ga * wedge(epp + b1 * P1, ep - b1 * P2))],
          [(("r'",), "r''")],
          TwistRecipe("F_4", "poincare", [
              _fr_wedge("F_4''", ga * (ep - b1 * P1), epp + b1 * P2,
                        "gamma (e+ - beta1 P1) ^ (e'+ + beta1 P2)"),
              _fr_wedge("F_4'", a1 * P1 + a2 * P2, Pp,
                        "(alpha1 P1 + alpha2 P2) ^ P+"),
          ]))

    # ---- 5: the Lorentz r-matrix inside the Poincare algebra
    r = poincare_r(5)
    entry("5", r,
          [Piece("r", OTHER, r, note="second Lorentz r-matrix")],
          [],
          None,
          twist_note="twist is the Lorentz sigma/phi recipe (entry L2)",
          decomposed=False)

    # ---- 6: modified; no twist known
    r = poincare_r(6)
    d6 = JordanianData(x0=P.gen("h"), y0=P.gen("e+"), pairs=[],
                       xi=-1 * ga, rmatrix=ga * wedge(h, ep))
    entry("6", r,
          [Piece("r'", OTHER, b1 * b_p2(),
                 note="carries the invariant Schouten square (t != 0)"),
           Piece("r''", JORDANIAN, ga * wedge(h, ep), jordanian=d6),
           Piece("r'''", ABELIAN, b2 * wedge(P2, ep))],
          [(("r'",), "r''"), (("r'", "r''"), "r'''")],
          None,
          twist_note="no twist known for the modified piece",
          expected=MODIFIED)

    # ---- 7: row 2 at gamma = 0
    r = poincare_r(7)
    entry("7", r,
          [Piece("r'", JORDANIAN, b1 * b_pplus(), jordanian=d_bp),
           Piece("r''", ABELIAN, b2 * wedge(Pp, hp))],
          [(("r'",), "r''")],
          TwistRecipe("F_7", "poincare", [
              _fr_wedge_sigma("F_7''", hp, b2 / b1, "(beta2/beta1) h' ^ sigma+"),
              jord_bp_pairs, jord_bp_core,
          ]))

    # ---- 8
    r = poincare_r(8)
    entry("8", r,
          [Piece("r'", JORDANIAN, b1 * b_pplus(), jordanian=d_bp),
           Piece("r''", ABELIAN, b2 * wedge(Pp, ep))],
          [(("r'",), "r''")],
          TwistRecipe("F_8", "poincare", [
              _fr_wedge_sigma("F_8''", ep, b2 / b1, "(beta2/beta1) e+ ^ sigma+"),
              jord_bp_pairs, jord_bp_core,
          ]))

    # ---- 9 (modified variant)
    r = poincare_r(9)
    x19 = ep + (b2 / b1) * epp + (al * b2 / (b1 * b1)) * Pp
    x09 = h + (al / b1) * P2 + (al * b2 / (b1 * b1)) * P1
    d9 = JordanianData(
        x0=x09, y0=P.gen("P+"), pairs=[(x19, P1, 0)], xi=b1,
        rmatrix=(wedge(Pp, b1 * h + al * P2 + (al * b2 / b1) * P1)
                 + wedge(P1, b1 * ep + b2 * epp + (al * b2 / b1) * Pp)))
    r9pp = chi * wedge(Pp, b1 * ep + b2 * epp + (al * b2 / b1) * Pp)
    entry("9", r,
          [Piece("r'", JORDANIAN, d9.rmatrix, jordanian=d9),
           Piece("r''", ABELIAN, r9pp)],
          [(("r'",), "r''")],
          TwistRecipe("F_9", "poincare", [
              _fr_wedge_sigma("F_9''", chi * x19, None,
                              "chi (e+ + (beta2/beta1) e'+ "
                              "+ (alpha beta2/beta1^2) P+) ^ sigma+"),
              _fr_jordanian("F_9':pairs", d9, "pairs",
                            "(beta1 e+ + beta2 e'+ + (alpha beta2/beta1) P+) (x) P1"),
              _fr_jordanian("F_9':core", d9, "core",
                            "2 (h + (alpha/beta1) P2 "
                            "+ (alpha beta2/beta1^2) P1) (x) sigma+"),
          ]))

    # ---- 10
    r = poincare_r(10)
    entry("10", r,
          [Piece("r'", ABELIAN, b1 * wedge(Pp, ep)),
           Piece("r''", ABELIAN, wedge(P2, _num(2) * a1 * P1 - a2 * Pp)),
           Piece("r'''", ABELIAN, wedge(P1, b1 * epp - a1 * Pm + _num(2) * a1 * P2))],
          [(("r'",), "r''"), (("r'", "r''"), "r'''")],
          TwistRecipe("F_10", "poincare", [
              _fr_wedge("F_10'''", b1 * epp - a1 * Pm + _num(2) * a1 * P2, P1,
                        "(beta1 e'+ - alpha1 P- + 2 alpha1 P2) ^ P1"),
              _fr_wedge("F_10''", _num(2) * a1 * P1 - a2 * Pp, P2,
                        "(2 alpha1 P1 - alpha2 P+) ^ P2"),
              _fr_wedge("F_10'", b1 * ep, Pp, "beta1 e+ ^ P+"),
          ]))

    # ---- 11
    r = poincare_r(11)
    entry("11", r,
          [Piece("r'", ABELIAN, a1 * wedge(Pp, P1)),
           Piece("r''", ABELIAN, wedge(P2, b1 * ep - a2 * Pm))],
          [(("r'",), "r''")],
          TwistRecipe("F_11", "poincare", [
              _fr_wedge("F_11''", b1 * ep - a2 * Pm, P2,
                        "(beta1 e+ - alpha2 P-) ^ P2"),
              _fr_wedge("F_11'", a1 * P1, Pp, "alpha1 P1 ^ P+"),
          ]))

    # ---- 12: classical only at alpha2 = 0; no twist known
    r = poincare_r(12)
    entry("12", r,
          [Piece("r", OTHER, r, note="row-12 form at alpha2 = 0")],
          [],
          None,
          twist_note="no twist construction known",
          decomposed=False)

    # ---- 13..16: momenta plus one commuting boost/rotation leg
    mom = a1 * wedge(P0, P3) + a2 * wedge(P1, P2)
    mom_factor = _fr_wedge_sum(
        "F_mom", [(a1 * P3, P0), (a2 * P2, P1)],
        "alpha1 P3 ^ P0 + alpha2 P2 ^ P1")
    for n, (leg, partner, text) in {
        13: (hp, P0, "beta1 h' ^ P0"),
        14: (hp, P3, "beta1 h' ^ P3"),
        15: (hp, Pp, "beta1 h' ^ P+"),
        16: (h, P1, "beta1 h ^ P1"),
    }.items():
        rn = poincare_r(n)
        second = {13: wedge(P0, hp), 14: wedge(P3, hp),
                  15: wedge(Pp, hp), 16: wedge(P1, h)}[n]
        entry(str(n), rn,
              [Piece("r'", ABELIAN, mom), Piece("r''", ABELIAN, b1 * second)],
              [(("r'",), "r''")],
              TwistRecipe(f"F_{n}", "poincare", [
                  _fr_wedge(f"F_{n}''", b1 * leg, partner, text),
                  mom_factor,
              ]))

    # ---- 17: mutually subordinated pair; the factors commute
    r = poincare_r(17)
    d17 = JordanianData(x0=h + (a2 / b1) * P1, y0=P.gen("P+"), pairs=[], xi=b1,
                        rmatrix=wedge(Pp, b1 * h + a2 * P1))
    entry("17", r,
          [Piece("r'", JORDANIAN, d17.rmatrix, jordanian=d17),
           Piece("r''", ABELIAN, a1 * wedge(P1, P2))],
          [(("r'",), "r''"), (("r''",), "r'")],
          TwistRecipe("F_17", "poincare", [
              _fr_wedge("F_17''", a1 * P2, P1, "alpha1 P2 ^ P1"),
              _fr_jordanian("F_17'", d17, "core",
                            "2 (h + (alpha2/beta1) P1) (x) sigma+"),
          ]))

    # ---- 18
    r = poincare_r(18)
    d18 = JordanianData(x0=h + (b2 / b1) * hp, y0=P.gen("P+"), pairs=[], xi=b1,
                        rmatrix=wedge(Pp, b1 * h + b2 * hp))
    entry("18", r,
          [Piece("r'", ABELIAN, al * wedge(P1, P2)),
           Piece("r''", JORDANIAN, d18.rmatrix, jordanian=d18)],
          [(("r'",), "r''")],
          TwistRecipe("F_18", "poincare", [
              _fr_jordanian("F_18''", d18, "core",
                            "2 (h + (beta2/beta1) h') (x) sigma+"),
              _fr_wedge("F_18'", al * P2, P1, "alpha P2 ^ P1"),
          ]))

    # ---- 19..21: purely Abelian momenta
    entry("19", poincare_r(19),
          [Piece("r", ABELIAN, poincare_r(19))], [],
          TwistRecipe("F_19", "poincare", [
              _fr_wedge("F_19", al * Pp, P1, "alpha P+ ^ P1")]),
          decomposed=False)
    entry("20", poincare_r(20),
          [Piece("r", ABELIAN, poincare_r(20))], [],
          TwistRecipe("F_20", "poincare", [
              _fr_wedge("F_20", al * P2, P1, "alpha P2 ^ P1")]),
          decomposed=False)
    entry("21", poincare_r(21),
          [Piece("r", ABELIAN, poincare_r(21))], [],
          TwistRecipe("F_21", "poincare", [mom_factor]),
          decomposed=False)

    # ---- report-only probes
    entry("tilde9", poincare_r("tilde9"),
          [Piece("r", OTHER, poincare_r("tilde9"),
                 note="row-9 form with the chi term on the P1 leg")],
          [], None,
          twist_note="probe: verdicts reported, nothing asserted",
          expected=REPORT_ONLY, report_only=True, decomposed=False)
    entry("tilde12", poincare_r("tilde12"),
          [Piece("r", OTHER, poincare_r("tilde12"),
                 note="row-12 form with alpha2 symbolic (nonzero)")],
          [], None,
          twist_note="not a classical r-matrix for alpha2 != 0",
          expected=NOT_CYBE, report_only=True, decomposed=False)


_ENTRIES: dict | None = None

LORENTZ_IDS = ("L1", "L2", "L3", "L4")
POINCARE_IDS = tuple(str(n) for n in range(1, 22))
EXTRA_IDS = ("tilde9", "tilde12")


def entries() -> dict:
    global _ENTRIES
    if _ENTRIES is None:
        out: dict = {}
        _lorentz_entries(out)
        _poincare_entries(out)
        _ENTRIES = out
    return _ENTRIES


def entry(id_: str) -> CatalogEntry:
    try:
        return entries()[str(id_)]
    except KeyError:
        raise UnknownEntry(f"unknown catalog id {id_!r}") from None


def all_ids() -> tuple:
    return LORENTZ_IDS + POINCARE_IDS


def decomposition_plan(id_: str):
    """Pieces and subordination chain, or None where no plan exists."""
    e = entry(id_)
    if not e.decomposed:
        return None
    return {"pieces": e.pieces, "claims": e.claims}


def twist_plan(id_: str) -> TwistRecipe | None:
    return entry(id_).twist


def twist_equipped_poincare() -> tuple:
    """Poincare rows whose entry carries its own twist recipe."""
    return tuple(i for i in POINCARE_IDS
                 if entries()[i].twist is not None
                 and entries()[i].twist.algebra == "poincare")


def dump() -> str:
    """Stable plain-text rendering of the whole catalog, for diffing."""
    lines = []
    for id_ in all_ids() + EXTRA_IDS:
        e = entry(id_)
        lines.append(f"entry {e.id} [{e.algebra}] expected={e.expected_cybe}"
                     f"{' report-only' if e.report_only else ''}")
        lines.append(f"  r = {e.r!r}")
        for p in e.pieces:
            extra = f"  # {p.note}" if p.note else ""
            lines.append(f"  piece {p.name} [{p.kind}] = {p.r!r}{extra}")
            if p.jordanian is not None:
                d = p.jordanian
                lines.append(f"    jordanian: x0 = {d.x0!r}; y0 = {d.y0!r}; "
                             f"xi = {d.xi!r}; pairs = "
                             + "; ".join(f"(x{i} = {x!r}, y{i} = {y!r}, "
                                         f"t{i} = {t!r})"
                                         for i, (x, y, t) in
                                         enumerate(d.pairs, start=1)))
        for prefix, piece in e.claims:
            lines.append(f"  claim: {' + '.join(prefix)} > {piece}")
        if e.twist is not None:
            for desc in e.twist.describe():
                lines.append(f"  factor {desc}")
        else:
            lines.append(f"  twist: none ({e.twist_note})")
    return "\n".join(lines) + "\n"
