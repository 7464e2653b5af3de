"""Universal enveloping algebra in PBW normal form, with tensor powers.

Monomials are ascending products of generators in the algebra's declared
PBW order, stored sparsely as ``((gen_index, exponent), ...)``.  Products
are computed by a local pair-exchange rewriting system: an out-of-order
adjacent pair g_k g_j (j < k) rewrites to g_j g_k + [g_k, g_j], which
terminates because the bracket closes inside the Lie algebra.  All pair
products are memoized per (algebra, coefficient domain); that cache is what
keeps the degree-4 twist checks affordable.

Two coefficient domains are supported: exact Gaussian rationals (the series
layer) and the full symbolic scalar field (the Yang-Baxter cross-check on
parameterized r-matrices).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .lie import LieAlgebra, LieError
from .rmatrix import Bivector
from .scalars import GR_ONE, GaussianRational, Scalar, _coerce_gr, _coerce_scalar

# A PBW monomial: tuple of (generator index, exponent), indices ascending.
PBWMonomial = tuple

UNIT: PBWMonomial = ()


def monomial(pairs) -> PBWMonomial:
    out = []
    for g, e in pairs:
        if e < 0:
            raise ValueError("negative exponent")
        if e:
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + e)
            else:
                if out and out[-1][0] > g:
                    raise ValueError("monomial not in PBW order")
                out.append((g, e))
    return tuple(out)


def mono_degree(m: PBWMonomial) -> int:
    return sum(e for _, e in m)


def mono_word(m: PBWMonomial):
    for g, e in m:
        for _ in range(e):
            yield g


# ---------------------------------------------------------------------------
# Coefficient domains
# ---------------------------------------------------------------------------

class _GaussianDomain:
    name = "gaussian"
    one = GaussianRational(1)

    @staticmethod
    def from_int(n):
        return GaussianRational(n)

    @staticmethod
    def from_structure(c: Scalar):
        return c.to_gaussian()

    @staticmethod
    def coerce(c):
        if isinstance(c, GaussianRational):
            return c
        if isinstance(c, Scalar):
            return c.to_gaussian()
        return _coerce_gr(c)


class _SymbolicDomain:
    name = "symbolic"
    one = Scalar.from_gaussian(GR_ONE)

    @staticmethod
    def from_int(n):
        return Scalar.from_gaussian(GaussianRational(n))

    @staticmethod
    def from_structure(c: Scalar):
        return c

    @staticmethod
    def coerce(c):
        return _coerce_scalar(c)


GAUSSIAN = _GaussianDomain()
SYMBOLIC = _SymbolicDomain()

_CTX_CACHE: dict = {}


def context(algebra: LieAlgebra, domain=GAUSSIAN) -> "PBWContext":
    key = (id(algebra), domain.name)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = PBWContext(algebra, domain)
        _CTX_CACHE[key] = ctx
    return ctx


# ---------------------------------------------------------------------------
# The rewriting engine
# ---------------------------------------------------------------------------

class PBWContext:
    """Normal-ordering engine for one algebra and one coefficient domain.

    Elements are plain dicts {PBWMonomial: coeff}; the context provides the
    products, coproduct, counit and antipode, all memoized at the monomial
    level.
    """

    def __init__(self, algebra: LieAlgebra, domain=GAUSSIAN):
        self.algebra = algebra
        self.domain = domain
        self._brackets = {}
        for (i, j), terms in algebra.table.items():
            row = [(l, domain.from_structure(c)) for l, c in terms.items()]
            self._brackets[(i, j)] = row
            self._brackets[(j, i)] = [(l, -c) for l, c in row]
        self._gen_mono: dict = {}
        self._mul_mono: dict = {}
        self._coprod: dict = {}
        self._antipode: dict = {}

    # -- element helpers -----------------------------------------------------
    def zero(self) -> dict:
        return {}

    def unit(self) -> dict:
        return {UNIT: self.domain.one}

    def gen(self, name: str) -> dict:
        return {((self.algebra.index[name], 1),): self.domain.one}

    def from_lie(self, x) -> dict:
        if x.algebra is not self.algebra:
            raise LieError("element from another algebra")
        return {((i, 1),): self.domain.from_structure(c)
                for i, c in x.coeffs.items()}

    def add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for m, c in b.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return out

    def scale(self, a: dict, c) -> dict:
        if not c:
            return {}
        return {m: v * c for m, v in a.items()}

    def neg(self, a: dict) -> dict:
        return {m: -v for m, v in a.items()}

    def is_zero(self, a: dict) -> bool:
        return not a

    def equal(self, a: dict, b: dict) -> bool:
        if set(a) != set(b):
            return False
        return all(a[m] == b[m] for m in a)

    # -- products --------------------------------------------------------------
    def _gen_times_mono(self, g: int, m: PBWMonomial) -> dict:
        """Normal form of g * m for a single generator g."""
        key = (g, m)
        out = self._gen_mono.get(key)
        if out is not None:
            return out
        if not m:
            out = {((g, 1),): self.domain.one}
        else:
            b, e = m[0]
            if g < b:
                out = {((g, 1),) + m: self.domain.one}
            elif g == b:
                out = {((g, e + 1),) + m[1:]: self.domain.one}
            else:
                # g > b: g b^e rest = b (g b^(e-1) rest) + [g,b] b^(e-1) rest
                tail = ((b, e - 1),) + m[1:] if e > 1 else m[1:]
                inner = self._gen_times_mono(g, tail)
                acc: dict = {}
                for mono, c in inner.items():
                    for mono2, c2 in self._gen_times_mono(b, mono).items():
                        s = acc.get(mono2)
                        v = c * c2
                        s = v if s is None else s + v
                        if s:
                            acc[mono2] = s
                        else:
                            acc.pop(mono2, None)
                for l, cl in self._brackets.get((g, b), ()):
                    for mono, c in self._gen_times_mono(l, tail).items():
                        s = acc.get(mono)
                        v = cl * c
                        s = v if s is None else s + v
                        if s:
                            acc[mono] = s
                        else:
                            acc.pop(mono, None)
                out = acc
        self._gen_mono[key] = out
        return out

    def mul_mono(self, m1: PBWMonomial, m2: PBWMonomial) -> dict:
        """Normal form of the product of two PBW monomials."""
        if not m1:
            return {m2: self.domain.one}
        if not m2:
            return {m1: self.domain.one}
        if m1[-1][0] < m2[0][0]:
            return {m1 + m2: self.domain.one}
        if m1[-1][0] == m2[0][0]:
            g, e = m1[-1]
            joined = m1[:-1] + ((g, e + m2[0][1]),) + m2[1:]
            return {joined: self.domain.one}
        key = (m1, m2)
        out = self._mul_mono.get(key)
        if out is not None:
            return out
        word = list(mono_word(m1))
        acc = {m2: self.domain.one}
        for g in reversed(word):
            nxt: dict = {}
            for mono, c in acc.items():
                for mono2, c2 in self._gen_times_mono(g, mono).items():
                    s = nxt.get(mono2)
                    v = c * c2
                    s = v if s is None else s + v
                    if s:
                        nxt[mono2] = s
                    else:
                        nxt.pop(mono2, None)
            acc = nxt
        self._mul_mono[key] = acc
        return acc

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                c = c1 * c2
                for m, k in self.mul_mono(m1, m2).items():
                    s = out.get(m)
                    v = c * k
                    s = v if s is None else s + v
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
        return out

    def normalize_word(self, word, coeff=None) -> dict:
        """PBW normal form of an arbitrary product of generators."""
        acc = {UNIT: self.domain.one if coeff is None else self.domain.coerce(coeff)}
        for g in reversed([self.algebra.index[w] if isinstance(w, str) else w
                           for w in word]):
            nxt: dict = {}
            for mono, c in acc.items():
                for mono2, c2 in self._gen_times_mono(g, mono).items():
                    s = nxt.get(mono2)
                    v = c * c2
                    s = v if s is None else s + v
                    if s:
                        nxt[mono2] = s
                    else:
                        nxt.pop(mono2, None)
            acc = nxt
        return acc

    # -- Hopf structure -----------------------------------------------------------
    def coproduct_mono(self, m: PBWMonomial) -> dict:
        """Delta(m) as {(m_left, m_right): coeff}; generators are primitive."""
        out = self._coprod.get(m)
        if out is not None:
            return out
        splits = {(UNIT, UNIT): self.domain.one}
        for g, e in m:
            nxt: dict = {}
            binoms = [self.domain.from_int(comb(e, k)) for k in range(e + 1)]
            for (ml, mr), c in splits.items():
                for k in range(e + 1):
                    left = ml + ((g, k),) if k else ml
                    right = mr + ((g, e - k),) if e - k else mr
                    v = c * binoms[k]
                    s = nxt.get((left, right))
                    s = v if s is None else s + v
                    nxt[(left, right)] = s
            splits = nxt
        self._coprod[m] = splits
        return splits

    def counit_mono(self, m: PBWMonomial):
        return self.domain.one if m == UNIT else None

    def antipode_mono(self, m: PBWMonomial) -> dict:
        """S(m): reversed product of negated generators, renormalized."""
        out = self._antipode.get(m)
        if out is not None:
            return out
        word = list(mono_word(m))
        out = self.normalize_word(list(reversed(word)))
        if len(word) % 2:
            out = self.neg(out)
        self._antipode[m] = out
        return out

    def coproduct(self, a: dict) -> dict:
        out: dict = {}
        for m, c in a.items():
            for (ml, mr), k in self.coproduct_mono(m).items():
                s = out.get((ml, mr))
                v = c * k
                s = v if s is None else s + v
                if s:
                    out[(ml, mr)] = s
                else:
                    out.pop((ml, mr), None)
        return out

    def counit(self, a: dict):
        c = a.get(UNIT)
        return c if c is not None else self.domain.from_int(0)

    def antipode(self, a: dict) -> dict:
        out: dict = {}
        for m, c in a.items():
            for m2, k in self.antipode_mono(m).items():
                s = out.get(m2)
                v = c * k
                s = v if s is None else s + v
                if s:
                    out[m2] = s
                else:
                    out.pop(m2, None)
        return out

    # -- tensor powers ---------------------------------------------------------
    def tensor_mul(self, a: dict, b: dict, rank: int) -> dict:
        """Slotwise product of rank-2 or rank-3 tensor elements."""
        out: dict = {}
        for t1, c1 in a.items():
            for t2, c2 in b.items():
                c = c1 * c2
                parts = [self.mul_mono(t1[s], t2[s]) for s in range(rank)]
                if rank == 2:
                    for ma, ka in parts[0].items():
                        for mb, kb in parts[1].items():
                            v = c * ka * kb
                            key = (ma, mb)
                            s = out.get(key)
                            s = v if s is None else s + v
                            if s:
                                out[key] = s
                            else:
                                out.pop(key, None)
                else:
                    for ma, ka in parts[0].items():
                        cka = c * ka
                        for mb, kb in parts[1].items():
                            ckab = cka * kb
                            for mc, kc in parts[2].items():
                                v = ckab * kc
                                key = (ma, mb, mc)
                                s = out.get(key)
                                s = v if s is None else s + v
                                if s:
                                    out[key] = s
                                else:
                                    out.pop(key, None)
        return out

    def tensor_add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for t, c in b.items():
            s = out.get(t)
            s = c if s is None else s + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return out

    def pretty(self, a: dict, tensor: bool = False) -> str:
        if not a:
            return "0"
        names = self.algebra.basis

        def mono_str(m):
            if not m:
                return "1"
            return "*".join(names[g] if e == 1 else f"{names[g]}^{e}"
                            for g, e in m)

        bits = []
        for key in sorted(a):
            c = a[key]
            body = (" (x) ".join(mono_str(m) for m in key) if tensor
                    else mono_str(key))
            bits.append(f"({c!r})*{body}" if c != self.domain.one else body)
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Convenience element wrappers (thin; the dicts above do the work)
# ---------------------------------------------------------------------------

class UEAElement:
    """Enveloping-algebra element bound to a context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: PBWContext, terms: dict):
        self.ctx = ctx
        self.terms = {m: c for m, c in terms.items() if c}

    def __add__(self, other):
        return UEAElement(self.ctx, self.ctx.add(self.terms, other.terms))

    def __sub__(self, other):
        return UEAElement(self.ctx, self.ctx.add(self.terms,
                                                 self.ctx.neg(other.terms)))

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return UEAElement(self.ctx, self.ctx.mul(self.terms, other.terms))
        return UEAElement(self.ctx, self.ctx.scale(self.terms,
                                                   self.ctx.domain.coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return UEAElement(self.ctx, self.ctx.neg(self.terms))

    def __eq__(self, other):
        return self.ctx is other.ctx and self.ctx.equal(self.terms, other.terms)

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return self.ctx.pretty(self.terms)


def pbw_normalize(ctx: PBWContext, word, coeff=None) -> UEAElement:
    """Normal form of a generator word (names or indices) times a scalar."""
    return UEAElement(ctx, ctx.normalize_word(word, coeff))


def multiply(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b


class TensorElement:
    """Rank-2 or rank-3 tensor over the enveloping algebra."""

    __slots__ = ("ctx", "rank", "terms")

    def __init__(self, ctx: PBWContext, rank: int, terms: dict):
        if rank not in (2, 3):
            raise ValueError("rank must be 2 or 3")
        self.ctx = ctx
        self.rank = rank
        self.terms = {t: c for t, c in terms.items() if c}

    def __add__(self, other):
        assert self.rank == other.rank
        return TensorElement(self.ctx, self.rank,
                             self.ctx.tensor_add(self.terms, other.terms))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.ctx, self.rank,
                             {t: -c for t, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            assert self.rank == other.rank
            return TensorElement(
                self.ctx, self.rank,
                self.ctx.tensor_mul(self.terms, other.terms, self.rank))
        c = self.ctx.domain.coerce(other)
        return TensorElement(self.ctx, self.rank,
                             {t: v * c for t, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (self.ctx is other.ctx and self.rank == other.rank
                and self.ctx.equal(self.terms, other.terms))

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return self.ctx.pretty(self.terms, tensor=True)


def tensor_multiply(a: TensorElement, b: TensorElement) -> TensorElement:
    return a * b


def coproduct(x: UEAElement) -> TensorElement:
    return TensorElement(x.ctx, 2, {(ml, mr): c for (ml, mr), c
                                    in x.ctx.coproduct(x.terms).items()})


def counit(x: UEAElement):
    return x.ctx.counit(x.terms)


def antipode(x: UEAElement) -> UEAElement:
    return UEAElement(x.ctx, x.ctx.antipode(x.terms))


# ---------------------------------------------------------------------------
# Tensor-cube Yang-Baxter evaluation
# ---------------------------------------------------------------------------

def _embed3(terms: dict, slots: tuple) -> dict:
    out = {}
    for (m1, m2), c in terms.items():
        key = [UNIT, UNIT, UNIT]
        key[slots[0]] = m1
        key[slots[1]] = m2
        out[tuple(key)] = c
    return out


def cybe_lhs_tensor(r: Bivector, domain=SYMBOLIC) -> TensorElement:
    """[r12, r13] + [r12, r23] + [r13, r23] evaluated in U(g)^(x)3.

    The bivector embeds with the wedge convention x^y = x(x)y - y(x)x; the
    result equals schouten(r, r) embedded as the full alternating sum times
    one half (the fixed convention factor of this package).
    """
    ctx = context(r.algebra, domain)
    pairs = {}
    for (j, k), c in r.coeffs.items():
        cc = domain.from_structure(c)
        pairs[(((j, 1),), ((k, 1),))] = cc
        pairs[(((k, 1),), ((j, 1),))] = -cc
    r12 = TensorElement(ctx, 3, _embed3(pairs, (0, 1)))
    r13 = TensorElement(ctx, 3, _embed3(pairs, (0, 2)))
    r23 = TensorElement(ctx, 3, _embed3(pairs, (1, 2)))

    def comm(a, b):
        return a * b - b * a

    return comm(r12, r13) + comm(r12, r23) + comm(r13, r23)


def trivector_tensor(t, domain=SYMBOLIC) -> TensorElement:
    """Embed a trivector as the full six-term alternating tensor sum."""
    ctx = context(t.algebra, domain)
    out: dict = {}
    perms = [((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
             ((1, 0, 2), -1), ((0, 2, 1), -1), ((2, 1, 0), -1)]
    for (j, k, l), c in t.coeffs.items():
        cc = domain.from_structure(c)
        gens = (((j, 1),), ((k, 1),), ((l, 1),))
        for perm, sign in perms:
            key = tuple(gens[p] for p in perm)
            v = cc if sign > 0 else -cc
            s = out.get(key)
            s = v if s is None else s + v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return TensorElement(ctx, 3, out)
