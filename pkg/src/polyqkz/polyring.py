"""Polynomial machinery.

* :class:`TauPoly` -- integer polynomials in one formal parameter (the loop
  weight tau, or alpha in the refined-ASM generating functions).
* :class:`CappedPoly` -- sparse multivariate polynomials with TauPoly
  coefficients whose exponents are truncated at per-variable caps. Only
  coefficients at or below the caps are ever read, so truncation is exact
  for them.
* :class:`AffineForm` / :class:`LinearFactorExpr` -- rational functions that
  are products and quotients of affine forms, with an exact simple-pole
  residue operation used to evaluate contour integrals.
"""
from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .scalar import rat

__all__ = [
    "TauPoly", "CappedPoly", "CapError", "capped_multiply", "extract_coefficient",
    "constant_term", "AffineForm", "LinearFactorExpr", "ResidueError",
    "cancel_common_factors", "residue_at_simple_pole",
]


class TauPoly:
    """Polynomial with integer coefficients; ``coeffs[k]`` multiplies tau**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c: int) -> TauPoly:
        return cls((c,))

    @classmethod
    def tau(cls) -> TauPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TauPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == TauPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = TauPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return TauPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TauPoly(-v for v in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = TauPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TauPoly(v * other for v in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return TauPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return TauPoly(out)

    __rmul__ = __mul__

    def __call__(self, t):
        """Horner evaluation at an exact scalar."""
        acc = rat(0)
        for v in reversed(self.coeffs):
            acc = acc * t + v
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"TauPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, v in enumerate(self.coeffs):
            if v == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and v == 1:
                parts.append(mono)
            elif mono and v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}{'*' + mono if mono else ''}")
        return " + ".join(parts).replace("+ -", "- ")


class CapError(ValueError):
    """Raised on mismatched caps or exponents beyond a cap."""


class CappedPoly:
    """Sparse polynomial in k variables with per-variable degree caps.

    ``terms`` maps exponent tuples to nonzero :class:`TauPoly` coefficients.
    Monomials exceeding any cap are dropped on construction and in products.
    """

    __slots__ = ("caps", "terms")

    def __init__(self, caps: Sequence[int], terms: Mapping[tuple, TauPoly] | None = None):
        self.caps = tuple(caps)
        self.terms: dict[tuple, TauPoly] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, TauPoly):
                    c = TauPoly.const(c)
                if c and len(e) == len(self.caps) and all(x <= m for x, m in zip(e, self.caps)):
                    self.terms[tuple(e)] = c

    @property
    def nvars(self) -> int:
        return len(self.caps)

    @classmethod
    def one(cls, caps: Sequence[int]) -> CappedPoly:
        return cls(caps, {(0,) * len(caps): TauPoly.const(1)})

    @classmethod
    def from_list(cls, caps: Sequence[int], items: Iterable[tuple[tuple, TauPoly | int]]) -> CappedPoly:
        acc: dict[tuple, TauPoly] = {}
        for e, c in items:
            if not isinstance(c, TauPoly):
                c = TauPoly.const(c)
            acc[e] = acc[e] + c if e in acc else c
        return cls(caps, acc)

    def __mul__(self, other: CappedPoly) -> CappedPoly:
        return capped_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, CappedPoly) and self.caps == other.caps and self.terms == other.terms

    def coefficient(self, exponents: Sequence[int]) -> TauPoly:
        return extract_coefficient(self, exponents)

    def take(self, var: int, exponent: int) -> CappedPoly:
        """Coefficient of u_var**exponent, as a polynomial in the other variables."""
        if exponent > self.caps[var]:
            raise CapError(f"exponent {exponent} exceeds cap {self.caps[var]} of variable {var}")
        caps = self.caps[:var] + self.caps[var + 1:]
        out = CappedPoly(caps)
        for e, c in self.terms.items():
            if e[var] == exponent:
                out.terms[e[:var] + e[var + 1:]] = c
        return out

    def __repr__(self):
        return f"CappedPoly(caps={self.caps}, terms={len(self.terms)})"


def capped_multiply(p: CappedPoly, q: CappedPoly) -> CappedPoly:
    """Truncated product; exact at every exponent vector within the caps."""
    if p.caps != q.caps:
        raise CapError(f"cap mismatch: {p.caps} vs {q.caps}")
    caps = p.caps
    k = len(caps)
    acc: dict[tuple, TauPoly] = {}
    qitems = list(q.terms.items())
    for e1, c1 in p.terms.items():
        for e2, c2 in qitems:
            e = tuple(e1[i] + e2[i] for i in range(k))
            if any(e[i] > caps[i] for i in range(k)):
                continue
            c = c1 * c2
            if e in acc:
                acc[e] = acc[e] + c
            else:
                acc[e] = c
    out = CappedPoly(caps)
    out.terms = {e: c for e, c in acc.items() if c}
    return out


def extract_coefficient(p: CappedPoly, exponents: Sequence[int]) -> TauPoly:
    """Coefficient of prod u_l**exponents[l]; the zero polynomial if absent."""
    e = tuple(exponents)
    if len(e) != p.nvars:
        raise CapError("exponent vector has the wrong length")
    if any(x < 0 for x in e):
        raise CapError("negative exponent")
    if any(x > m for x, m in zip(e, p.caps)):
        raise CapError(f"exponents {e} exceed caps {p.caps}")
    return p.terms.get(e, TauPoly())


# Factor builders used by constant_term: single(cap) -> CappedPoly in u_0 alone,
# pair(cap_l, cap_m) -> CappedPoly in (u_l, u_m).
SingleFactor = Callable[[int], Sequence[tuple[tuple[int], TauPoly]]]
PairFactor = Callable[[int, int], Sequence[tuple[tuple[int, int], TauPoly]]]


def _lift_factor(items, positions, nvars, caps) -> CappedPoly:
    terms = []
    for e, c in items:
        full = [0] * nvars
        for pos, x in zip(positions, e):
            full[pos] = x
        terms.append((tuple(full), c))
    return CappedPoly.from_list(caps, terms)


def constant_term(
    exponents: Sequence[int],
    single: SingleFactor | None,
    pair: PairFactor | None,
) -> TauPoly:
    """Coefficient of prod_l u_l**exponents[l] in prod_l single(u_l) * prod_{l<m} pair(u_l, u_m).

    Variables are eliminated one at a time: all factors whose lowest variable
    is u_l are folded in, then the u_l coefficient is taken. Negative
    exponents give zero.
    """
    ex = list(exponents)
    if any(x < 0 for x in ex):
        return TauPoly()
    k = len(ex)
    current = CappedPoly.one(ex)
    for level in range(k):
        caps = current.caps
        local_n = k - level
        if single is not None:
            current = current * _lift_factor(single(caps[0]), (0,), local_n, caps)
        if pair is not None:
            for m in range(1, local_n):
                current = current * _lift_factor(pair(caps[0], caps[m]), (0, m), local_n, caps)
        current = current.take(0, ex[level])
        if not current.terms:
            return TauPoly()
    return current.terms.get((), TauPoly())


# --------------------------------------------------------------------------
# Affine forms and linear-factor rational expressions
# --------------------------------------------------------------------------

class ResidueError(ArithmeticError):
    """A residue was requested at a point that is not a simple pole."""


def _exact(x):
    return rat(x) if isinstance(x, int) else x


class AffineForm:
    """sum_l coeffs[l] * w_l + const, with exact scalar coefficients."""

    __slots__ = ("coeffs", "const")

    def __init__(self, coeffs: Mapping[int, object] | None = None, const=0):
        self.coeffs = {v: _exact(c) for v, c in (coeffs or {}).items() if c}
        self.const = _exact(const)

    @classmethod
    def var(cls, index: int, coeff=1, const=0) -> AffineForm:
        return cls({index: coeff}, const)

    def is_constant(self) -> bool:
        return not self.coeffs

    def substitute(self, var: int, value) -> AffineForm:
        c = self.coeffs.get(var)
        if c is None:
            return self
        rest = dict(self.coeffs)
        del rest[var]
        return AffineForm(rest, self.const + c * value)

    def evaluate(self, point: Mapping[int, object]):
        acc = self.const
        for v, c in self.coeffs.items():
            acc = acc + c * point[v]
        return acc

    def _leading(self):
        if self.coeffs:
            return self.coeffs[min(self.coeffs)]
        return self.const

    def normalized(self) -> tuple:
        """Hashable key equal for forms that differ by a nonzero scalar."""
        lead = self._leading()
        if not lead:
            return ("zero",)
        return (tuple(sorted((v, c / lead) for v, c in self.coeffs.items())), self.const / lead)

    def ratio_to(self, other: AffineForm):
        """self / other when the two are proportional."""
        return self._leading() / other._leading()

    def __repr__(self):
        body = " + ".join(f"({c})*w{v}" for v, c in sorted(self.coeffs.items()))
        return f"AffineForm({body or '0'} + ({self.const}))"


class LinearFactorExpr:
    """prefactor * prod(numerator) / prod(denominator), factors being AffineForms.

    Constant factors are folded into the prefactor as soon as they appear.
    """

    __slots__ = ("prefactor", "numerator", "denominator")

    def __init__(self, prefactor=1, numerator: Iterable[AffineForm] = (), denominator: Iterable[AffineForm] = ()):
        pref = prefactor
        num, den = [], []
        for f in numerator:
            if f.is_constant():
                pref = pref * f.const
            else:
                num.append(f)
        for f in denominator:
            if f.is_constant():
                if not f.const:
                    raise ResidueError("a denominator factor vanishes identically (non-generic parameters)")
                pref = pref / f.const
            else:
                den.append(f)
        self.prefactor = pref
        self.numerator = num
        self.denominator = den

    def variables(self) -> set[int]:
        out: set[int] = set()
        for f in self.numerator + self.denominator:
            out.update(f.coeffs)
        return out

    def evaluate(self, point: Mapping[int, object]):
        val = self.prefactor
        for f in self.numerator:
            val = val * f.evaluate(point)
        for f in self.denominator:
            d = f.evaluate(point)
            if not d:
                raise ZeroDivisionError("pole hit during evaluation")
            val = val / d
        return val

    def __repr__(self):
        return (f"LinearFactorExpr(prefactor={self.prefactor!r}, "
                f"num={len(self.numerator)}, den={len(self.denominator)})")


def cancel_common_factors(e: LinearFactorExpr) -> LinearFactorExpr:
    """Remove numerator/denominator pairs that agree up to a scalar."""
    if not e.numerator or not e.denominator:
        return e
    pool: dict[tuple, list[AffineForm]] = {}
    for f in e.denominator:
        pool.setdefault(f.normalized(), []).append(f)
    pref = e.prefactor
    kept_num = []
    for f in e.numerator:
        bucket = pool.get(f.normalized())
        if bucket:
            g = bucket.pop()
            pref = pref * f.ratio_to(g)
        else:
            kept_num.append(f)
    kept_den = [f for bucket in pool.values() for f in bucket]
    out = LinearFactorExpr(pref)
    out.numerator = kept_num
    out.denominator = kept_den
    return out


def residue_at_simple_pole(e: LinearFactorExpr, var: int, point) -> LinearFactorExpr:
    """Residue in ``var`` at ``point`` of a simple pole, as an expression in the other variables."""
    e = cancel_common_factors(e)
    hits = []
    for idx, f in enumerate(e.denominator):
        c = f.coeffs.get(var)
        if c is None:
            continue
        g = f.substitute(var, point)
        if g.is_constant() and not g.const:
            hits.append(idx)
    if not hits:
        raise ResidueError(f"no pole of w{var} at {point}")
    if len(hits) > 1:
        raise ResidueError(f"higher-order pole of w{var} at {point}")
    pole = e.denominator[hits[0]]
    pref = e.prefactor / pole.coeffs[var]
    num = [f.substitute(var, point) for f in e.numerator]
    den = [f.substitute(var, point) for i, f in enumerate(e.denominator) if i != hits[0]]
    return LinearFactorExpr(pref, num, den)
