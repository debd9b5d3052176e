"""Rational generating functions and exponential generating functions.

Poincare series come from two independent routes: Cramer determinants over
the polynomial ring (valid for any digraph adjacency), and exact character
sums combined over a common denominator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycNum
from .errors import ConsistencyError, UnsupportedQueryError
from .groups import FULL, GroupData, ModuleChar
from .polynomials import Polynomial, poly_det, poly_gcd
from .quiver import WalkMatrix


class RatFunc:
    """Reduced ratio of rational-coefficient polynomials in t.

    Canonical form: gcd(num, den) = 1 and den monic; den(0) != 0 so a power
    series at t = 0 exists."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not g.is_zero() and g.degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead_inv = Fraction(1) / Fraction(den.leading())
        num = num * lead_inv
        den = den * lead_inv
        if den.coefficient(0) == 0:
            raise ValueError("denominator vanishes at t = 0; no power series")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    def series(self, order: int) -> list[Fraction]:
        """Maclaurin coefficients c_0..c_order."""
        d0 = Fraction(self.den.coefficient(0))
        out: list[Fraction] = []
        for k in range(order + 1):
            acc = Fraction(self.num.coefficient(k))
            for j in range(1, min(k, self.den.degree()) + 1):
                acc -= Fraction(self.den.coefficient(j)) * out[k - j]
            out.append(acc / d0)
        return out

    def display_pair(self) -> tuple[Polynomial, Polynomial]:
        """(num, den) scaled so den(0) = 1, the natural form for display."""
        s = Fraction(1) / Fraction(self.den.coefficient(0))
        return self.num * s, self.den * s

    def to_text(self) -> str:
        num, den = self.display_pair()
        return f"({num.to_text()}) / ({den.to_text()})"

    def to_json(self) -> str:
        num, den = self.display_pair()
        return json.dumps({"num": [str(Fraction(c)) for c in num.coeffs],
                           "den": [str(Fraction(c)) for c in den.coeffs]})

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __repr__(self):
        return f"RatFunc({self.to_text()})"


def ratfunc(num_coeffs, den_coeffs) -> RatFunc:
    return RatFunc(Polynomial(num_coeffs), Polynomial(den_coeffs))


def _adjacency_rows(a) -> list[list[int]]:
    if isinstance(a, WalkMatrix):
        return a.rows()
    return [list(r) for r in a]


def _identity_minus_t(rows, transpose: bool) -> list[list[Polynomial]]:
    n = len(rows)
    out = []
    for i in range(n):
        line = []
        for j in range(n):
            entry = rows[j][i] if transpose else rows[i][j]
            const = 1 if i == j else 0
            line.append(Polynomial((const, -entry)))
        out.append(line)
    return out


def walk_generating_function(a, source: int, target: int) -> RatFunc:
    """Ordinary generating function of (A^k)[source][target] for any digraph:
    det of (I - t A^T) with column `target` replaced by the source indicator,
    over det(I - t A)."""
    rows = _adjacency_rows(a)
    n = len(rows)
    if not (0 <= source < n and 0 <= target < n):
        raise ValueError("node index out of range")
    m = _identity_minus_t(rows, transpose=True)
    for i in range(n):
        m[i][target] = Polynomial((1,)) if i == source else Polynomial()
    num = poly_det(m)
    den = poly_det(_identity_minus_t(rows, transpose=False))
    return RatFunc(num, den)


def poincare_cramer(a, lam: int, source: int = 0) -> RatFunc:
    """Poincare series of walk counts from `source` (default the trivial
    node) to `lam`, by the literal Cramer-determinant construction."""
    return walk_generating_function(a, source, lam)


def poincare_character(g: GroupData, v: ModuleChar, lam: int) -> RatFunc:
    """Poincare series as an exact class sum of geometric terms, combined
    over a common denominator.  Full-table groups support any lam; invariant
    tier only lam = 0."""
    if g.tier != FULL:
        if lam != 0:
            raise UnsupportedQueryError(
                f"group {g.name} carries invariant-only data; only the "
                "invariant Poincare series (lam = 0) is defined")
        conj_chi = [CycNum.from_rational(1)] * g.n_classes
    else:
        conj_chi = [g.chi(lam, mu).conj() for mu in range(g.n_classes)]

    # Group classes by their chi_V value; repeated values only add weights.
    values: list[CycNum] = []
    weights: list[CycNum] = []
    for mu in range(g.n_classes):
        val = v.values[mu]
        w = g.classes[mu].size * conj_chi[mu]
        for i, known in enumerate(values):
            if known == val:
                weights[i] = weights[i] + w
                break
        else:
            values.append(val)
            weights.append(w)

    factors = [Polynomial((CycNum.from_rational(1), -val)) for val in values]
    den = Polynomial((CycNum.from_rational(1),))
    for f in factors:
        den = den * f
    num = Polynomial()
    for i, w in enumerate(weights):
        term = Polynomial((w,))
        for j, f in enumerate(factors):
            if j != i:
                term = term * f
        num = num + term

    num_q = _rational_poly(num) * Fraction(1, g.order)
    den_q = _rational_poly(den)
    return RatFunc(num_q, den_q)


def _rational_poly(p: Polynomial) -> Polynomial:
    coeffs = []
    for c in p.coeffs:
        if isinstance(c, CycNum):
            r = c.as_rational()
            if r is None:
                raise ConsistencyError(
                    "irrational coefficient survived in a Poincare series; "
                    "the class data must be Galois-incomplete")
            coeffs.append(r)
        else:
            coeffs.append(Fraction(c))
    return Polynomial(coeffs)


def det_factorization_check(g: GroupData, v: ModuleChar, a: WalkMatrix) -> bool:
    """det(I - tA) over Q[t] must equal the product of (1 - chi_V(c_mu) t)
    over all classes, expanded in cyclotomic arithmetic."""
    if g.tier != FULL:
        raise UnsupportedQueryError("det factorization needs a full table")
    det = poly_det(_identity_minus_t(a.rows(), transpose=False))
    prod = Polynomial((CycNum.from_rational(1),))
    for mu in range(g.n_classes):
        prod = prod * Polynomial((CycNum.from_rational(1), -v.values[mu]))
    return _rational_poly(det) == _rational_poly(prod)


def dynkin_quotient(a_full, remove: int) -> RatFunc:
    """det(I - t A-with-node-removed) / det(I - t A)."""
    rows = _adjacency_rows(a_full)
    n = len(rows)
    if not 0 <= remove < n:
        raise ValueError("node index out of range")
    kept = [i for i in range(n) if i != remove]
    sub = [[rows[i][j] for j in kept] for i in kept]
    num = poly_det(_identity_minus_t(sub, transpose=False)) if kept else Polynomial((1,))
    den = poly_det(_identity_minus_t(rows, transpose=False))
    return RatFunc(num, den)


# ---------------------------------------------------------------------------
# Exponential generating functions (truncations; coefficients of t^k / k!)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EgfTruncation:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k]

    def to_json(self) -> str:
        return json.dumps({"order": self.order,
                           "coeffs": [str(c) for c in self.coeffs]})


def egf_from_ints(values) -> EgfTruncation:
    vals = [Fraction(v) for v in values]
    return EgfTruncation(len(vals) - 1, tuple(vals))


def egf_hyperbolic(j: int, r: int, order: int) -> EgfTruncation:
    """Generalized hyperbolic series: coefficient of t^m/m! is 1 when
    m = j - 1 (mod r), else 0.  j = 1, r = 2 is cosh; j = 2, r = 2 is sinh;
    r = 1 is exp."""
    if r < 1:
        raise ValueError("period must be positive")
    coeffs = tuple(Fraction(1 if (m - (j - 1)) % r == 0 else 0)
                   for m in range(order + 1))
    return EgfTruncation(order, coeffs)


def egf_product(factors) -> EgfTruncation:
    """Product of EGFs: binomial convolution of coefficient sequences."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    order = factors[0].order
    if any(f.order != order for f in factors):
        raise ValueError("all factors must share one truncation order")
    from math import comb

    acc = list(factors[0].coeffs)
    for f in factors[1:]:
        nxt = []
        for k in range(order + 1):
            s = Fraction(0)
            for i in range(k + 1):
                if acc[i] and f.coeffs[k - i]:
                    s += comb(k, i) * acc[i] * f.coeffs[k - i]
            nxt.append(s)
        acc = nxt
    return EgfTruncation(order, tuple(acc))


def egf_scale_arg(e: EgfTruncation, s) -> EgfTruncation:
    """Substitute t -> s*t, i.e. scale coefficient k by s^k."""
    s = Fraction(s)
    return EgfTruncation(e.order,
                         tuple(c * s**k for k, c in enumerate(e.coeffs)))


def egf_pow(e: EgfTruncation, m: int) -> EgfTruncation:
    if m == 0:
        return egf_from_ints([1] + [0] * e.order)
    return egf_product([e] * m)
