"""Family-specific closed formulas for walk counts and invariant dimensions,
implemented independently of the generic matrix/character engines so each
route cross-checks the others.

The Paley-walk evaluator follows the derivation (split the class sum by
residue type, then use the quadratic Gauss-sum values); the commonly
printed case formulas contain three sign/exponent misprints, so those are
implemented separately as `paley_printed_form` purely to document the
discrepancy.  Likewise the wreath-product invariant formula is implemented
with the weights that survive brute-force checking (the printed form fails
for three or more letters); see the README notes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinatorics import (
    compositions,
    even_block_partitions,
    fixed_point_count,
    kostka_hook_content,
    multinomial,
    multipartitions_of,
    rencontres,
    stirling2,
    z_multipartition,
)
from .cyclotomic import CycNum, root_of_unity
from .errors import ConsistencyError
from .numbertheory import is_prime, legendre_symbol, quadratic_residues
from .polynomials import Polynomial
from .quadratic import QuadNum
from .quiver import mat_pow
from .series import EgfTruncation, RatFunc, egf_hyperbolic, egf_pow

INDUCED = "induced"
STEINBERG = "steinberg"


# ---------------------------------------------------------------------------
# Cyclic and circulant graphs
# ---------------------------------------------------------------------------


def cyclic_walks(r: int, k: int, a: int, c: int) -> int:
    """Walks of k steps from a to c on the circular graph with r nodes:
    sum of C(k, l) over l with k - 2l = c - a (mod r)."""
    if r < 2:
        raise ValueError("need at least two nodes")
    if not (0 <= a < r and 0 <= c < r):
        raise ValueError("node out of range")
    return sum(comb(k, l) for l in range(k + 1) if (k - 2 * l - (c - a)) % r == 0)


def circulant_walks(r: int, connection, k: int, c: int) -> int:
    """Walks of k steps from 0 to c on the circulant graph over Z_r with the
    given connection residues: multinomials over step-type compositions."""
    conn = list(connection)
    for s in conn:
        if not 1 <= s <= r - 1:
            raise ValueError(f"connection residue {s} out of range")
    total = 0
    for parts in compositions(k, len(conn)):
        if sum(s * l for s, l in zip(conn, parts)) % r == c % r:
            total += multinomial(k, parts)
    return total


# ---------------------------------------------------------------------------
# Paley (di)graphs via quadratic Gauss sums
# ---------------------------------------------------------------------------

ZERO = "zero"
RESIDUE = "residue"
NONRESIDUE = "nonresidue"


@dataclass(frozen=True)
class PaleyTarget:
    p: int
    kind: str  # zero | residue | nonresidue

    def __post_init__(self):
        if self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError("Paley parameter must be an odd prime")
        if self.kind not in (ZERO, RESIDUE, NONRESIDUE):
            raise ValueError(f"unknown target kind {self.kind!r}")


def paley_target_of(p: int, c: int) -> PaleyTarget:
    c %= p
    if c == 0:
        return PaleyTarget(p, ZERO)
    return PaleyTarget(p, RESIDUE if legendre_symbol(c, p) == 1 else NONRESIDUE)


def _paley_pieces(p: int):
    d = p if p % 4 == 1 else -p  # s = sqrt(p) or i*sqrt(p)
    s = QuadNum(d, 0, 1)
    half = Fraction(1, 2)
    a_term = (s - 1) * half   # (xi*sqrt(p) - 1)/2, the chi_V value on residues
    b_term = (s + 1) * half   # (xi*sqrt(p) + 1)/2; chi_V on nonresidues is -b_term
    base = QuadNum(d, Fraction(p - 1, 2))
    return s, a_term, b_term, base


def paley_closed_form(target: PaleyTarget, k: int) -> int:
    """Exact k-step walk count from 0 on the Paley (di)graph, evaluated from
    the split class sum in exact quadratic arithmetic."""
    p = target.p
    if k == 0:
        return 1 if target.kind == ZERO else 0
    _, a_term, b_term, base = _paley_pieces(p)
    sign = (-1) ** k
    half_count = Fraction(p - 1, 2)
    if target.kind == ZERO:
        total = base**k + (a_term**k + sign * b_term**k) * half_count
    elif p % 4 == 1:
        f_res, f_non = a_term, -b_term
        f_c, f_ac = (f_res, f_non) if target.kind == RESIDUE else (f_non, f_res)
        total = base**k + a_term**k * f_c + sign * b_term**k * f_ac
    else:
        f_res1, f_non1 = b_term, -a_term  # f(c) + 1 on residues / nonresidues
        f_c1, f_ac1 = (f_res1, f_non1) if target.kind == RESIDUE else (f_non1, f_res1)
        total = base**k - a_term**k * f_c1 - sign * b_term**k * f_ac1
    value = (total / p).as_rational()
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"Paley walk count came out {value}")
    return int(value)


def paley_printed_form(target: PaleyTarget, k: int) -> QuadNum:
    """The printed case formulas, transcribed as displayed (k >= 1).

    Kept only for the discrepancy report: for p = 3 (mod 4) the residue case
    uses (-1)^k where the derivation forces (-1)^(k+1), the p = 1 (mod 4)
    nonresidue case has a flipped middle sign, and the p = 3 (mod 4)
    nonresidue case repeats (i*sqrt(p)+1) where the first factor must be
    (i*sqrt(p)-1).  The returned value may be irrational or non-integral,
    which is exactly the point."""
    p = target.p
    if k < 1:
        raise ValueError("displayed forms assume k >= 1")
    s, _, _, _ = _paley_pieces(p)
    pm1 = QuadNum(s.d, p - 1)
    scale = Fraction(1, 2 ** (k + 1) * p)
    if target.kind == RESIDUE:
        if p % 4 == 1:
            total = 2 * pm1**k + (s - 1) ** (k + 1) + (-1) ** (k + 1) * (s + 1) ** (k + 1)
        else:
            total = (2 * pm1**k + (p + 1) * (s - 1) ** (k - 1)
                     + (-1) ** k * (p + 1) * (s + 1) ** (k - 1))
        return total * scale
    if target.kind == NONRESIDUE:
        if p % 4 == 1:
            total = 2 * pm1 ** (k - 1) + (s - 1) ** (k - 1) + (-1) ** k * (s + 1) ** (k - 1)
            return total * (scale * (p - 1))
        total = 2 * pm1**k - (s + 1) ** (k + 1) + (-1) ** (k + 1) * (s + 1) ** (k + 1)
        return total * scale
    total = 2 * pm1 ** (k - 1) + (s - 1) ** k + (-1) ** k * (s + 1) ** k
    return total * (scale * (p - 1))


def paley_bruteforce(p: int, k: int, c: int) -> int:
    """Oracle: k-th power of the explicit p-by-p adjacency matrix."""
    res = set(quadratic_residues(p))
    a = [[1 if (j - i) % p in res else 0 for j in range(p)] for i in range(p)]
    return mat_pow(a, k)[0][c % p]


# ---------------------------------------------------------------------------
# Symmetric groups: Stirling-Kostka multiplicity formula
# ---------------------------------------------------------------------------


def sn_irrep_dim_formula(n: int, k: int, lam) -> int:
    """Multiplicity of the irrep labeled by lam in the k-th tensor power of
    the permutation module: sum_l {k, l} K_{lam,(n-l,1^l)}."""
    lam = tuple(lam)
    if sum(lam) != n:
        raise ValueError("shape must be a partition of n")
    return sum(stirling2(k, l) * kostka_hook_content(lam, l) for l in range(n + 1))


# ---------------------------------------------------------------------------
# Wreath products: invariant dimensions three ways
# ---------------------------------------------------------------------------


def wreath_invariants_fixedpoint(r: int, n: int, k: int) -> int:
    """Invariant dimension grouped by the number of fixed points of the
    underlying permutation: (1/n!) sum_m F_n(m) * (multinomials over step
    compositions with every part divisible by r).

    The published form carries the rencontres weight to the k-th power and an
    r^m/r^n prefactor; that version fails brute-force checking already for
    n = 3, so the weights here are the ones the derivation actually yields."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    if k == 0:
        return 1
    if k % r:
        return 0
    total = 0
    for m in range(1, n + 1):
        w = rencontres(n, m)
        if w == 0:
            continue
        inner = sum(
            multinomial(k, tuple(q * r for q in qs))
            for qs in compositions(k // r, m)
        )
        total += w * inner
    q, rem = divmod(total, factorial(n))
    if rem:
        raise ConsistencyError("wreath invariant dimension must be an integer")
    return q


def wreath_invariants_classes(r: int, n: int, k: int) -> int:
    """Invariant dimension as the exact class sum over multipartitions."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    acc = CycNum.zero(r)
    for alpha in multipartitions_of(n, r):
        chi = CycNum.zero(r)
        for i, part in enumerate(alpha):
            f = fixed_point_count(part)
            if f:
                chi = chi + f * root_of_unity(r, i)
        acc = acc + (chi**k) * Fraction(1, z_multipartition(alpha, r))
    value = acc.as_rational()
    if value is None or value.denominator != 1 or value < 0:
        raise ConsistencyError(f"wreath class sum came out {value}")
    return int(value)


def wreath_invariants(r: int, n: int, k: int) -> int:
    """Both evaluators must agree; returns the common value."""
    a = wreath_invariants_fixedpoint(r, n, k)
    b = wreath_invariants_classes(r, n, k)
    if a != b:
        raise ConsistencyError(
            f"wreath invariant evaluators disagree at r={r} n={n} k={k}: {a} vs {b}")
    return a


def wreath_invariants_bruteforce(r: int, n: int, k: int) -> int:
    """Oracle: average chi_V(g)^k over the explicit monomial group; only for
    group orders up to 200."""
    from itertools import permutations, product

    order = r**n * factorial(n)
    if order > 200:
        raise ValueError("brute force limited to group order <= 200")
    acc = CycNum.zero(r)
    for sigma in permutations(range(n)):
        fixed = [i for i in range(n) if sigma[i] == i]
        for signs in product(range(r), repeat=n):
            chi = CycNum.zero(r)
            for i in fixed:
                chi = chi + root_of_unity(r, signs[i])
            acc = acc + chi**k
    value = (acc / order).as_rational()
    if value is None or value.denominator != 1:
        raise ConsistencyError("brute-force average must be an integer")
    return int(value)


def wreath_invariants_egf(r: int, n: int, order: int) -> EgfTruncation:
    """Truncated EGF of the invariant dimensions: (1/n!) sum_m F_n(m) h^m,
    with h the period-r hyperbolic series (cosh-like)."""
    h = egf_hyperbolic(1, r, order)
    acc = [Fraction(0)] * (order + 1)
    for m in range(n + 1):
        w = rencontres(n, m)
        if w == 0:
            continue
        hm = egf_pow(h, m)
        for i in range(order + 1):
            acc[i] += w * hm.coeffs[i]
    nf = factorial(n)
    return EgfTruncation(order, tuple(c / nf for c in acc))


def weyl_bc_centralizer(n: int, k: int) -> int:
    """Centralizer-algebra dimension for the signed-permutation group of rank
    n at tensor depth k: sum over block counts of even-block set partitions."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return sum(even_block_partitions(k, s) for s in range(1, n + 1))


# ---------------------------------------------------------------------------
# GL2 and SL2 over F_q
# ---------------------------------------------------------------------------


def _as_count(x: Fraction) -> int:
    if x.denominator != 1 or x < 0:
        raise ConsistencyError(f"dimension formula came out {x}")
    return int(x)


def gl2_dims(q: int, k: int, which: str) -> int:
    if k == 0:
        return 1
    if which == INDUCED:
        return _as_count(Fraction(
            (q + 1) ** (k - 1) + q * (q - 2) * 2 ** (k - 1) + (q - 1),
            q * (q - 1)))
    if which == STEINBERG:
        return _as_count(Fraction(
            2 * q ** (k - 1) + q * (q - 1) * (-1) ** k + (q + 1) * (q - 2),
            2 * (q * q - 1)))
    raise ValueError(f"unknown module {which!r}")


def sl2_dims(q: int, k: int, which: str) -> int:
    if k == 0:
        return 1
    if which == INDUCED:
        return _as_count(Fraction(
            2 * (q + 1) ** (k - 1) + q * (q - 3) * 2 ** (k - 1) + 2 * (q - 1),
            q * (q - 1)))
    if which == STEINBERG:
        return _as_count(Fraction(
            4 * q ** (k - 1) + (q - 1) ** 2 * (-1) ** k + (q - 3) * (q + 1),
            2 * (q * q - 1)))
    raise ValueError(f"unknown module {which!r}")


def _lin(c0: int, c1: int) -> Polynomial:
    return Polynomial((c0, c1))


def gl2_poincare(q: int, which: str) -> RatFunc:
    if which == INDUCED:
        num = Polynomial((1, -(q + 3), 2 * q + 3, -q))
        den = _lin(1, -1) * _lin(1, -2) * _lin(1, -(1 + q))
    elif which == STEINBERG:
        num = Polynomial((1, -q, 0, 1))
        den = _lin(1, -1) * _lin(1, 1) * _lin(1, -q)
    else:
        raise ValueError(f"unknown module {which!r}")
    return RatFunc(num, den)


def sl2_poincare(q: int, which: str) -> RatFunc:
    if which == INDUCED:
        num = Polynomial((1, -(q + 3), 2 * q + 3, -(q - 1)))
        den = _lin(1, -1) * _lin(1, -2) * _lin(1, -(1 + q))
    elif which == STEINBERG:
        num = Polynomial((1, -q, 0, 2))
        den = _lin(1, 1) * _lin(1, -1) * _lin(1, -q)
    else:
        raise ValueError(f"unknown module {which!r}")
    return RatFunc(num, den)


# ---------------------------------------------------------------------------
# Finite abelian groups
# ---------------------------------------------------------------------------


def abelian_walks(radii, k: int, c) -> int:
    """Walks of k steps from 0 to c on the quiver of a product of cyclic
    groups with the coordinate module: multinomials over compositions with
    part i congruent to c_i mod r_i."""
    radii = tuple(radii)
    c = tuple(c)
    if len(c) != len(radii):
        raise ValueError("target must have one component per factor")
    if any(not 0 <= ci < ri for ci, ri in zip(c, radii)):
        raise ValueError("target component out of range")
    total = 0
    for parts in compositions(k, len(radii)):
        if all((l - ci) % ri == 0 for l, ci, ri in zip(parts, c, radii)):
            total += multinomial(k, parts)
    return total
