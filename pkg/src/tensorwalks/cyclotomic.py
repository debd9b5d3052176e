"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is a coefficient vector over the power basis 1, z, ..., z^(phi(N)-1)
where z = zeta_N, reduced modulo the N-th cyclotomic polynomial Phi_N.
Coefficients are exact rationals, kept as plain ints whenever integral so the
hot loops stay in fast integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ConsistencyError
from .numbertheory import divisors, euler_phi, is_prime, lcm

# Phi_N coefficient tuples (ascending, integer, monic).  Write-once per key;
# recomputation races are benign because the value is deterministic.
_PHI_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, via Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d."""
    if n < 1:
        raise ValueError("conductor must be positive")
    cached = _PHI_CACHE.get(n)
    if cached is not None:
        return cached
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in divisors(n):
        if d < n:
            num = _int_poly_exact_div(num, cyclotomic_polynomial(d))
    phi = tuple(num)
    _PHI_CACHE[n] = phi
    return phi


def _int_poly_exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Long division of integer polynomials; divisor monic, remainder must vanish.
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _reduce_mod_phi(coeffs: list, n: int) -> tuple:
    """Reduce a raw power-basis coefficient list modulo Phi_n."""
    deg = euler_phi(n)
    if len(coeffs) > n:  # fold exponents mod n first (z^n = 1 holds mod Phi_n)
        folded = [0] * n
        for i, c in enumerate(coeffs):
            if c:
                folded[i % n] += c
        coeffs = folded
    else:
        coeffs = list(coeffs)
    phi = cyclotomic_polynomial(n)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = 0
            for j in range(deg):
                coeffs[i - deg + j] -= c * phi[j]
    coeffs = coeffs[:deg] + [0] * (deg - len(coeffs))
    return tuple(_norm_coeff(c) for c in coeffs)


class CycNum:
    """An element of Q(zeta_N), canonical modulo Phi_N.  Immutable."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs, reduce: bool = True):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        object.__setattr__(self, "conductor", conductor)
        if reduce:
            coeffs = _reduce_mod_phi(list(coeffs), conductor)
        else:
            coeffs = tuple(coeffs)
            if len(coeffs) != euler_phi(conductor):
                raise ValueError("unreduced coefficients must fill the power basis")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *args):
        raise AttributeError("CycNum is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def from_rational(value) -> "CycNum":
        return CycNum(1, (_norm_coeff(Fraction(value)),), reduce=False)

    @staticmethod
    def zero(conductor: int = 1) -> "CycNum":
        return CycNum(conductor, [0] * euler_phi(conductor), reduce=False)

    # -- conductor handling ---------------------------------------------------

    def embed(self, m: int) -> "CycNum":
        """Reinterpret in Q(zeta_m); requires conductor | m."""
        n = self.conductor
        if m == n:
            return self
        if m % n != 0:
            raise ValueError(f"cannot embed conductor {n} into {m}")
        step = m // n
        raw = [0] * ((len(self.coeffs) - 1) * step + 1 or 1)
        for i, c in enumerate(self.coeffs):
            if c:
                raw[i * step] = c
        return CycNum(m, raw)

    def _coerce(self, other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(other)
        return None

    def _common(self, other: "CycNum"):
        n = lcm(self.conductor, other.conductor)
        return self.embed(n), other.embed(n), n

    # -- ring / field operations ----------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, n = self._common(other)
        return CycNum(n, tuple(_norm_coeff(x + y) for x, y in zip(a.coeffs, b.coeffs)),
                      reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.conductor, tuple(_norm_coeff(-c) for c in self.coeffs),
                      reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.conductor == 1:  # scalar fast path
            s = other.coeffs[0]
            return CycNum(self.conductor,
                          tuple(_norm_coeff(c * s) for c in self.coeffs), reduce=False)
        if self.conductor == 1:
            s = self.coeffs[0]
            return CycNum(other.conductor,
                          tuple(_norm_coeff(c * s) for c in other.coeffs), reduce=False)
        a, b, n = self._common(other)
        la, lb = a.coeffs, b.coeffs
        raw = [0] * (len(la) + len(lb) - 1)
        for i, x in enumerate(la):
            if x:
                for j, y in enumerate(lb):
                    if y:
                        raw[i + j] += x * y
        return CycNum(n, raw)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.from_rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.conductor == 1:
            s = other.coeffs[0]
            if s == 0:
                raise ZeroDivisionError("division by zero CycNum")
            return self * _inv_scalar(s)
        return self * other.inverse()

    def galois(self, a: int) -> "CycNum":
        """Apply the automorphism zeta_N -> zeta_N^a (a coprime to N)."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise ValueError("galois exponent must be coprime to the conductor")
        raw = [0] * n
        for i, c in enumerate(self.coeffs):
            if c:
                raw[(i * a) % n] += c
        return CycNum(n, raw)

    def conj(self) -> "CycNum":
        """Complex conjugation, zeta_N -> zeta_N^(-1)."""
        if self.conductor == 1:
            return self
        return self.galois(self.conductor - 1)

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the product of Galois conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        n = self.conductor
        prod = CycNum.from_rational(1)
        for a in range(2, n + 1):
            if gcd(a, n) == 1:
                prod = prod * self.galois(a)
        norm = (self * prod).as_rational()
        if norm is None or norm == 0:
            raise ConsistencyError("field norm of a nonzero element must be a nonzero rational")
        return prod * _inv_scalar(norm)

    # -- predicates and conversions --------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction iff it lies in Q, else None."""
        if self.is_rational():
            return Fraction(self.coeffs[0])
        return None

    def as_integer(self) -> int:
        """The value as an int; raises ConsistencyError if not a rational integer."""
        r = self.as_rational()
        if r is None or r.denominator != 1:
            raise ConsistencyError(f"expected a rational integer, got {self}")
        return int(r)

    def reduce_conductor(self) -> "CycNum":
        """Rewrite over the smallest cyclotomic subfield Q(zeta_d) containing
        the value.  Explicit normalization; arithmetic never calls this."""
        n = self.conductor
        for d in divisors(n):
            if d == n:
                break
            down = self._try_express(d)
            if down is not None:
                return down
        return self

    def _try_express(self, d: int) -> "CycNum | None":
        # Solve for the value in the embedded basis of Q(zeta_d) inside Q(zeta_N).
        n = self.conductor
        phi_d = euler_phi(d)
        basis = [CycNum(d, [0] * i + [1]).embed(n) for i in range(phi_d)]
        rows = len(self.coeffs)
        mat = [[Fraction(basis[j].coeffs[i]) for j in range(phi_d)] + [Fraction(self.coeffs[i])]
               for i in range(rows)]
        sol = _solve_rational(mat, phi_d)
        if sol is None:
            return None
        return CycNum(d, tuple(_norm_coeff(c) for c in sol), reduce=False)

    # -- equality, hashing, display ---------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # mutable-free but equality crosses conductors; keep unhashable

    def __repr__(self):
        return f"CycNum({self.conductor}, {list(self.coeffs)})"

    def to_text(self) -> str:
        """Render as "c0 + c1*z + ...; conductor=N" (serialization format)."""
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and len(self.coeffs) > 1:
                continue
            term = str(c) if i == 0 else (f"{c}*z" if i == 1 else f"{c}*z^{i}")
            parts.append(term)
        if not parts:
            parts = ["0"]
        return " + ".join(parts) + f"; conductor={self.conductor}"


def _inv_scalar(s) -> Fraction:
    return Fraction(1) / Fraction(s)


def _solve_rational(mat: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """Gaussian elimination for an overdetermined system [A | b]; returns the
    solution when consistent and uniquely determined, else None."""
    rows = len(mat)
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = Fraction(1) / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivot_cols.append(c)
        r += 1
    for i in range(r, rows):
        if mat[i][ncols] != 0:
            return None
    if len(pivot_cols) < ncols:
        return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivot_cols):
        sol[c] = mat[i][ncols]
    return sol


# -- module-level operations -------------------------------------------------


def root_of_unity(n: int, m: int) -> CycNum:
    """zeta_n^m as a canonical CycNum with conductor n."""
    if n < 1:
        raise ValueError("order must be positive")
    m %= n
    return CycNum(n, [0] * m + [1])


def sum_over_roots(r: int, m: int) -> int:
    """Sum of zeta_r^(m*b) over b = 0..r-1: equals r if r | m, else 0.

    Computed inside Q(zeta_r) and asserted rational."""
    if r < 1:
        raise ValueError("order must be positive")
    total = CycNum.zero(r)
    for b in range(r):
        total = total + root_of_unity(r, m * b)
    value = total.as_rational()
    if value is None or value.denominator != 1:
        raise ConsistencyError("root-of-unity sum must be a rational integer")
    return int(value)


def gauss_sum(p: int) -> CycNum:
    """g(1) = sum_x zeta_p^(x^2) in Q(zeta_p), for an odd prime p."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError("Gauss sums here need an odd prime")
    raw = [0] * p
    for x in range(p):
        raw[x * x % p] += 1
    return CycNum(p, raw)


def gauss_sum_check(p: int) -> bool:
    """Verify g(1)^2 = p for p = 1 mod 4 and g(1)^2 = -p for p = 3 mod 4."""
    g = gauss_sum(p)
    square = g * g
    expected = p if p % 4 == 1 else -p
    return square == CycNum.from_rational(expected)
