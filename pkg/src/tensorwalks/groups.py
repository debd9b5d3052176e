"""Conjugacy-class and character data for the supported group families.

Two tiers: "full" groups carry a complete character table; "invariant"
groups carry only class sizes and the module character, which is all the
invariant-dimension formulas consume.  All character values are CycNum.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .combinatorics import (
    fixed_point_count,
    multipartitions_of,
    partitions_of,
    z_lambda,
    z_multipartition,
)
from .cyclotomic import CycNum, root_of_unity
from .errors import SpecError
from .numbertheory import is_prime, lcm, prime_power_base, quadratic_residues

FULL = "full"
INVARIANT = "invariant"


@dataclass(frozen=True)
class ClassInfo:
    label: str
    size: int
    family: str | None = None  # table-row tag when one row expands into many classes


@dataclass(frozen=True)
class IrrepInfo:
    label: str
    dim: int


@dataclass(frozen=True, eq=False)
class GroupData:
    name: str
    order: int
    tier: str
    classes: tuple[ClassInfo, ...]
    conductor: int  # all stored character values live in Q(zeta_conductor)
    irreps: tuple[IrrepInfo, ...] | None = None
    char_table: tuple[tuple[CycNum, ...], ...] | None = None

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def class_sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def chi(self, irrep: int, cls: int) -> CycNum:
        if self.char_table is None:
            raise ValueError("no character table on an invariant-tier group")
        return self.char_table[irrep][cls]

    def irrep_index(self, label: str) -> int:
        assert self.irreps is not None
        for i, info in enumerate(self.irreps):
            if info.label == label:
                return i
        raise KeyError(label)


@dataclass(frozen=True, eq=False)
class ModuleChar:
    """Character of a module: one value per conjugacy class."""

    group: GroupData
    values: tuple[CycNum, ...]
    name: str = "V"

    @property
    def dim(self) -> int:
        return self.values[0].as_integer()

    @property
    def self_dual(self) -> bool:
        return all(v == v.conj() for v in self.values)


# ---------------------------------------------------------------------------
# Cyclic groups
# ---------------------------------------------------------------------------


def build_cyclic(r: int) -> GroupData:
    if r < 2:
        raise ValueError("cyclic order must be at least 2")
    classes = tuple(ClassInfo(str(b), 1) for b in range(r))
    irreps = tuple(IrrepInfo(str(a), 1) for a in range(r))
    table = tuple(
        tuple(root_of_unity(r, a * b) for b in range(r)) for a in range(r)
    )
    return GroupData(f"Z{r}", r, FULL, classes, r, irreps, table)


def standard_module_cyclic(r: int) -> ModuleChar:
    """The two-character module whose quiver is the circular graph on r nodes."""
    g = build_cyclic(r)
    values = tuple(root_of_unity(r, b) + root_of_unity(r, -b) for b in range(r))
    return ModuleChar(g, values)


def circulant_module(r: int, connection, group: GroupData | None = None) -> ModuleChar:
    """Module over Z_r summing the characters in `connection`."""
    conn = list(connection)
    if not conn:
        raise ValueError("connection set must be nonempty")
    for s in conn:
        if not 1 <= s <= r - 1:
            raise ValueError(f"connection residue {s} out of range 1..{r - 1}")
    g = group if group is not None else build_cyclic(r)
    values = []
    for b in range(r):
        acc = CycNum.zero(r)
        for s in conn:
            acc = acc + root_of_unity(r, s * b)
        values.append(acc)
    return ModuleChar(g, tuple(values), name=f"circulant{tuple(sorted(conn))}")


def paley_module(p: int) -> ModuleChar:
    """Module over Z_p whose quiver is the Paley (di)graph on p nodes."""
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"Paley parameter must be an odd prime, got {p}")
    m = circulant_module(p, quadratic_residues(p))
    return ModuleChar(m.group, m.values, name="paley")


# ---------------------------------------------------------------------------
# Finite abelian groups
# ---------------------------------------------------------------------------


def _abelian_elements(radii) -> list[tuple[int, ...]]:
    return list(itertools.product(*(range(r) for r in radii)))


def build_abelian(radii) -> GroupData:
    radii = tuple(radii)
    if not radii:
        raise ValueError("need at least one cyclic factor")
    if any(r < 2 for r in radii):
        raise ValueError("each factor must have order at least 2")
    order = 1
    for r in radii:
        order *= r
    conductor = 1
    for r in radii:
        conductor = lcm(conductor, r)
    elements = _abelian_elements(radii)
    classes = tuple(ClassInfo(str(e), 1) for e in elements)
    irreps = tuple(IrrepInfo(str(e), 1) for e in elements)
    table = []
    for a in elements:
        row = []
        for b in elements:
            exponent = sum(ai * bi * (conductor // r) for ai, bi, r in zip(a, b, radii))
            row.append(root_of_unity(conductor, exponent))
        table.append(tuple(row))
    name = "x".join(f"Z{r}" for r in radii)
    return GroupData(name, order, FULL, classes, conductor, irreps, tuple(table))


def coordinate_module(radii) -> ModuleChar:
    """V = direct sum of the n coordinate characters of Z_r1 x ... x Z_rn."""
    radii = tuple(radii)
    g = build_abelian(radii)
    values = []
    for b in _abelian_elements(radii):
        acc = CycNum.zero(g.conductor)
        for bj, r in zip(b, radii):
            acc = acc + root_of_unity(g.conductor, bj * (g.conductor // r))
        values.append(acc)
    return ModuleChar(g, tuple(values))


# ---------------------------------------------------------------------------
# Symmetric groups (Murnaghan-Nakayama character table)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def murnaghan_nakayama(lam: tuple, mu: tuple) -> int:
    """Character value chi_lam on the class of cycle type mu, by recursive
    border-strip removal on first-column hook lengths (beta sets)."""
    if not mu:
        return 1 if not lam else 0
    t, rest = mu[0], mu[1:]
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        crossings = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((beta_set - {b}) | {nb}, reverse=True)
        new_lam = tuple(
            x - (len(new_beta) - 1 - i) for i, x in enumerate(new_beta)
        )
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** crossings * murnaghan_nakayama(new_lam, rest)
    return total


def build_symmetric(n: int) -> GroupData:
    if not 2 <= n <= 12:
        raise ValueError("symmetric group supported for 2 <= n <= 12")
    parts = partitions_of(n)
    irrep_order = parts  # reverse-lex: (n) = trivial first
    class_order = tuple(reversed(parts))  # (1^n) = identity first
    order = factorial(n)
    classes = tuple(
        ClassInfo(str(mu), order // z_lambda(mu)) for mu in class_order
    )
    table = []
    irreps = []
    for lam in irrep_order:
        row = [murnaghan_nakayama(lam, mu) for mu in class_order]
        irreps.append(IrrepInfo(str(lam), row[0]))
        table.append(tuple(CycNum.from_rational(v) for v in row))
    return GroupData(f"S{n}", order, FULL, classes, 1, tuple(irreps), tuple(table))


def permutation_module(n: int) -> ModuleChar:
    """The n-dimensional permutation module; its character counts fixed points."""
    g = build_symmetric(n)
    parts = partitions_of(n)
    values = tuple(
        CycNum.from_rational(fixed_point_count(mu)) for mu in reversed(parts)
    )
    return ModuleChar(g, values)


# ---------------------------------------------------------------------------
# Wreath products Z_r wr S_n (invariant tier)
# ---------------------------------------------------------------------------


def _wreath_classes(r: int, n: int) -> list[tuple]:
    alphas = multipartitions_of(n, r)
    identity = ((1,) * n,) + ((),) * (r - 1)
    alphas.sort(key=lambda a: a != identity)  # stable: identity first
    return alphas


def build_wreath_invariant(r: int, n: int) -> GroupData:
    if r < 2:
        raise ValueError("wreath cyclic order must be at least 2")
    if not 1 <= n <= 8:
        raise ValueError("wreath symmetric degree supported for 1 <= n <= 8")
    order = r**n * factorial(n)
    classes = tuple(
        ClassInfo(str(alpha), order // z_multipartition(alpha, r))
        for alpha in _wreath_classes(r, n)
    )
    return GroupData(f"Z{r}wrS{n}", order, INVARIANT, classes, r)


def monomial_module(r: int, n: int) -> ModuleChar:
    """The defining n-dimensional monomial-matrix module of Z_r wr S_n."""
    g = build_wreath_invariant(r, n)
    values = []
    for alpha in _wreath_classes(r, n):
        acc = CycNum.zero(r)
        for i, part in enumerate(alpha):
            f = fixed_point_count(part)
            if f:
                acc = acc + f * root_of_unity(r, i)
        values.append(acc)
    return ModuleChar(g, tuple(values))


# ---------------------------------------------------------------------------
# GL2 and SL2 over F_q (invariant tier, classes expanded from table rows)
# ---------------------------------------------------------------------------


def _check_odd_prime_power(q: int) -> None:
    p = prime_power_base(q)
    if p is None or p == 2:
        raise ValueError(f"field size must be an odd prime power, got {q}")
    if q > 13:
        raise ValueError("field sizes above 13 not supported at desk scale")


@dataclass(frozen=True)
class _Row:
    family: str
    count: int
    size: int
    chi_v: int
    chi_st: int


def _gl2_rows(q: int) -> list[_Row]:
    return [
        _Row("a", q - 1, 1, q + 1, q),
        _Row("b", q - 1, q * q - 1, 1, 0),
        _Row("c", (q - 1) * (q - 2) // 2, q * q + q, 2, 1),
        _Row("d", q * (q - 1) // 2, q * q - q, 0, -1),
    ]


def _sl2_rows(q: int) -> list[_Row]:
    return [
        _Row("center", 2, 1, q + 1, q),
        _Row("u", (q - 3) // 2, q * (q + 1), 2, 1),
        _Row("v", 2, (q * q - 1) // 2, 1, 0),
        _Row("-v", 2, (q * q - 1) // 2, 1, 0),
        _Row("w", (q - 1) // 2, q * (q - 1), 0, -1),
    ]


def _expand_rows(name: str, order: int, rows: list[_Row]) -> tuple[GroupData, tuple, tuple]:
    classes = []
    chi_v = []
    chi_st = []
    for row in rows:
        for i in range(1, row.count + 1):
            classes.append(ClassInfo(f"{row.family}({i})", row.size, family=row.family))
            chi_v.append(CycNum.from_rational(row.chi_v))
            chi_st.append(CycNum.from_rational(row.chi_st))
    g = GroupData(name, order, INVARIANT, tuple(classes), 1)
    return g, tuple(chi_v), tuple(chi_st)


def build_gl2(q: int) -> GroupData:
    _check_odd_prime_power(q)
    order = q * (q + 1) * (q - 1) ** 2
    g, _, _ = _expand_rows(f"GL2({q})", order, _gl2_rows(q))
    return g


def both_modules_gl2(q: int) -> tuple[ModuleChar, ModuleChar]:
    """(induced (q+1)-dim module, q-dim Steinberg module) for GL2(F_q)."""
    _check_odd_prime_power(q)
    order = q * (q + 1) * (q - 1) ** 2
    g, chi_v, chi_st = _expand_rows(f"GL2({q})", order, _gl2_rows(q))
    return ModuleChar(g, chi_v, name="induced"), ModuleChar(g, chi_st, name="steinberg")


def build_sl2(q: int) -> GroupData:
    _check_odd_prime_power(q)
    order = q * (q - 1) * (q + 1)
    g, _, _ = _expand_rows(f"SL2({q})", order, _sl2_rows(q))
    return g


def both_modules_sl2(q: int) -> tuple[ModuleChar, ModuleChar]:
    _check_odd_prime_power(q)
    order = q * (q - 1) * (q + 1)
    g, chi_v, chi_st = _expand_rows(f"SL2({q})", order, _sl2_rows(q))
    return ModuleChar(g, chi_v, name="induced"), ModuleChar(g, chi_st, name="steinberg")


# ---------------------------------------------------------------------------
# Validation and serialization
# ---------------------------------------------------------------------------


def validate_group(g: GroupData) -> None:
    """Raise AssertionError when the structural invariants fail."""
    assert sum(g.class_sizes()) == g.order, "class sizes must sum to the order"
    assert g.classes[0].size == 1, "identity class must come first with size 1"
    if g.tier == FULL:
        assert g.irreps is not None and g.char_table is not None
        assert len(g.irreps) == g.n_classes, "need as many irreps as classes"
        assert sum(i.dim**2 for i in g.irreps) == g.order, "sum of squared dims"
        trivial = g.char_table[0]
        assert all(v == 1 for v in trivial), "irrep 0 must be the trivial character"
        assert all(
            g.char_table[i][0] == g.irreps[i].dim for i in range(g.n_classes)
        ), "identity column must carry the dimensions"


def group_to_json(g: GroupData, module: ModuleChar | None = None) -> str:
    doc = {
        "name": g.name,
        "order": str(g.order),
        "tier": g.tier,
        "classes": [{"label": c.label, "size": str(c.size)} for c in g.classes],
    }
    if module is not None:
        doc["chi_V"] = [v.to_text() for v in module.values]
    return json.dumps(doc, indent=2)


# ---------------------------------------------------------------------------
# Spec-string parser
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ParsedSpec:
    kind: str  # cyclic | abelian | symmetric | wreath | gl2 | sl2 | paley | circulant
    params: dict
    group: GroupData
    module: ModuleChar
    steinberg: bool = False


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def try_word(self, word: str) -> bool:
        self.skip_ws()
        if self.text.startswith(word, self.pos):
            self.pos += len(word)
            return True
        return False

    def expect(self, token: str):
        if not self.try_word(token):
            raise SpecError(f"expected {token!r}", self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SpecError("expected an integer", start)
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_spec_full(text: str) -> ParsedSpec:
    """Parse a group/module spec string; see the README for the grammar.

    Grammar errors raise SpecError with a byte offset; invalid parameters
    (e.g. an even field size) raise SpecError without one."""
    cur = _Cursor(text)
    try:
        spec = _parse_body(cur)
    except ValueError as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(str(exc)) from exc
    steinberg = False
    if cur.try_word("@steinberg"):
        steinberg = True
    if not cur.at_end():
        raise SpecError("trailing input", cur.pos)
    if steinberg:
        if spec.kind not in ("gl2", "sl2"):
            raise SpecError("@steinberg applies only to GL2/SL2 specs")
        modules = both_modules_gl2(spec.params["q"]) if spec.kind == "gl2" else both_modules_sl2(spec.params["q"])
        return ParsedSpec(spec.kind, spec.params, spec.group, modules[1], True)
    return spec


def _parse_body(cur: _Cursor) -> ParsedSpec:
    if cur.try_word("GL2"):
        cur.expect("(")
        q = cur.integer()
        cur.expect(")")
        module = both_modules_gl2(q)[0]
        return ParsedSpec("gl2", {"q": q}, module.group, module)
    if cur.try_word("SL2"):
        cur.expect("(")
        q = cur.integer()
        cur.expect(")")
        module = both_modules_sl2(q)[0]
        return ParsedSpec("sl2", {"q": q}, module.group, module)
    if cur.try_word("paley"):
        cur.expect("(")
        p = cur.integer()
        cur.expect(")")
        module = paley_module(p)
        return ParsedSpec("paley", {"p": p, "connection": quadratic_residues(p)},
                          module.group, module)
    if cur.try_word("circulant"):
        cur.expect("(")
        r = cur.integer()
        cur.expect(";")
        conn = [cur.integer()]
        while cur.try_word(","):
            conn.append(cur.integer())
        cur.expect(")")
        if r < 2:
            raise SpecError("circulant modulus must be at least 2")
        for s in conn:
            if not 1 <= s <= r - 1:
                raise SpecError(f"connection residue {s} out of range 1..{r - 1}")
        module = circulant_module(r, conn)
        return ParsedSpec("circulant", {"r": r, "connection": conn}, module.group, module)
    if cur.try_word("hypercube"):
        cur.expect("(")
        n = cur.integer()
        cur.expect(")")
        if n < 1:
            raise SpecError("hypercube dimension must be positive")
        radii = (2,) * n
        module = coordinate_module(radii)
        return ParsedSpec("abelian", {"radii": radii}, module.group, module)
    if cur.try_word("S"):
        n = cur.integer()
        module = permutation_module(n)
        return ParsedSpec("symmetric", {"n": n}, module.group, module)
    if cur.try_word("Z"):
        r = cur.integer()
        if cur.try_word("wr"):
            cur.expect("S")
            n = cur.integer()
            module = monomial_module(r, n)
            return ParsedSpec("wreath", {"r": r, "n": n}, module.group, module)
        radii = [r]
        while cur.try_word("x"):
            cur.expect("Z")
            radii.append(cur.integer())
        if len(radii) == 1:
            module = standard_module_cyclic(r)
            return ParsedSpec("cyclic", {"r": r}, module.group, module)
        module = coordinate_module(tuple(radii))
        return ParsedSpec("abelian", {"radii": tuple(radii)}, module.group, module)
    raise SpecError("unrecognized group spec", cur.pos)


def parse_spec(text: str) -> tuple[GroupData, ModuleChar]:
    parsed = parse_spec_full(text)
    return parsed.group, parsed.module
