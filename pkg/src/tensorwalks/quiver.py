"""McKay quivers: exact adjacency matrices, walk counts by matrix power and
by character sums, centralizer-algebra dimensions, and Bratteli diagrams."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cyclotomic import CycNum
from .errors import ConsistencyError, UnsupportedQueryError
from .groups import FULL, GroupData, ModuleChar


@dataclass(frozen=True, eq=False)
class WalkMatrix:
    """Adjacency matrix of a quiver over the irreducibles; exact integers."""

    dim: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.dim or any(len(r) != self.dim for r in self.entries):
            raise ValueError("adjacency matrix must be square")
        if any(e < 0 for row in self.entries for e in row):
            raise ConsistencyError("adjacency entries must be nonnegative")

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        return isinstance(other, WalkMatrix) and self.entries == other.entries

    def to_json(self, labels=None) -> str:
        doc = {"dim": self.dim,
               "entries": [[str(e) for e in row] for row in self.entries]}
        if labels is not None:
            doc["labels"] = list(labels)
        return json.dumps(doc, indent=2)


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for k in range(m):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(p):
                    row[j] += c * bk[j]
    return out


def mat_pow(a, k: int):
    n = len(a)
    result = identity_matrix(n)
    base = [list(r) for r in a]
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def _require_full(g: GroupData, what: str):
    if g.tier != FULL:
        raise UnsupportedQueryError(
            f"{what} needs a full character table; group {g.name} carries "
            "invariant-only data (only the 0 -> 0 walk count is available)")


def _weighted_sum_matrix(g: GroupData, weights: list) -> list[list[int]]:
    """Matrix with (nu, lam) entry (1/|G|) sum_mu weights[mu] * chi_nu(mu) *
    conj(chi_lam(mu)), asserted to be nonnegative integers.

    Computed as (X * diag(weights)) * conj(X)^T so the cost is two dense
    CycNum matrix products rather than one character sum per entry."""
    table = g.char_table
    n = g.n_classes
    scaled = [[table[nu][mu] * weights[mu] for mu in range(n)] for nu in range(n)]
    conj = [[table[lam][mu].conj() for mu in range(n)] for lam in range(n)]
    out = []
    for nu in range(n):
        row = []
        for lam in range(n):
            acc = CycNum.zero(1)
            srow, crow = scaled[nu], conj[lam]
            for mu in range(n):
                acc = acc + srow[mu] * crow[mu]
            value = (acc / g.order).as_rational()
            if value is None or value.denominator != 1 or value < 0:
                raise ConsistencyError(
                    f"character sum gave {value} at ({nu},{lam}); bad table data")
            row.append(int(value))
        out.append(row)
    return out


def mckay_adjacency(g: GroupData, v: ModuleChar) -> WalkMatrix:
    """Adjacency a[nu][lam] = multiplicity of irrep lam in (irrep nu) tensor V."""
    _require_full(g, "mckay_adjacency")
    weights = [g.classes[mu].size * v.values[mu] for mu in range(g.n_classes)]
    return WalkMatrix(g.n_classes, tuple(tuple(r) for r in _weighted_sum_matrix(g, weights)))


def walk_count_matrix(a: WalkMatrix, k: int, frm: int, to: int) -> int:
    if k < 0:
        raise ValueError("step count must be nonnegative")
    return mat_pow(a.rows(), k)[frm][to]


def character_walk_counts(g: GroupData, v: ModuleChar, k: int) -> list[list[int]]:
    """All (from, to) k-step walk counts at once, by character sums."""
    _require_full(g, "character_walk_counts")
    weights = [g.classes[mu].size * v.values[mu] ** k for mu in range(g.n_classes)]
    return _weighted_sum_matrix(g, weights)


def walk_count_character(g: GroupData, v: ModuleChar, k: int, frm: int, to: int) -> int:
    """k-step walk count from irrep `frm` to irrep `to` by one character sum.

    Invariant-tier groups support only frm = to = 0 (the invariant dimension)."""
    if k < 0:
        raise ValueError("step count must be nonnegative")
    if g.tier != FULL:
        if frm != 0 or to != 0:
            raise UnsupportedQueryError(
                f"group {g.name} carries invariant-only data; only the "
                "trivial-to-trivial walk count is defined")
        acc = CycNum.zero(1)
        for mu in range(g.n_classes):
            acc = acc + g.classes[mu].size * v.values[mu] ** k
        value = (acc / g.order).as_rational()
        if value is None or value.denominator != 1 or value < 0:
            raise ConsistencyError(f"invariant dimension came out {value}")
        return int(value)
    acc = CycNum.zero(1)
    for mu in range(g.n_classes):
        term = g.chi(frm, mu) * (v.values[mu] ** k) * g.chi(to, mu).conj()
        acc = acc + g.classes[mu].size * term
    value = (acc / g.order).as_rational()
    if value is None or value.denominator != 1 or value < 0:
        raise ConsistencyError(f"walk count came out {value}")
    return int(value)


def invariant_dim(g: GroupData, v: ModuleChar, k: int) -> int:
    """dim of the invariant subspace of the k-th tensor power (0 -> 0 walks)."""
    return walk_count_character(g, v, k, 0, 0)


def centralizer_dim(g: GroupData, v: ModuleChar, k: int) -> int:
    """Dimension of the centralizer algebra of the k-th tensor power; needs a
    self-dual module (otherwise the 2k-walk identity does not apply)."""
    if not v.self_dual:
        raise UnsupportedQueryError(
            "centralizer_dim requires a self-dual module character; "
            f"module {v.name} over {g.name} is not self-conjugate")
    return walk_count_character(g, v, 2 * k, 0, 0)


@dataclass(frozen=True, eq=False)
class BratteliDiagram:
    """Levels 0..K of the branching diagram: per level the (irrep index,
    multiplicity) pairs with nonzero multiplicity, the connecting edge
    multiplicities, and the per-level centralizer dimension."""

    group: GroupData
    levels: tuple[tuple[tuple[int, int], ...], ...]
    edges: tuple[tuple[tuple[int, int, int], ...], ...]  # (from irrep, to irrep, count)
    algebra_dims: tuple[int, ...]

    def to_json(self) -> str:
        labels = [i.label for i in self.group.irreps]
        doc = {
            "group": self.group.name,
            "levels": [
                [{"label": labels[i], "multiplicity": str(m)} for i, m in level]
                for level in self.levels
            ],
            "edges": [
                [{"from": labels[a], "to": labels[b], "count": str(c)} for a, b, c in lv]
                for lv in self.edges
            ],
            "algebra_dims": [str(d) for d in self.algebra_dims],
        }
        return json.dumps(doc, indent=2)


def bratteli(g: GroupData, v: ModuleChar, levels: int) -> BratteliDiagram:
    """Build the diagram by the level recurrence m_k = m_{k-1} * A."""
    _require_full(g, "bratteli")
    if levels < 0:
        raise ValueError("level count must be nonnegative")
    a = mckay_adjacency(g, v)
    n = g.n_classes
    mult = [0] * n
    mult[0] = 1
    out_levels = [tuple((i, m) for i, m in enumerate(mult) if m)]
    out_edges = []
    dims = [sum(m * m for m in mult)]
    for _ in range(levels):
        nxt = [0] * n
        step_edges = []
        for nu in range(n):
            if mult[nu] == 0:
                continue
            row = a.entries[nu]
            for lam in range(n):
                if row[lam]:
                    nxt[lam] += mult[nu] * row[lam]
                    step_edges.append((nu, lam, row[lam]))
        mult = nxt
        out_levels.append(tuple((i, m) for i, m in enumerate(mult) if m))
        out_edges.append(tuple(step_edges))
        dims.append(sum(m * m for m in mult))
    return BratteliDiagram(g, tuple(out_levels), tuple(out_edges), tuple(dims))


def eigen_check(g: GroupData, v: ModuleChar, a: WalkMatrix):
    """Verify sum_lam a[nu][lam] chi_lam(c_mu) = chi_V(c_mu) chi_nu(c_mu) for
    all nu, mu in exact arithmetic.  Returns (ok, first failing (nu, mu))."""
    _require_full(g, "eigen_check")
    n = g.n_classes
    for nu in range(n):
        row = a.entries[nu]
        for mu in range(n):
            lhs = CycNum.zero(1)
            for lam in range(n):
                if row[lam]:
                    lhs = lhs + row[lam] * g.chi(lam, mu)
            rhs = v.values[mu] * g.chi(nu, mu)
            if lhs != rhs:
                return False, (nu, mu)
    return True, None


def quiver_dot(g: GroupData, a: WalkMatrix) -> str:
    """Graphviz rendering.  Symmetric pairs are drawn once without direction
    (per-pair convention); asymmetric pairs keep their arrows.  Loops allowed."""
    labels = [i.label for i in g.irreps]
    lines = ["digraph quiver {"]
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    n = a.dim
    for i in range(n):
        for j in range(i, n):
            fwd = a.entries[i][j]
            bwd = a.entries[j][i]
            if i == j:
                lines.extend(f"  n{i} -> n{i};" for _ in range(fwd))
            elif fwd == bwd:
                lines.extend(f"  n{i} -> n{j} [dir=none];" for _ in range(fwd))
            else:
                lines.extend(f"  n{i} -> n{j};" for _ in range(fwd))
                lines.extend(f"  n{j} -> n{i};" for _ in range(bwd))
    lines.append("}")
    return "\n".join(lines)


def bratteli_dot(bd: BratteliDiagram) -> str:
    labels = [i.label for i in bd.group.irreps]
    lines = ["graph bratteli {", "  rankdir=TB;"]
    for k, level in enumerate(bd.levels):
        names = " ".join(f"k{k}_{i}" for i, _ in level)
        lines.append(f"  {{ rank=same; {names} }}")
        for i, m in level:
            lines.append(f'  k{k}_{i} [label="{labels[i]} ({m})"];')
    for k, step in enumerate(bd.edges):
        present_prev = {i for i, _ in bd.levels[k]}
        present_next = {i for i, _ in bd.levels[k + 1]}
        for a_i, b_i, c in step:
            if a_i in present_prev and b_i in present_next:
                lines.extend(f"  k{k}_{a_i} -- k{k + 1}_{b_i};" for _ in range(c))
    lines.append("}")
    return "\n".join(lines)
