"""Matrix-unit basis of the centralizer algebra of an abelian group acting on
tensor powers of its coordinate module, realized as two-row labeled diagrams.

A basis element pairs a bottom word gamma and a top word beta over the letter
alphabet 1..n (one letter per cyclic factor); it is valid when each letter
appears in both words with multiplicities congruent modulo that factor's
order.  Composition is concatenation: stacking e1 on top of e2 gives a
nonzero result exactly when e2's top row matches e1's bottom row, and the
worked product keeps e2's bottom with e1's top."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class DiagramElement:
    radii: tuple[int, ...]
    bottom: tuple[int, ...]  # gamma
    top: tuple[int, ...]     # beta

    @property
    def k(self) -> int:
        return len(self.bottom)


def word_target(radii, word) -> tuple[int, ...]:
    """Componentwise sum of the coordinate vectors of the letters, mod radii."""
    counts = [0] * len(radii)
    for letter in word:
        counts[letter - 1] += 1
    return tuple(c % r for c, r in zip(counts, radii))


def is_valid(e: DiagramElement) -> bool:
    n = len(e.radii)
    if len(e.top) != len(e.bottom):
        return False
    words_ok = all(1 <= x <= n for x in e.bottom) and all(1 <= x <= n for x in e.top)
    if not words_ok:
        return False
    return word_target(e.radii, e.bottom) == word_target(e.radii, e.top)


def basis_counts(radii, k: int) -> dict[tuple[int, ...], int]:
    """Number of words of length k per target vector."""
    radii = tuple(radii)
    counts: dict[tuple[int, ...], int] = {}
    for word in itertools.product(range(1, len(radii) + 1), repeat=k):
        t = word_target(radii, word)
        counts[t] = counts.get(t, 0) + 1
    return counts


def basis_count(radii, k: int, target=None) -> int:
    """Cardinality of the diagram basis without materializing it."""
    counts = basis_counts(radii, k)
    if target is not None:
        m = counts.get(tuple(target), 0)
        return m * m
    return sum(m * m for m in counts.values())


def enumerate_basis(radii, k: int, target=None) -> list[DiagramElement]:
    """All valid basis elements, in lexicographic (bottom, top) order.  With a
    target: the square block for that target; without: the whole basis."""
    radii = tuple(radii)
    if k < 0:
        raise ValueError("word length must be nonnegative")
    by_target: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for word in itertools.product(range(1, len(radii) + 1), repeat=k):
        by_target.setdefault(word_target(radii, word), []).append(word)
    out = []
    if target is not None:
        groups = [by_target.get(tuple(target), [])]
    else:
        groups = [by_target[t] for t in sorted(by_target)]
    for words in groups:
        for bottom in words:
            for top in words:
                out.append(DiagramElement(radii, bottom, top))
    if target is None:
        out.sort(key=lambda e: (e.bottom, e.top))
    return out


def compose(e1: DiagramElement, e2: DiagramElement) -> DiagramElement | None:
    """Product with e2 applied first (e1 stacked above e2); None is the zero
    of the algebra."""
    if e1.radii != e2.radii or e1.k != e2.k:
        raise ValueError("elements live in different algebras")
    if e2.top != e1.bottom:
        return None
    return DiagramElement(e1.radii, e2.bottom, e1.top)


def action_on_tensor(e: DiagramElement, word) -> tuple[int, ...] | None:
    """Apply to a basis tensor labeled by `word`: the top word when the input
    matches the bottom word, else zero (None)."""
    word = tuple(word)
    if len(word) != e.k:
        raise ValueError("word length mismatch")
    return e.top if word == e.bottom else None


def render_text(e: DiagramElement) -> str:
    """Fixed-width two-row picture plus the blocks of equal-label nodes."""
    width = max((len(str(x)) for x in e.top + e.bottom), default=1)
    top = " ".join(str(x).rjust(width) for x in e.top)
    bottom = " ".join(str(x).rjust(width) for x in e.bottom)
    lines = [f"top:    {top}", f"bottom: {bottom}"]
    for letter in range(1, len(e.radii) + 1):
        members = [f"t{i + 1}" for i, x in enumerate(e.top) if x == letter]
        members += [f"b{i + 1}" for i, x in enumerate(e.bottom) if x == letter]
        if members:
            lines.append(f"label {letter}: " + " ".join(members))
    return "\n".join(lines)


def render_dot(e: DiagramElement) -> str:
    """DOT rendering; within each label class the nodes are joined along one
    canonical chain (edge routing is immaterial, connectivity is the point)."""
    lines = ["graph diagram {", "  rankdir=TB;"]
    k = e.k
    tops = " ".join(f"t{i}" for i in range(1, k + 1))
    bots = " ".join(f"b{i}" for i in range(1, k + 1))
    lines.append(f"  {{ rank=same; {tops} }}")
    lines.append(f"  {{ rank=same; {bots} }}")
    for i, x in enumerate(e.top, start=1):
        lines.append(f'  t{i} [label="{x}"];')
    for i, x in enumerate(e.bottom, start=1):
        lines.append(f'  b{i} [label="{x}"];')
    for letter in range(1, len(e.radii) + 1):
        chain = [f"t{i}" for i, x in enumerate(e.top, start=1) if x == letter]
        chain += [f"b{i}" for i, x in enumerate(e.bottom, start=1) if x == letter]
        for a, b in zip(chain, chain[1:]):
            lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines)
