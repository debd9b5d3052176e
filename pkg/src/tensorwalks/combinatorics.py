"""Partitions, multipartitions, Stirling/Kostka/rencontres numbers, and
centralizer orders for symmetric and wreath-product groups."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

# A partition is a weakly decreasing tuple of positive ints; () is the
# partition of 0.  A multipartition is a tuple of partitions.
Partition = tuple
MultiPartition = tuple


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def parts_equal_to(lam: Partition, j: int) -> int:
    return sum(1 for p in lam if p == j)


def fixed_point_count(lam: Partition) -> int:
    """Number of fixed points of a permutation with cycle type lam."""
    return parts_equal_to(lam, 1)


def stirling2(k: int, l: int) -> int:
    """Stirling number of the second kind {k, l} by the alternating closed
    form; {0, 0} = 1 and {0, l} = 0 for l > 0."""
    if k < 0 or l < 0:
        raise ValueError("indices must be nonnegative")
    if l == 0:
        return 1 if k == 0 else 0
    total = sum((-1) ** (l - j) * comb(l, j) * j**k for j in range(l + 1))
    q, rem = divmod(total, factorial(l))
    assert rem == 0
    return q


def bell_number(m: int) -> int:
    return sum(stirling2(m, l) for l in range(m + 1))


def kostka_hook_content(lam: Partition, l: int) -> int:
    """Number of semistandard tableaux of shape lam with n-l entries 0 and one
    entry each of 1..l (rows weakly increase, columns strictly increase).
    Direct backtracking enumeration."""
    n = sum(lam)
    if not 0 <= l <= n:
        raise ValueError("content length out of range")
    remaining = [n - l] + [1] * l  # multiplicity of each value 0..l
    rows = len(lam)

    def fill(r: int, c: int, row_prev: int, grid: list[list[int]]) -> int:
        if r == rows:
            return 1
        width = lam[r]
        if c == width:
            return fill(r + 1, 0, -1, grid)
        above = grid[r - 1][c] if r > 0 else -1
        lo = max(row_prev, above + 1)
        count = 0
        for v in range(lo, l + 1):
            if remaining[v] == 0:
                continue
            remaining[v] -= 1
            grid[r].append(v)
            count += fill(r, c + 1, v, grid)
            grid[r].pop()
            remaining[v] += 1
        return count

    return fill(0, 0, 0, [[] for _ in range(rows)])


@lru_cache(maxsize=None)
def derangements(m: int) -> int:
    if m == 0:
        return 1
    if m == 1:
        return 0
    return (m - 1) * (derangements(m - 1) + derangements(m - 2))


def rencontres(n: int, m: int) -> int:
    """Number of permutations of n letters with exactly m fixed points."""
    if not 0 <= m <= n:
        raise ValueError("fixed-point count out of range")
    return comb(n, m) * derangements(n - m)


def z_lambda(lam: Partition) -> int:
    """Centralizer order of a permutation of cycle type lam in S_|lam|."""
    z = 1
    for j in set(lam):
        pj = parts_equal_to(lam, j)
        z *= j**pj * factorial(pj)
    return z


def z_multipartition(alpha: MultiPartition, r: int) -> int:
    """Centralizer order of the class labeled by an r-multipartition in the
    wreath product of a cyclic group of order r with S_n."""
    total_parts = sum(len(a) for a in alpha)
    z = r**total_parts
    for a in alpha:
        z *= z_lambda(a)
    return z


def multipartitions_of(n: int, r: int) -> list[MultiPartition]:
    """All r-tuples of partitions with total size n, deterministic order."""
    out: list[MultiPartition] = []

    def gen(i: int, remaining: int, acc: tuple):
        if i == r - 1:
            for lam in partitions_of(remaining):
                out.append(acc + (lam,))
            return
        for size in range(remaining, -1, -1):
            for lam in partitions_of(size):
                gen(i + 1, remaining - size, acc + (lam,))

    gen(0, n, ())
    return out


def multinomial(k: int, parts) -> int:
    """Multinomial coefficient k! / prod(parts!); the parts must sum to k."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != k:
        raise ValueError("parts must sum to k")
    out = 1
    rest = k
    for p in parts:
        out *= comb(rest, p)
        rest -= p
    return out


def compositions(k: int, m: int):
    """Yield all m-tuples of nonnegative ints summing to k."""
    if m == 0:
        if k == 0:
            yield ()
        return
    if m == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in compositions(k - first, m - 1):
            yield (first,) + rest


def even_block_partitions(k: int, s: int) -> int:
    """Number of set partitions of a 2k-set into s nonempty blocks of even
    size, by the alternating-sum closed form."""
    if k < 1 or s < 1:
        raise ValueError("k and s must be positive")
    total = sum((-1) ** (s - j) * comb(2 * s, s - j) * j ** (2 * k) for j in range(1, s + 1))
    value = Fraction(total, factorial(s) * 2 ** (s - 1))
    assert value.denominator == 1
    return int(value)
