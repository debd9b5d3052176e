import itertools
from math import comb, factorial

import pytest

from tensorwalks.combinatorics import (
    bell_number,
    compositions,
    derangements,
    even_block_partitions,
    kostka_hook_content,
    multinomial,
    multipartitions_of,
    partitions_of,
    rencontres,
    stirling2,
    z_lambda,
    z_multipartition,
)
from tensorwalks.groups import build_symmetric


def test_partitions_reverse_lex():
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions_of(10)) == 42
    for n in range(1, 9):
        parts = partitions_of(n)
        assert parts[0] == (n,)
        assert all(sum(p) == n for p in parts)
        assert all(list(p) == sorted(p, reverse=True) for p in parts)


def _set_partitions(items, blocks):
    """Brute-force set partitions of `items` into exactly `blocks` parts."""
    if not items:
        if blocks == 0:
            yield []
        return

    def rec(rest, acc):
        if not rest:
            if len(acc) == blocks:
                yield [list(b) for b in acc]
            return
        x, tail = rest[0], rest[1:]
        for i in range(len(acc)):
            yield from rec(tail, acc[: i] + [acc[i] + [x]] + acc[i + 1 :])
        if len(acc) < blocks:
            yield from rec(tail, acc + [[x]])

    yield from rec(list(items), [])


def test_stirling_against_enumeration():
    assert stirling2(0, 0) == 1
    assert stirling2(0, 3) == 0
    assert stirling2(4, 2) == 7
    for k in range(1, 7):
        for l in range(1, k + 1):
            assert stirling2(k, l) == sum(1 for _ in _set_partitions(range(k), l))


def test_stirling_recurrence():
    for k in range(21):
        for l in range(1, 21):
            assert stirling2(k + 1, l) == l * stirling2(k, l) + stirling2(k, l - 1)


def test_bell_numbers():
    assert [bell_number(m) for m in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_kostka_values():
    assert kostka_hook_content((2, 2), 2) == 1
    assert kostka_hook_content((2, 2), 3) == 2
    assert kostka_hook_content((2, 2), 4) == 2
    for n in range(1, 8):
        for l in range(n + 1):
            assert kostka_hook_content((n,), l) == 1
    # single-column shape admits a filling only when at most one zero remains
    assert kostka_hook_content((1, 1, 1), 3) == 1
    assert kostka_hook_content((1, 1, 1), 2) == 1
    assert kostka_hook_content((1, 1, 1), 1) == 0
    assert kostka_hook_content((3, 1), 2) == 2


def test_kostka_dimension_identity():
    # at depth one the multiplicity of each irrep in the permutation module
    # weights its dimension into dim V = n
    for n in range(2, 6):
        g = build_symmetric(n)
        dims = {info.label: info.dim for info in g.irreps}
        total = sum(
            dims[str(lam)] * kostka_hook_content(lam, 1) for lam in partitions_of(n)
        )
        assert total == n


def test_rencontres():
    assert rencontres(2, 1) == 0
    assert rencontres(2, 2) == 1
    assert rencontres(4, 2) == 6
    for n in range(1, 9):
        counts = [rencontres(n, m) for m in range(n + 1)]
        assert sum(counts) == factorial(n)
        assert sum(m * c for m, c in enumerate(counts)) == factorial(n)
    # direct enumeration for small n
    for n in range(1, 6):
        seen = [0] * (n + 1)
        for perm in itertools.permutations(range(n)):
            seen[sum(1 for i, x in enumerate(perm) if i == x)] += 1
        assert seen == [rencontres(n, m) for m in range(n + 1)]


def test_derangements():
    assert [derangements(m) for m in range(7)] == [1, 0, 1, 2, 9, 44, 265]


def test_centralizer_orders():
    assert z_lambda((1, 1, 1, 1)) == 24
    assert z_lambda((2, 1, 1)) == 4
    for n in range(1, 9):
        assert sum(factorial(n) // z_lambda(lam) for lam in partitions_of(n)) == factorial(n)


def test_multipartition_centralizers():
    assert z_multipartition(((1,), (1,)), 2) == 4
    for r in (2, 3):
        for n in (1, 2, 3, 4):
            order = r**n * factorial(n)
            total = sum(order // z_multipartition(a, r) for a in multipartitions_of(n, r))
            assert total == order


def test_multinomial():
    assert multinomial(6, [2, 4]) == 15
    assert multinomial(6, [6]) == 1
    assert multinomial(12, [4, 4, 4]) == 34650
    with pytest.raises(ValueError):
        multinomial(5, [2, 2])
    for parts in compositions(6, 3):
        assert multinomial(6, parts) == factorial(6) // (
            factorial(parts[0]) * factorial(parts[1]) * factorial(parts[2])
        )


def test_even_block_partitions():
    assert even_block_partitions(1, 1) == 1
    assert even_block_partitions(2, 2) == 3
    assert even_block_partitions(2, 1) == 1
    for k in range(1, 6):  # 2k <= 10
        for s in range(1, k + 1):
            brute = sum(
                1
                for p in _set_partitions(range(2 * k), s)
                if all(len(b) % 2 == 0 and b for b in p)
            )
            assert even_block_partitions(k, s) == brute, (k, s)
        assert even_block_partitions(k, k + 1) == 0


def test_compositions():
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(2, 0)) == []
    assert len(list(compositions(5, 3))) == comb(7, 2)
