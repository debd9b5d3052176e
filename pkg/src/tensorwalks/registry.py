"""The built-in full-table (group, module) pairs used by the verification
suites.  Everything here has order at most 200 and a quiver small enough for
exact polynomial determinants at desk scale."""

from __future__ import annotations

from functools import lru_cache

from .groups import (
    GroupData,
    ModuleChar,
    coordinate_module,
    paley_module,
    permutation_module,
    standard_module_cyclic,
)


@lru_cache(maxsize=1)
def builtin_fulltable_pairs() -> tuple[tuple[str, ModuleChar], ...]:
    pairs: list[tuple[str, ModuleChar]] = []
    for r in (2, 3, 4, 5, 6, 10, 12):
        pairs.append((f"Z{r} cycle", standard_module_cyclic(r)))
    for radii in ((4, 2), (2, 2, 2), (3, 3), (2, 3)):
        name = "x".join(f"Z{r}" for r in radii)
        pairs.append((f"{name} coordinate", coordinate_module(radii)))
    for n in (2, 3, 4, 5):
        pairs.append((f"S{n} permutation", permutation_module(n)))
    for p in (5, 7, 13):
        pairs.append((f"Paley {p}", paley_module(p)))
    return tuple(pairs)


def builtin_modules() -> list[tuple[str, GroupData, ModuleChar]]:
    return [(name, mod.group, mod) for name, mod in builtin_fulltable_pairs()]
