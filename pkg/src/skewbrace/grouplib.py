"""Built-in table of all groups of order at most 16, up to isomorphism.

Each entry is an explicit construction; the test-suite checks that the lists
are pairwise non-isomorphic and have the known sizes.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import UnsupportedOrder
from .groups import (
    CayleyGroup,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product,
    find_isomorphism,
    group_from_permutations,
    semidirect_product,
    trivial_group,
    unit_power_action,
)

MAX_LIBRARY_ORDER = 16

# number of groups of each order (OEIS A000001)
GROUP_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
                11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}


def _named(G: CayleyGroup, name: str) -> CayleyGroup:
    return CayleyGroup(G.op, name)


def _abelian(*factors: int) -> CayleyGroup:
    G = cyclic_group(factors[0])
    for f in factors[1:]:
        G = direct_product(G, cyclic_group(f))
    return _named(G, "x".join(f"C{f}" for f in factors))


def _c4c2_action(images) -> list[np.ndarray]:
    """Order-2 action on C4 x C2 (index 2i + j) sending (i, j) to images(i, j)."""
    swap = np.empty(8, dtype=np.int64)
    for i in range(4):
        for j in range(2):
            a, b = images(i, j)
            swap[2 * i + j] = 2 * (a % 4) + (b % 2)
    return [np.arange(8), swap]


def _alternating4() -> CayleyGroup:
    return group_from_permutations([[1, 2, 0, 3], [1, 0, 3, 2]], name="A4")


def _build(n: int) -> list[CayleyGroup]:
    C = cyclic_group
    if n == 1:
        return [trivial_group()]
    if n in (2, 3, 5, 7, 11, 13):
        return [C(n)]
    if n == 4:
        return [C(4), _abelian(2, 2)]
    if n == 6:
        return [C(6), _named(dihedral_group(3), "S3")]
    if n == 8:
        return [C(8), _abelian(4, 2), _abelian(2, 2, 2), dihedral_group(4), dicyclic_group(2)]
    if n == 9:
        return [C(9), _abelian(3, 3)]
    if n == 10:
        return [C(10), dihedral_group(5)]
    if n == 12:
        dic3 = semidirect_product(C(3), C(4), unit_power_action(3, 4, 2), name="Dic12")
        return [C(12), _abelian(6, 2), dihedral_group(6), _alternating4(), dic3]
    if n == 14:
        return [C(14), dihedral_group(7)]
    if n == 15:
        return [C(15)]
    if n == 16:
        c4c2 = _abelian(4, 2)
        return [
            C(16),
            _abelian(4, 4),
            semidirect_product(c4c2, C(2), _c4c2_action(lambda i, j: (i, j + i)),
                               name="(C4xC2):C2"),
            semidirect_product(C(4), C(4), unit_power_action(4, 4, 3), name="C4:C4"),
            _abelian(8, 2),
            semidirect_product(C(8), C(2), unit_power_action(8, 2, 5), name="M16"),
            dihedral_group(8),
            semidirect_product(C(8), C(2), unit_power_action(8, 2, 3), name="SD16"),
            dicyclic_group(4),
            _abelian(4, 2, 2),
            _named(direct_product(dihedral_group(4), C(2)), "D8xC2"),
            _named(direct_product(dicyclic_group(2), C(2)), "Q8xC2"),
            semidirect_product(c4c2, C(2), _c4c2_action(lambda i, j: (i + 2 * j, j)),
                               name="C4oD8"),
            _abelian(2, 2, 2, 2),
        ]
    raise UnsupportedOrder(f"no built-in group table for order {n}")


@lru_cache(maxsize=None)
def groups_of_order(n: int) -> tuple[CayleyGroup, ...]:
    """All groups of order ``n`` (``n <= 16``), one per isomorphism class."""
    if not 1 <= n <= MAX_LIBRARY_ORDER:
        raise UnsupportedOrder(f"order {n} outside the built-in range 1..{MAX_LIBRARY_ORDER}")
    return tuple(_build(n))


def group_by_name(name: str) -> CayleyGroup:
    for n in range(1, MAX_LIBRARY_ORDER + 1):
        for G in groups_of_order(n):
            if G.name == name:
                return G
    raise KeyError(name)


def identify(G: CayleyGroup) -> tuple[int, str]:
    """Position and name of the library group isomorphic to ``G``."""
    for k, H in enumerate(groups_of_order(G.order)):
        if G.profile == H.profile and find_isomorphism(G, H) is not None:
            return k, H.name
    raise ValueError("group not found in the built-in library")
