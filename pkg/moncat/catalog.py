"""
Catalogs of small monoids and rings, and seeded random instances built from them.
"""

#  MONCAT, computes colimits of monoids in monoidal categories.
#  Copyright (C) 2023 The MONCAT authors
#
#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program.  If not, see <https://www.gnu.org/licenses/>.

import functools
import itertools
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from moncat.finab import AbMor, PresentedAbGroup
from moncat.finset import FinSetMor, FinSetObj
from moncat.monoid import MonoidObject, finab_ring, finset_monoid
from moncat.smith import block_diagonal, zeros
from moncat.utils import check_domain, Domain


def _canonical_table(table: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """The smallest relabelling of a table whose identity is 0, over all permutations fixing 0."""
    n = len(table)
    best = None

    for permutation in itertools.permutations(range(1, n)):
        relabel = (0,) + permutation
        inverse = [0] * n

        for old, new in enumerate(relabel):
            inverse[new] = old

        relabelled = tuple(relabel[table[inverse[a]][inverse[b]]] for a in range(n) for b in range(n))

        if best is None or relabelled < best:
            best = relabelled

    return best


def _is_partially_associative(table: List[List[int]], n: int) -> bool:
    for a in range(n):
        for b in range(n):
            ab = table[a][b]

            if ab < 0:
                continue

            for c in range(n):
                bc = table[b][c]

                if bc < 0:
                    continue

                left, right = table[ab][c], table[a][bc]

                if left >= 0 and right >= 0 and left != right:
                    return False

    return True


@functools.lru_cache(maxsize=None)
def _monoid_tables(order: int) -> Tuple[Tuple[int, ...], ...]:
    if order == 1:
        return ((0,),)

    table = [[-1] * order for _ in range(order)]

    for a in range(order):
        table[0][a] = a
        table[a][0] = a

    cells = [(a, b) for a in range(1, order) for b in range(1, order)]
    found = set()

    def backtrack(position: int):
        if position == len(cells):
            found.add(_canonical_table(table))
            return

        a, b = cells[position]

        for value in range(order):
            table[a][b] = value

            if _is_partially_associative(table, order):
                backtrack(position + 1)

        table[a][b] = -1

    backtrack(0)

    return tuple(sorted(found))


def enumerate_monoids(order: int) -> List[MonoidObject]:
    """
    Every monoid with `order` elements up to isomorphism, with identity 0. Tables are completed cell by cell and
    abandoned as soon as a fully known triple violates associativity; isomorphic tables are merged by their smallest
    relabelling.
    """
    check_domain(order, 'order', int, Domain.Positive)
    tables = _monoid_tables(order)
    logging.debug(f"Enumerated {len(tables)} monoids of order {order}.")

    return [finset_monoid(np.reshape(flat, (order, order)), 0, name=f"M{order}.{i}") for i, flat in enumerate(tables)]


def monoid_catalog(max_order: int = 4) -> List[MonoidObject]:
    """Every monoid of order 1, ..., max_order up to isomorphism (1, 2, 7 and 35 of them)."""
    return [monoid for order in range(1, max_order + 1) for monoid in enumerate_monoids(order)]


def trivial_monoid() -> MonoidObject:
    return finset_monoid([[0]], 0, name='1')


def cyclic_group(n: int) -> MonoidObject:
    """(Z/n, +, 0)"""
    return finset_monoid([[(a + b) % n for b in range(n)] for a in range(n)], 0, name=f"(Z/{n},+)")


def multiplicative_monoid(n: int) -> MonoidObject:
    """(Z/n, ·, 1)"""
    return finset_monoid([[(a * b) % n for b in range(n)] for a in range(n)], 1 % n, name=f"(Z/{n},*)")


def idempotent_monoid() -> MonoidObject:
    """{e, a} with a·a = a."""
    return finset_monoid([[0, 1], [1, 1]], 0, labels=('e', 'a'), name='{e,a|aa=a}')


def zmod_ring(n: int) -> MonoidObject:
    """The ring Z/n, where n = 0 gives Z."""
    return finab_ring(PresentedAbGroup.cyclic(n), [[1]], [1], name=f"Z/{n}" if n else 'Z')


def product_ring(first: MonoidObject, second: MonoidObject) -> MonoidObject:
    """The product ring R × S with componentwise operations, generators of R first."""
    g, h = first.carrier.gens, second.carrier.gens
    k = g + h
    structure = zeros(k, k * k)

    for i in range(g):
        for j in range(g):
            structure[:g, i * k + j] = first.mult.matrix[:, i * g + j]

    for i in range(h):
        for j in range(h):
            structure[g:, (g + i) * k + (g + j)] = second.mult.matrix[:, i * h + j]

    unit = [int(x) for x in first.unit.matrix[:, 0]] + [int(x) for x in second.unit.matrix[:, 0]]
    group = PresentedAbGroup(k, block_diagonal(first.carrier.relations, second.carrier.relations))

    return finab_ring(group, structure, unit, name=f"{first.name}x{second.name}")


def upper_triangular_ring() -> MonoidObject:
    """2×2 upper triangular matrices over Z/2, on the generators E11, E12, E22."""
    products = {(0, 0): 0, (0, 1): 1, (1, 2): 1, (2, 2): 2}
    structure = zeros(3, 9)

    for (i, j), k in products.items():
        structure[k, i * 3 + j] = 1

    return finab_ring(PresentedAbGroup.from_invariants(2, 2, 2), structure, [1, 0, 1], name='UT2(Z/2)')


def ring_catalog() -> List[MonoidObject]:
    """Small finite rings: Z/n for n ≤ 8, Z/2 × Z/2, Z/2 × Z/3 and the upper triangular 2×2 matrices over Z/2."""
    rings = [zmod_ring(n) for n in range(1, 9)]
    rings.append(product_ring(zmod_ring(2), zmod_ring(2)))
    rings.append(product_ring(zmod_ring(2), zmod_ring(3)))
    rings.append(upper_triangular_ring())

    return rings


def random_monoid(rng: np.random.Generator, max_order: int = 4) -> MonoidObject:
    catalog = monoid_catalog(max_order)

    return catalog[int(rng.integers(len(catalog)))]


def random_finset_morphism(rng: np.random.Generator, domain: FinSetObj, codomain: FinSetObj) -> FinSetMor:
    return FinSetMor(domain, codomain, rng.integers(0, codomain.size, size=domain.size))


def random_ring(rng: np.random.Generator) -> MonoidObject:
    catalog = ring_catalog()

    return catalog[int(rng.integers(len(catalog)))]


def _group_morphism(domain: PresentedAbGroup, codomain: PresentedAbGroup,
                    columns: Sequence[Tuple[int, ...]]) -> Optional[AbMor]:
    """The morphism with the given generator images, None if the images do not respect the relations."""
    matrix = zeros(codomain.gens, domain.gens)

    for j, column in enumerate(columns):
        matrix[:, j] = column

    try:
        return AbMor(domain, codomain, matrix)
    except ValueError:
        return None


def random_group_morphism(rng: np.random.Generator, domain: PresentedAbGroup, codomain: PresentedAbGroup,
                          tries: int = 1000, enumeration_limit: int = 4096) -> AbMor:
    """
    A random morphism into a finite group. When the domain is finite and there are at most `enumeration_limit`
    assignments of generator images, one is drawn uniformly from every valid morphism. Otherwise random generator
    images are tried until the relations are respected.

    :raises RuntimeError: if none of the `tries` random assignments is a morphism.
    """
    elements = codomain.elements

    if domain.is_finite and len(elements) ** domain.gens <= enumeration_limit:
        morphisms = [f for f in (_group_morphism(domain, codomain, columns)
                                 for columns in itertools.product(elements, repeat=domain.gens)) if f is not None]

        return morphisms[int(rng.integers(len(morphisms)))]

    for _ in range(tries):
        columns = [elements[int(i)] for i in rng.integers(0, len(elements), size=domain.gens)]
        morphism = _group_morphism(domain, codomain, columns)

        if morphism is not None:
            return morphism

    raise RuntimeError(f"None of {tries} random assignments of generator images defines a morphism "
                       f"{domain.describe()} -> {codomain.describe()}.")


def random_int_matrix(rng: np.random.Generator, rows: int, cols: int, bound: int = 9):
    """A rows×cols matrix of Python ints with entries in [-bound, bound]."""
    matrix = zeros(rows, cols)

    for i in range(rows):
        for j in range(cols):
            matrix[i, j] = int(rng.integers(-bound, bound + 1))

    return matrix


def random_free_source(rng: np.random.Generator, max_rank: int = 2) -> PresentedAbGroup:
    """Z^k for a random 1 ≤ k ≤ max_rank."""
    return PresentedAbGroup.free(int(rng.integers(1, max_rank + 1)))
