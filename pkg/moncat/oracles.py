"""
Brute-force reference computations that share no code with the categorical constructions.
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

import itertools
import logging
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from moncat.finab import AbMor, PresentedAbGroup
from moncat.finset import FinSetMor, UnionFind
from moncat.monoid import MonoidObject, MonoidMorphism, check_monoid_morphism, finab_ring, finset_monoid
from moncat.smith import hstack, int_matrix, matmul, zeros


def smallest_congruence(monoid: MonoidObject, pairs: Iterable[Tuple[int, int]]) -> Tuple[List[int], List[int]]:
    """
    The smallest congruence on a FinSet monoid containing the given pairs, by closing an equivalence relation under
    multiplication on both sides until nothing changes.

    :return: The class index of every element (classes numbered by smallest member) and the smallest member of every
        class.
    """
    table = monoid.table
    n = monoid.size
    union_find = UnionFind(n)

    for a, b in pairs:
        union_find.union(int(a), int(b))

    changed = True

    while changed:
        changed = False

        for a in range(n):
            for b in range(a + 1, n):
                if union_find.find(a) != union_find.find(b):
                    continue

                for c in range(n):
                    changed |= union_find.union(int(table[c, a]), int(table[c, b]))
                    changed |= union_find.union(int(table[a, c]), int(table[b, c]))

    return union_find.canonical_classes()


def congruence_quotient(monoid: MonoidObject, pairs: Iterable[Tuple[int, int]]) -> Tuple[MonoidObject, List[int]]:
    """The quotient monoid by `smallest_congruence` and the class index of every element."""
    class_index, representatives = smallest_congruence(monoid, pairs)
    table = monoid.table
    quotient_table = [[class_index[table[a, b]] for b in representatives] for a in representatives]

    return finset_monoid(quotient_table, class_index[monoid.identity_element]), class_index


def generated_pairs(alpha: FinSetMor, beta: FinSetMor) -> List[Tuple[int, int]]:
    return [(alpha(x), beta(x)) for x in range(alpha.domain.size)]


def ideal_closure(ring: MonoidObject, generators: Iterable[Sequence[int]]) -> FrozenSet[int]:
    """
    The two-sided ideal of a finite ring generated by some elements, as a set of element indices: the additive
    subgroup spanned by every a·g·b.
    """
    group = ring.carrier
    elements = group.elements
    products = {group.index_of(ring.product(ring.product(a, g), b))
                for g in generators for a in elements for b in elements}
    ideal = {group.index_of(group.zero())}
    frontier = list(ideal)

    while frontier:
        x = elements[frontier.pop()]

        for s in products:
            y = group.index_of([u + v for u, v in zip(x, elements[s])])

            if y not in ideal:
                ideal.add(y)
                frontier.append(y)

    return frozenset(ideal)


def ideal_quotient(ring: MonoidObject, ideal: Iterable[int]) -> PresentedAbGroup:
    """The additive group A / I."""
    group = ring.carrier
    vectors = [group.elements[i] for i in sorted(ideal)]
    extra = int_matrix([list(column) for column in zip(*vectors)], rows=group.gens, cols=len(vectors))

    return PresentedAbGroup(group.gens, hstack([group.relations, extra], rows=group.gens))


def monoid_ring(monoid: MonoidObject) -> MonoidObject:
    """Z[D]: the free abelian group on the elements of a finite monoid with [d]·[d'] = [d·d']."""
    n = monoid.size
    structure = zeros(n, n * n)

    for a in range(n):
        for b in range(n):
            structure[monoid.product(a, b), a * n + b] = 1

    unit = [1 if d == monoid.identity_element else 0 for d in range(n)]

    return finab_ring(PresentedAbGroup.free(n), structure, unit, name=f"Z[{monoid.name}]" if monoid.name else '')


def is_monoid_homomorphism_table(source: MonoidObject, target: MonoidObject, table: Sequence[int]) -> bool:
    if table[source.identity_element] != target.identity_element:
        return False

    source_table, target_table = source.table, target.table

    return all(table[source_table[a, b]] == target_table[table[a], table[b]]
               for a in range(source.size) for b in range(source.size))


def enumerate_monoid_homomorphisms(source: MonoidObject, target: MonoidObject) -> List[MonoidMorphism]:
    """Every monoid homomorphism between FinSet monoids, by testing every function between the carriers."""
    homomorphisms = []

    for table in itertools.product(range(target.size), repeat=source.size):
        if is_monoid_homomorphism_table(source, target, table):
            homomorphisms.append(MonoidMorphism(source, target, FinSetMor(source.carrier, target.carrier, table)))

    logging.debug(f"Found {len(homomorphisms)} monoid homomorphisms by brute force.")

    return homomorphisms


def enumerate_ring_homomorphisms(source: MonoidObject, target: MonoidObject) -> List[MonoidMorphism]:
    """
    Every unital ring homomorphism from a ring to a finite ring, by testing every assignment of generator images.
    """
    group = source.carrier
    images = target.carrier.elements
    homomorphisms = []

    for columns in itertools.product(images, repeat=group.gens):
        matrix = zeros(target.carrier.gens, group.gens)

        for j, column in enumerate(columns):
            matrix[:, j] = column

        if not target.carrier.contains(matmul(matrix, group.relations)):
            continue

        candidate = MonoidMorphism(source, target, AbMor(group, target.carrier, matrix, check=False))

        if check_monoid_morphism(candidate).ok:
            homomorphisms.append(candidate)

    logging.debug(f"Found {len(homomorphisms)} ring homomorphisms by brute force.")

    return homomorphisms
