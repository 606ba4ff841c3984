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
import unittest

import numpy as np
from hypothesis import given, strategies as st

from moncat.catalog import random_finset_morphism, random_free_source, random_group_morphism
from moncat.category import coequalizers_agree, coequalizers_isomorphic, flatten_index, morphism_equal, \
    multiple_coequalizer, reflexive_pair, unflatten_index
from moncat.finab import AbMor, FinAb, PresentedAbGroup
from moncat.finset import FinSet, FinSetMor, FinSetObj
from moncat.smith import int_matrix


def random_finset_pairs(rng: np.random.Generator, codomain: FinSetObj, count: int):
    pairs = []

    for _ in range(count):
        source = FinSetObj(int(rng.integers(1, 3)))
        pairs.append((random_finset_morphism(rng, source, codomain), random_finset_morphism(rng, source, codomain)))

    return pairs


def random_finab_pairs(rng: np.random.Generator, codomain: PresentedAbGroup, count: int):
    pairs = []

    for _ in range(count):
        source = random_free_source(rng)
        pairs.append((random_group_morphism(rng, source, codomain), random_group_morphism(rng, source, codomain)))

    return pairs


FINAB_TARGETS = [PresentedAbGroup.cyclic(8), PresentedAbGroup.from_invariants(2, 4), PresentedAbGroup.cyclic(12),
                 PresentedAbGroup.from_invariants(3, 3)]


class MultipleCoequalizerTests(unittest.TestCase):
    def test_no_pairs_is_identity(self):
        backend = FinSet()
        a = FinSetObj(3)
        coequalizer = multiple_coequalizer(backend, [], codomain=a)

        self.assertEqual(coequalizer.obj, a)
        self.assertEqual(coequalizer.projection, backend.identity(a))

    def test_no_pairs_needs_codomain(self):
        with self.assertRaises(ValueError):
            multiple_coequalizer(FinSet(), [])

    def test_two_pairs(self):
        backend = FinSet()
        point, a = FinSetObj(1), FinSetObj(4)
        pairs = [(FinSetMor(point, a, [2]), FinSetMor(point, a, [0])),
                 (FinSetMor(point, a, [1]), FinSetMor(point, a, [0]))]

        coequalizer = multiple_coequalizer(backend, pairs)

        self.assertEqual(coequalizer.obj.size, 2)
        self.assertEqual(coequalizer.projection.table.tolist(), [0, 0, 0, 1])

    def test_equal_legs(self):
        backend = FinSet()
        a = FinSetObj(3)
        f = FinSetMor(FinSetObj(2), a, [0, 1])
        g = FinSetMor(FinSetObj(1), a, [2])

        coequalizer = multiple_coequalizer(backend, [(f, f), (g, g)])

        self.assertTrue(backend.is_isomorphism(coequalizer.projection))

    def test_rejects_pairs_with_different_codomains(self):
        backend = FinSet()
        f = FinSetMor(FinSetObj(1), FinSetObj(2), [0])
        g = FinSetMor(FinSetObj(1), FinSetObj(3), [0])

        with self.assertRaises(ValueError):
            multiple_coequalizer(backend, [(f, f), (g, g)])

    def test_factorize(self):
        backend = FinSet()
        point, a = FinSetObj(1), FinSetObj(4)
        pairs = [(FinSetMor(point, a, [2]), FinSetMor(point, a, [0])),
                 (FinSetMor(point, a, [3]), FinSetMor(point, a, [1]))]
        coequalizer = multiple_coequalizer(backend, pairs)
        h = FinSetMor(a, FinSetObj(2), [1, 0, 1, 0])

        self.assertEqual(backend.compose(coequalizer.factorize(h), coequalizer.projection), h)

    def test_finset_order_independence(self):
        backend = FinSet()
        rng = np.random.default_rng(5)

        for _ in range(50):
            a = FinSetObj(int(rng.integers(2, 7)))
            pairs = random_finset_pairs(rng, a, int(rng.integers(2, 4)))
            reference = multiple_coequalizer(backend, pairs)

            for permutation in itertools.permutations(pairs):
                self.assertTrue(coequalizers_agree(backend, reference, multiple_coequalizer(backend, permutation)))

    def test_finab_order_independence(self):
        backend = FinAb()
        rng = np.random.default_rng(6)

        for _ in range(50):
            a = FINAB_TARGETS[int(rng.integers(len(FINAB_TARGETS)))]
            pairs = random_finab_pairs(rng, a, int(rng.integers(2, 4)))
            reference = multiple_coequalizer(backend, pairs)

            for permutation in itertools.permutations(pairs):
                self.assertTrue(coequalizers_agree(backend, reference, multiple_coequalizer(backend, permutation)))


class ReflexivePairTests(unittest.TestCase):
    def test_components(self):
        backend = FinSet()
        point, d = FinSetObj(1), FinSetObj(2)
        pair = reflexive_pair(backend, FinSetMor(point, d, [0]), FinSetMor(point, d, [1]))

        self.assertEqual(pair.fbar.table.tolist(), [0, 0, 1])
        self.assertEqual(pair.gbar.table.tolist(), [1, 0, 1])
        self.assertEqual(backend.compose(pair.fbar, pair.section), backend.identity(d))
        self.assertEqual(backend.compose(pair.gbar, pair.section), backend.identity(d))
        self.assertEqual(backend.coequalizer(pair.fbar, pair.gbar).obj.size, 1)

    def test_equal_legs(self):
        backend = FinSet()
        f = FinSetMor(FinSetObj(2), FinSetObj(3), [0, 2])
        pair = reflexive_pair(backend, f, f)

        self.assertTrue(backend.is_isomorphism(backend.coequalizer(pair.fbar, pair.gbar).projection))

    def test_finset_reduction(self):
        backend = FinSet()
        rng = np.random.default_rng(11)

        for _ in range(50):
            a = FinSetObj(int(rng.integers(1, 7)))
            (f, g), = random_finset_pairs(rng, a, 1)
            pair = reflexive_pair(backend, f, g)

            self.assertTrue(coequalizers_agree(backend, backend.coequalizer(f, g),
                                               backend.coequalizer(pair.fbar, pair.gbar)))

    def test_finab_reduction(self):
        backend = FinAb()
        rng = np.random.default_rng(12)

        for _ in range(50):
            a = FINAB_TARGETS[int(rng.integers(len(FINAB_TARGETS)))]
            (f, g), = random_finab_pairs(rng, a, 1)
            pair = reflexive_pair(backend, f, g)
            first, second = backend.coequalizer(f, g), backend.coequalizer(pair.fbar, pair.gbar)

            self.assertTrue(coequalizers_agree(backend, first, second))
            self.assertTrue(coequalizers_isomorphic(backend, first, second))


class MorphismEqualTests(unittest.TestCase):
    def test_finset(self):
        backend = FinSet()
        x, y = FinSetObj(2), FinSetObj(3)

        self.assertTrue(morphism_equal(backend, FinSetMor(x, y, [0, 2]), FinSetMor(x, y, [0, 2])))
        self.assertFalse(morphism_equal(backend, FinSetMor(x, y, [0, 2]), FinSetMor(x, y, [0, 1])))

    def test_finab_compares_modulo_relations(self):
        z, z4 = PresentedAbGroup.free(1), PresentedAbGroup.cyclic(4)

        self.assertTrue(morphism_equal(FinAb(), AbMor(z, z4, int_matrix([[1]])), AbMor(z, z4, int_matrix([[5]]))))

    def test_rejects_non_parallel(self):
        with self.assertRaises(ValueError):
            morphism_equal(FinSet(), FinSetMor(FinSetObj(1), FinSetObj(2), [0]),
                           FinSetMor(FinSetObj(1), FinSetObj(3), [0]))


class IndexTests(unittest.TestCase):
    def test_row_major(self):
        self.assertEqual(flatten_index((1, 2), (2, 3)), 5)
        self.assertEqual(unflatten_index(5, (2, 3)), (1, 2))

    @given(st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=4), st.data())
    def test_inverse(self, sizes, data):
        indices = tuple(data.draw(st.integers(min_value=0, max_value=size - 1)) for size in sizes)

        self.assertEqual(unflatten_index(flatten_index(indices, sizes), sizes), indices)
