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

import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from moncat.catalog import cyclic_group, idempotent_monoid, monoid_catalog, multiplicative_monoid, random_monoid, \
    zmod_ring
from moncat.finab import AbMor, FinAb, PresentedAbGroup
from moncat.finset import FinSet, FinSetMor, FinSetObj
from moncat.free import DegreeOverflowError, FreeMonoidAdjunction, HomomorphicExtension, WordMonoid, \
    enumerate_word_morphisms, homomorphic_extension, iterated_multiplication, monad_on_morphism, \
    truncated_free_object, truncated_tensor_algebra
from moncat.smith import int_matrix, to_lists


class WordMonoidTests(unittest.TestCase):
    def test_concatenation(self):
        words = WordMonoid(FinSetObj(2))

        self.assertEqual(words.multiply((0, 1), (1,)), (0, 1, 1))
        self.assertEqual(words.multiply(words.unit, (1,)), (1,))

    def test_invalid_letter(self):
        with self.assertRaises(ValueError):
            WordMonoid(FinSetObj(2)).generator(2)

    def test_words_are_indexed_like_the_truncation(self):
        alphabet = FinSetObj(2)
        words = WordMonoid(alphabet)
        free_object = truncated_free_object(FinSet(), alphabet, 3)

        listed = list(words.words(3))

        self.assertEqual(len(listed), free_object.obj.size)
        self.assertEqual(listed[:4], [(), (0,), (1,), (0, 0)])

        for i, word in enumerate(listed):
            self.assertEqual(words.index_of(word), i)

        self.assertEqual(free_object.offset(2), 3)


class HomomorphicExtensionTests(unittest.TestCase):
    def test_empty_word_is_unit(self):
        monoid = multiplicative_monoid(5)
        extension = HomomorphicExtension(monoid, FinSetMor(FinSetObj(2), monoid.carrier, [2, 3]))

        self.assertEqual(extension(()), monoid.identity_element)

    def test_cyclic_group(self):
        monoid = cyclic_group(3)
        extension = homomorphic_extension(FinSetMor(FinSetObj(1), monoid.carrier, [1]), monoid)

        self.assertEqual(extension((0, 0)), 2)
        self.assertEqual(extension((0, 0, 0)), 0)

    def test_truncated_matches_words(self):
        monoid = multiplicative_monoid(6)
        alphabet = FinSetObj(2)
        extension = HomomorphicExtension(monoid, FinSetMor(alphabet, monoid.carrier, [2, 5]))
        free_object = truncated_free_object(FinSet(), alphabet, 3)

        truncated = extension.truncated(free_object)

        for i, word in enumerate(WordMonoid(alphabet).words(3)):
            self.assertEqual(truncated(i), extension(word))

    def test_degree_overflow(self):
        monoid = cyclic_group(3)
        extension = HomomorphicExtension(monoid, FinSetMor(FinSetObj(1), monoid.carrier, [1]), truncation=2)

        with self.assertRaises(DegreeOverflowError):
            extension((0, 0, 0))

        with self.assertRaises(DegreeOverflowError):
            extension.component(3)

    def test_ring_extension(self):
        ring = zmod_ring(7)
        z = PresentedAbGroup.free(1)
        extension = HomomorphicExtension(ring, AbMor(z, ring.carrier, int_matrix([[3]])))

        self.assertEqual(extension((0, 0)), ring.carrier.canonical([9]))
        self.assertEqual(extension.component(2)((1,)), ring.carrier.canonical([9]))

    def test_rejects_morphism_into_other_object(self):
        with self.assertRaises(ValueError):
            HomomorphicExtension(cyclic_group(3), FinSetMor(FinSetObj(1), FinSetObj(2), [1]))

    def test_iterated_multiplication(self):
        monoid = cyclic_group(3)

        self.assertEqual(iterated_multiplication(monoid, 0), monoid.unit)
        self.assertEqual(iterated_multiplication(monoid, 1), FinSet().identity(monoid.carrier))
        self.assertEqual(iterated_multiplication(monoid, 3)(13), (1 + 1 + 1) % 3)


class FreeMonoidAdjunctionTests(unittest.TestCase):
    def test_triangles(self):
        rng = np.random.default_rng(11)

        for _ in range(20):
            monoid = random_monoid(rng, 3)
            alphabet = FinSetObj(int(rng.integers(1, 3)))
            alpha = FinSetMor(alphabet, monoid.carrier, rng.integers(0, monoid.size, size=alphabet.size))
            adjunction = FreeMonoidAdjunction(FinSet(), alphabet, truncation=3)

            report = adjunction.check_triangles(monoid, alpha)
            self.assertTrue(report.ok, msg=report.to_text())

    def test_ring_triangles(self):
        ring = zmod_ring(6)
        z = PresentedAbGroup.free(1)
        adjunction = FreeMonoidAdjunction(FinAb(), z, truncation=3)

        report = adjunction.check_triangles(ring, AbMor(z, ring.carrier, int_matrix([[5]])))

        self.assertTrue(report.ok, msg=report.to_text())

    def test_unit_extension_is_identity(self):
        adjunction = FreeMonoidAdjunction(FinSet(), FinSetObj(2), truncation=3)
        free_object = adjunction.free_object.obj

        self.assertEqual(adjunction.unit_extension(), FinSet().identity(free_object))

    def test_unit_extension_detects_wrong_unit(self):
        class SwappedUnit(FreeMonoidAdjunction):
            @property
            def unit(self):
                swap = FinSetMor(self.base, self.base, [1, 0])

                return self.backend.compose(self.free_object.injection(1), swap)

        monoid = idempotent_monoid()
        alpha = FinSetMor(FinSetObj(2), monoid.carrier, [1, 1])

        report = SwappedUnit(FinSet(), FinSetObj(2), truncation=2).check_triangles(monoid, alpha)

        failures = [check.name for check in report.failures]
        self.assertIn('unit_extension_is_identity', failures)
        # (0,) is sent to (1,).
        self.assertEqual(report.failures[0].witness, 1)

    def test_unit_extension_needs_finite_sets(self):
        with self.assertRaises(TypeError):
            FreeMonoidAdjunction(FinAb(), PresentedAbGroup.free(1), truncation=2).unit_extension()

    def test_word_morphisms_are_extensions(self):
        for monoid in monoid_catalog(3):
            for size in (1, 2):
                alphabet = FinSetObj(size)
                morphisms = enumerate_word_morphisms(monoid, alphabet, 3)
                restrictions = {tuple(morphism[(letter,)] for letter in range(size)) for morphism in morphisms}

                # Every word morphism is determined by its values on the letters, and every choice occurs.
                self.assertEqual(len(morphisms), monoid.size ** size, msg=monoid.name)
                self.assertEqual(len(restrictions), len(morphisms), msg=monoid.name)

                for morphism in morphisms:
                    alpha = FinSetMor(alphabet, monoid.carrier, [morphism[(letter,)] for letter in range(size)])
                    extension = HomomorphicExtension(monoid, alpha)
                    self.assertTrue(all(extension(word) == value for word, value in morphism.items()))

    def test_word_morphisms_need_finite_sets(self):
        with self.assertRaises(TypeError):
            enumerate_word_morphisms(zmod_ring(2), FinSetObj(1), 2)


class TensorAlgebraTests(unittest.TestCase):
    def test_ranks(self):
        self.assertEqual(truncated_tensor_algebra(PresentedAbGroup.free(1), 3).ranks, (1, 1, 1, 1))
        self.assertEqual(truncated_tensor_algebra(PresentedAbGroup.free(2), 2).ranks, (1, 2, 4))

    def test_torsion_components(self):
        algebra = truncated_tensor_algebra(PresentedAbGroup.cyclic(2), 2)

        self.assertEqual(algebra.components[0], PresentedAbGroup.free(1))
        self.assertTrue(algebra.components[1].is_isomorphic(PresentedAbGroup.cyclic(2)))
        self.assertTrue(algebra.components[2].is_isomorphic(PresentedAbGroup.cyclic(2)))

    def test_truncation_must_be_at_least_two(self):
        for truncation in (0, 1):
            with self.assertRaises(ValueError):
                truncated_tensor_algebra(PresentedAbGroup.free(1), truncation)

    def test_product(self):
        algebra = truncated_tensor_algebra(PresentedAbGroup.free(2), 2)
        # 1 + e_0 and e_1, laid out as degree 0 | degree 1 | degree 2.
        u = (1, 1, 0, 0, 0, 0, 0)
        v = (0, 0, 1, 0, 0, 0, 0)

        self.assertEqual(algebra.product(u, v), (0, 0, 1, 0, 1, 0, 0))
        self.assertEqual(algebra.product(algebra.unit((1,)), v), algebra.obj.canonical(v))

    def test_product_overflow(self):
        algebra = truncated_tensor_algebra(PresentedAbGroup.free(1), 2)

        with self.assertRaises(DegreeOverflowError):
            algebra.product((0, 0, 1), (0, 1, 0))

        with self.assertRaises(DegreeOverflowError):
            algebra.multiply(2, 1)

        with self.assertRaises(DegreeOverflowError):
            algebra.component(3)

    def test_torsion_overflow_vanishes(self):
        algebra = truncated_tensor_algebra(PresentedAbGroup.cyclic(2), 2)

        # 2·e in degree 2 is zero, so its product with anything stays in range.
        self.assertEqual(algebra.product((0, 0, 2), (0, 1, 0)), algebra.obj.zero())

    def test_split(self):
        algebra = truncated_tensor_algebra(PresentedAbGroup.free(2), 2)

        self.assertEqual(algebra.split((1, 2, 3, 4, 5, 6, 7)), [(1,), (2, 3), (4, 5, 6, 7)])

        with self.assertRaises(ValueError):
            algebra.split((1, 2))


class MonadOnMorphismTests(unittest.TestCase):
    def test_doubling(self):
        z = PresentedAbGroup.free(1)
        graded = monad_on_morphism(FinAb(), AbMor(z, z, int_matrix([[2]])), 2)

        self.assertEqual([to_lists(component.matrix) for component in graded.components], [[[1]], [[2]], [[4]]])
        self.assertEqual(graded.truncation, 2)

        with self.assertRaises(DegreeOverflowError):
            graded.component(3)

    def test_total_is_block_diagonal(self):
        z = PresentedAbGroup.free(1)
        total = monad_on_morphism(FinAb(), AbMor(z, z, int_matrix([[3]])), 2).total()

        self.assertEqual(to_lists(total.matrix), [[1, 0, 0], [0, 3, 0], [0, 0, 9]])

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 3), st.data())
    def test_surjections_stay_surjective(self, domain_size, codomain_size, data):
        codomain_size = min(codomain_size, domain_size)
        # Hit every element of the codomain first, then fill the rest freely.
        table = list(range(codomain_size)) + data.draw(
            st.lists(st.integers(0, codomain_size - 1), min_size=domain_size - codomain_size,
                     max_size=domain_size - codomain_size))
        f = FinSetMor(FinSetObj(domain_size), FinSetObj(codomain_size), data.draw(st.permutations(table)))

        graded = monad_on_morphism(FinSet(), f, 3)

        self.assertTrue(all(graded.epimorphic_components()))
        self.assertTrue(FinSet().is_epimorphism(graded.total()))

    def test_group_surjections_stay_surjective(self):
        backend = FinAb()
        z = PresentedAbGroup.free(1)

        for n in (4, 6, 8, 12):
            for d in (k for k in range(1, n + 1) if n % k == 0):
                reduction = AbMor(PresentedAbGroup.cyclic(n), PresentedAbGroup.cyclic(d), int_matrix([[1]]))
                graded = monad_on_morphism(backend, reduction, 2)
                self.assertTrue(all(graded.epimorphic_components()), msg=f"Z/{n} -> Z/{d}")

        not_surjective = monad_on_morphism(backend, AbMor(z, z, int_matrix([[2]])), 2)
        self.assertEqual(not_surjective.epimorphic_components(), [True, False, False])
