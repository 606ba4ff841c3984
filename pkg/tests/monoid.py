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

from moncat.catalog import cyclic_group, enumerate_monoids, monoid_catalog, multiplicative_monoid, random_free_source, \
    random_group_morphism, random_monoid, random_finset_morphism, random_ring, zmod_ring
from moncat.category import FactorizationError, flatten_index
from moncat.finab import AbMor, FinAb, PresentedAbGroup
from moncat.finset import FinSet, FinSetMor, FinSetObj
from moncat.free import HomomorphicExtension, truncated_free_object
from moncat.monoid import MonoidMorphism, MonoidObject, check_monoid, check_monoid_morphism, coequalizer_coincidence, \
    fact1_identities, finset_monoid, lambda_of, monoid_coequalizer, monoid_multiple_coequalizer
from moncat.oracles import congruence_quotient, enumerate_monoid_homomorphisms, generated_pairs, ideal_closure, \
    ideal_quotient
from moncat.smith import int_matrix

# Identity 0, 3 is absorbing, and (1·2)·3 = 3 but 1·(2·3) = 1.
BROKEN_TABLE = [[0, 1, 2, 3],
                [1, 3, 1, 3],
                [2, 3, 2, 2],
                [3, 3, 3, 3]]


def point_map(codomain: FinSetObj, value: int) -> FinSetMor:
    return FinSetMor(FinSetObj(1), codomain, [value])


class MonoidLawTests(unittest.TestCase):
    def test_cyclic_group(self):
        report = check_monoid(cyclic_group(4))

        self.assertTrue(report.ok, msg=report.to_text())

    def test_broken_associativity_witness(self):
        report = check_monoid(finset_monoid(BROKEN_TABLE, 0))

        self.assertFalse(report.ok)
        self.assertEqual([check.name for check in report.failures], ['associativity'])
        self.assertEqual(report.failures[0].witness, (1, 2, 3))

    def test_broken_unit(self):
        report = check_monoid(finset_monoid([[0, 0], [0, 1]], 0))

        self.assertIn('left_unit', [check.name for check in report.failures])

    def test_rings(self):
        for ring in (zmod_ring(8), zmod_ring(0)):
            report = check_monoid(ring)
            self.assertTrue(report.ok, msg=report.to_text())

    def test_catalog_passes(self):
        for monoid in monoid_catalog(3):
            self.assertTrue(check_monoid(monoid).ok, msg=str(monoid))

    def test_multiplication_must_be_square(self):
        with self.assertRaises(ValueError):
            finset_monoid([[0, 1]], 0)

    def test_monoid_morphisms(self):
        z2, z4 = cyclic_group(2), cyclic_group(4)

        doubling = MonoidMorphism(z2, z4, FinSetMor(z2.carrier, z4.carrier, [0, 2]))
        self.assertTrue(check_monoid_morphism(doubling).ok)

        inclusion = MonoidMorphism(z2, z4, FinSetMor(z2.carrier, z4.carrier, [0, 1]))
        report = check_monoid_morphism(inclusion)
        self.assertFalse(report.ok)
        self.assertEqual(report.failures[0].name, 'multiplicative')
        self.assertEqual(report.failures[0].witness, (1, 1))

    def test_json(self):
        for monoid in (cyclic_group(3), zmod_ring(6)):
            self.assertEqual(MonoidObject.from_json(monoid.to_json()), monoid)


class LambdaTests(unittest.TestCase):
    def test_finset_evaluation(self):
        monoid = multiplicative_monoid(4)
        x = FinSetObj(1)
        gamma = point_map(monoid.carrier, 2)

        lambda_gamma = lambda_of(monoid, gamma)

        self.assertEqual(lambda_gamma(flatten_index((3, 0, 3), (4, 1, 4))), 2)

        for a in range(4):
            for b in range(4):
                self.assertEqual(lambda_gamma(flatten_index((a, 0, b), (4, x.size, 4))), (a * 2 * b) % 4)

    def test_unit_absorption(self):
        monoid = cyclic_group(3)
        backend = monoid.backend
        gamma = point_map(monoid.carrier, monoid.identity_element)

        # With X = I, Λ_e is the multiplication of the outer factors.
        self.assertEqual(backend.tensor(backend.tensor(monoid.carrier, backend.unit), monoid.carrier),
                         backend.domain(monoid.mult))
        self.assertEqual(lambda_of(monoid, gamma), monoid.mult)

    def test_ring_evaluation(self):
        ring = zmod_ring(8)
        gamma = AbMor(PresentedAbGroup.free(1), ring.carrier, int_matrix([[2]]))

        lambda_gamma = lambda_of(ring, gamma)

        self.assertEqual(lambda_gamma((1,)), ring.carrier.canonical([2]))

    def test_rejects_morphism_into_other_object(self):
        monoid = cyclic_group(3)

        with self.assertRaises(ValueError):
            lambda_of(monoid, point_map(FinSetObj(2), 0))


class Fact1Tests(unittest.TestCase):
    def test_identity(self):
        monoid = cyclic_group(4)
        alpha = FinSetMor(FinSetObj(2), monoid.carrier, [1, 3])

        report = fact1_identities(MonoidMorphism.identity(monoid), alpha)

        self.assertTrue(report.ok, msg=report.to_text())

    def test_reduction_mod_two(self):
        source, target = multiplicative_monoid(4), multiplicative_monoid(2)
        backend = source.backend
        tau = MonoidMorphism(source, target, FinSetMor(source.carrier, target.carrier, [0, 1, 0, 1]))
        alpha = point_map(source.carrier, 2)
        self.assertTrue(check_monoid_morphism(tau).ok)

        for beta_value, agree in ((0, True), (1, False)):
            beta = point_map(source.carrier, beta_value)
            report = fact1_identities(tau, alpha, beta)
            self.assertTrue(report.ok, msg=report.to_text())

            self.assertEqual(backend.equal(backend.compose(tau.morphism, alpha), backend.compose(tau.morphism, beta)),
                             agree)
            self.assertEqual(backend.equal(backend.compose(tau.morphism, lambda_of(source, alpha)),
                                           backend.compose(tau.morphism, lambda_of(source, beta))), agree)

    def test_plain_morphism_needs_source(self):
        monoid = cyclic_group(2)

        with self.assertRaises(ValueError):
            fact1_identities(monoid.backend.identity(monoid.carrier), point_map(monoid.carrier, 1))

    def test_random_finset_instances(self):
        rng = np.random.default_rng(1)

        for _ in range(100):
            source, target = random_monoid(rng, 3), random_monoid(rng, 3)
            homomorphisms = enumerate_monoid_homomorphisms(source, target)
            tau = homomorphisms[int(rng.integers(len(homomorphisms)))]
            x = FinSetObj(int(rng.integers(1, 3)))
            alpha = random_finset_morphism(rng, x, source.carrier)
            beta = random_finset_morphism(rng, x, source.carrier)

            report = fact1_identities(tau, alpha, beta)
            self.assertTrue(report.ok, msg=report.to_text())
            self.assertEqual(len(report), 4)

    def test_random_ring_instances(self):
        rng = np.random.default_rng(2)

        for _ in range(100):
            ring = random_ring(rng)
            x = random_free_source(rng)
            alpha = random_group_morphism(rng, x, ring.carrier)
            beta = random_group_morphism(rng, x, ring.carrier)
            gamma = random_group_morphism(rng, x, ring.carrier)
            # Quotient maps of rings are ring morphisms.
            tau = monoid_coequalizer(ring, gamma, ring.backend.zero(x, ring.carrier)).projection

            report = fact1_identities(tau, alpha, beta)
            self.assertTrue(report.ok, msg=report.to_text())

    def test_plain_morphisms(self):
        rng = np.random.default_rng(3)

        for _ in range(25):
            source, target = random_monoid(rng, 3), random_monoid(rng, 3)
            tau = random_finset_morphism(rng, source.carrier, target.carrier)
            x = FinSetObj(1)
            alpha = random_finset_morphism(rng, x, source.carrier)
            beta = random_finset_morphism(rng, x, source.carrier)

            report = fact1_identities(tau, alpha, beta, source=source)
            self.assertTrue(report.ok, msg=report.to_text())
            self.assertNotIn('equivalence.generators_to_lambda', [check.name for check in report.checks])

        for _ in range(25):
            source, target = random_ring(rng), random_ring(rng)
            tau = random_group_morphism(rng, source.carrier, target.carrier)
            x = random_free_source(rng)
            alpha = random_group_morphism(rng, x, source.carrier)
            beta = random_group_morphism(rng, x, source.carrier)

            report = fact1_identities(tau, alpha, beta, source=source)
            self.assertTrue(report.ok, msg=report.to_text())


class MonoidCoequalizerTests(unittest.TestCase):
    def test_equal_legs(self):
        monoid = cyclic_group(4)
        alpha = FinSetMor(FinSetObj(2), monoid.carrier, [0, 2])

        coequalizer = monoid_coequalizer(monoid, alpha, alpha)

        self.assertTrue(monoid.backend.is_isomorphism(coequalizer.projection.morphism))
        self.assertEqual(coequalizer.quotient, monoid)

    def test_cyclic_group_quotient(self):
        monoid = cyclic_group(4)
        x = FinSetObj(2)
        alpha = FinSetMor(x, monoid.carrier, [0, 2])
        beta = FinSetMor(x, monoid.carrier, [0, 0])

        coequalizer = monoid_coequalizer(monoid, alpha, beta)

        np.testing.assert_array_equal(coequalizer.quotient.table, [[0, 1], [1, 0]])
        self.assertEqual(coequalizer.projection.morphism.table.tolist(), [0, 1, 0, 1])
        self.assertEqual(coequalizer.quotient, congruence_quotient(monoid, [(2, 0)])[0])

        report = coequalizer.verify()
        self.assertTrue(report.ok, msg=report.to_text())

    def test_ring_quotient(self):
        ring = zmod_ring(8)
        z = PresentedAbGroup.free(1)
        alpha = AbMor(z, ring.carrier, int_matrix([[2]]))
        beta = AbMor(z, ring.carrier, int_matrix([[0]]))

        coequalizer = monoid_coequalizer(ring, alpha, beta)
        quotient = coequalizer.quotient

        self.assertTrue(quotient.carrier.is_isomorphic(PresentedAbGroup.cyclic(2)))
        ideal = ideal_closure(ring, [[2]])
        self.assertEqual(sorted(ring.carrier.elements[i][0] % 8 for i in ideal), [0, 2, 4, 6])
        self.assertTrue(ideal_quotient(ring, ideal).is_isomorphic(quotient.carrier))

        report = coequalizer.verify()
        self.assertTrue(report.ok, msg=report.to_text())

    def test_factorize(self):
        monoid = cyclic_group(4)
        coequalizer = monoid_coequalizer(monoid, point_map(monoid.carrier, 2), point_map(monoid.carrier, 0))
        target = cyclic_group(2)
        tau = MonoidMorphism(monoid, target, FinSetMor(monoid.carrier, target.carrier, [0, 1, 0, 1]))

        sigma = coequalizer.factorize(tau)

        self.assertEqual(monoid.backend.compose(sigma.morphism, coequalizer.projection.morphism), tau.morphism)
        self.assertTrue(check_monoid_morphism(sigma).ok)

    def test_factorize_rejects_non_coequalizing_morphism(self):
        monoid = cyclic_group(4)
        coequalizer = monoid_coequalizer(monoid, point_map(monoid.carrier, 2), point_map(monoid.carrier, 0))

        with self.assertRaises(FactorizationError):
            coequalizer.factorize(MonoidMorphism.identity(monoid))

    def test_catalog_against_smallest_congruence(self):
        backend = FinSet()

        for order in range(1, 5):
            for monoid in enumerate_monoids(order):
                a = monoid.carrier

                for size in (1, 2):
                    x = FinSetObj(size)
                    tables = list(itertools.product(range(order), repeat=size))

                    for alpha_table, beta_table in itertools.combinations_with_replacement(tables, 2):
                        alpha, beta = FinSetMor(x, a, alpha_table), FinSetMor(x, a, beta_table)
                        coequalizer = monoid_coequalizer(monoid, alpha, beta)
                        oracle, class_index = congruence_quotient(monoid, generated_pairs(alpha, beta))

                        self.assertEqual(coequalizer.quotient, oracle, msg=f"{monoid.name}: {alpha}, {beta}")
                        np.testing.assert_array_equal(coequalizer.quotient.table, oracle.table)
                        self.assertEqual(coequalizer.projection.morphism.table.tolist(), class_index)

                        report = coequalizer.verify()
                        self.assertTrue(report.ok, msg=report.to_text())
                        self.assertTrue(backend.is_epimorphism(coequalizer.projection.morphism))

    def test_catalog_factorization(self):
        backend = FinSet()
        targets = monoid_catalog(3)

        for monoid in monoid_catalog(4):
            homomorphisms = [tau for target in targets for tau in enumerate_monoid_homomorphisms(monoid, target)]

            for size in (1, 2):
                x = FinSetObj(size)
                tables = list(itertools.product(range(monoid.size), repeat=size))

                for alpha_table, beta_table in itertools.combinations_with_replacement(tables, 2):
                    alpha, beta = FinSetMor(x, monoid.carrier, alpha_table), FinSetMor(x, monoid.carrier, beta_table)
                    coequalizer = monoid_coequalizer(monoid, alpha, beta)
                    factored = 0

                    for tau in homomorphisms:
                        if backend.compose(tau.morphism, alpha) != backend.compose(tau.morphism, beta):
                            continue

                        sigma = coequalizer.factorize(tau)
                        factored += 1

                        self.assertEqual(backend.compose(sigma.morphism, coequalizer.projection.morphism),
                                         tau.morphism, msg=f"{monoid.name}: {alpha}, {beta}, {tau}")
                        self.assertTrue(check_monoid_morphism(sigma).ok)

                    # At least the morphism to the trivial monoid coequalizes every pair.
                    self.assertGreater(factored, 0)

    def test_random_rings_against_ideal_closure(self):
        rng = np.random.default_rng(4)

        for _ in range(50):
            ring = random_ring(rng)
            x = random_free_source(rng)
            alpha = random_group_morphism(rng, x, ring.carrier)
            beta = random_group_morphism(rng, x, ring.carrier)

            coequalizer = monoid_coequalizer(ring, alpha, beta)
            generators = [[a - b for a, b in zip(alpha(e), beta(e))]
                          for e in (x.basis_vector(i) for i in range(x.gens))]
            oracle = ideal_quotient(ring, ideal_closure(ring, generators))

            self.assertEqual(coequalizer.quotient.carrier.invariant_factors, oracle.invariant_factors)

            report = coequalizer.verify()
            self.assertTrue(report.ok, msg=report.to_text())


class MultipleMonoidCoequalizerTests(unittest.TestCase):
    def test_no_pairs(self):
        monoid = cyclic_group(4)

        coequalizer = monoid_multiple_coequalizer(monoid, [])

        self.assertEqual(coequalizer.quotient, monoid)
        self.assertEqual(coequalizer.projection.morphism, monoid.backend.identity(monoid.carrier))

    def test_collapse_to_trivial(self):
        monoid = cyclic_group(4)
        pairs = [(point_map(monoid.carrier, 2), point_map(monoid.carrier, 0)),
                 (point_map(monoid.carrier, 1), point_map(monoid.carrier, 0))]

        coequalizer = monoid_multiple_coequalizer(monoid, pairs)

        self.assertEqual(coequalizer.quotient.size, 1)
        self.assertTrue(coequalizer.verify().ok)

    def test_order_independence(self):
        rng = np.random.default_rng(8)

        for _ in range(25):
            monoid = random_monoid(rng)
            pairs = [(random_finset_morphism(rng, FinSetObj(1), monoid.carrier),
                      random_finset_morphism(rng, FinSetObj(1), monoid.carrier))
                     for _ in range(int(rng.integers(2, 4)))]
            reference = monoid_multiple_coequalizer(monoid, pairs)

            for permutation in itertools.permutations(pairs):
                other = monoid_multiple_coequalizer(monoid, permutation)
                self.assertEqual(other.quotient, reference.quotient)
                self.assertEqual(other.projection.morphism, reference.projection.morphism)

        for _ in range(25):
            ring = random_ring(rng)
            pairs = []

            for _ in range(int(rng.integers(2, 4))):
                x = random_free_source(rng)
                pairs.append((random_group_morphism(rng, x, ring.carrier), random_group_morphism(rng, x, ring.carrier)))

            reference = monoid_multiple_coequalizer(ring, pairs)

            for permutation in itertools.permutations(pairs):
                other = monoid_multiple_coequalizer(ring, permutation)
                self.assertEqual(other.quotient, reference.quotient)
                self.assertEqual(other.projection.morphism, reference.projection.morphism)


class CoincidenceTests(unittest.TestCase):
    def test_same_pair(self):
        monoid = cyclic_group(4)
        pair = (point_map(monoid.carrier, 2), point_map(monoid.carrier, 0))

        self.assertTrue(coequalizer_coincidence(monoid, pair, pair))

    def test_different_pairs(self):
        monoid = cyclic_group(4)
        first = (point_map(monoid.carrier, 2), point_map(monoid.carrier, 0))
        second = (point_map(monoid.carrier, 1), point_map(monoid.carrier, 0))

        self.assertFalse(coequalizer_coincidence(monoid, first, second))

    def test_homomorphic_extensions(self):
        backend = FinSet()
        rng = np.random.default_rng(9)

        for _ in range(20):
            monoid = random_monoid(rng, 3)
            x = FinSetObj(2)
            alpha = random_finset_morphism(rng, x, monoid.carrier)
            beta = random_finset_morphism(rng, x, monoid.carrier)
            free_object = truncated_free_object(backend, x, 2)
            extended = (HomomorphicExtension(monoid, alpha).truncated(free_object),
                        HomomorphicExtension(monoid, beta).truncated(free_object))

            self.assertTrue(coequalizer_coincidence(monoid, (alpha, beta), extended))

    def test_ring_homomorphic_extensions(self):
        backend = FinAb()
        ring = zmod_ring(12)
        x = PresentedAbGroup.free(1)
        alpha = AbMor(x, ring.carrier, int_matrix([[2]]))
        beta = AbMor(x, ring.carrier, int_matrix([[8]]))
        free_object = truncated_free_object(backend, x, 2)
        extended = (HomomorphicExtension(ring, alpha).truncated(free_object),
                    HomomorphicExtension(ring, beta).truncated(free_object))

        self.assertTrue(coequalizer_coincidence(ring, (alpha, beta), extended))
