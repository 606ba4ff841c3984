"""
Lifting a monoidal adjunction L ⊣ R: 𝒞 -> 𝒟 to an adjunction between monoids, instantiated at the free abelian group
functor L: FinSet -> FinAb and the forgetful functor R, where the lifted left adjoint is the monoid ring D ↦ Z[D].

The lifted object L_D is the multiple coequalizer, in monoids over 𝒞, of two pairs of morphisms into the free monoid
TLD: the unit relation (α₁, β₁: LI -> |TLD|) identifying 1 with [e], and the multiplication relation
(α₂, β₂: L(D⊗D) -> |TLD|) identifying [d]⊗[d'] with [d·d']. The free monoid is infinite, so the Λ-pairs of these
plain morphisms are coequalized on the tensor algebra truncated at degree N, where u·γ(x)·v is only formed when it
fits. The relations lower degrees, so every truncation N ≥ 2 gives the same ring, which is verified by comparing two
consecutive truncations.

R is only realized on finite groups. Where it would have to be applied to an infinite group (R L D, R(Z)), the
adjunction works element-wise: an element of R A is an element of A, i.e. a coordinate vector.
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

import abc
import dataclasses
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from moncat.category import CoequalizerResult, Pair, multiple_coequalizer
from moncat.custom_types import Vector
from moncat.finab import AbMor, FinAb, PresentedAbGroup
from moncat.finset import FinSet, FinSetMor, FinSetObj
from moncat.free import GradedMorphism, GradedTensorAlgebra, HomomorphicExtension, monad_on_morphism, \
    truncated_tensor_algebra
from moncat.monoid import MonoidMorphism, MonoidObject, check_monoid, check_monoid_morphism, compose_monoid, \
    finab_ring
from moncat.oracles import enumerate_monoid_homomorphisms, enumerate_ring_homomorphisms
from moncat.report import VerificationReport
from moncat.smith import column_vector, kron, zeros
from moncat.utils import Domain, check_domain, tqdm_imap


class StabilizationError(RuntimeError):
    """Raised when the lifted object changes between consecutive truncation degrees."""


class MonoidalAdjunction(abc.ABC):
    """
    An adjunction L ⊣ R: 𝒞 -> 𝒟 with R lax monoidal (Φ, φ). The opmonoidal structure (Ψ, ψ) of L is not supplied
    but computed as the mate of (Φ, φ), e.g. Ψ_{D,D'} = λ_{LD⊗LD'} ∘ L(Φ_{LD,LD'}) ∘ L(κ_D ⊗ κ_D').

    Elements of R A are elements of A. The unit κ and the monoidal structure (Φ, φ) are given on elements, and the
    counit is given on any finite family of elements of A.
    """

    def __init__(self, source: FinSet, target: FinAb):
        """
        :param source: The category 𝒟.
        :param target: The category 𝒞.
        """
        self.source = source
        self.target = target

    @abc.abstractmethod
    def left_object(self, obj: FinSetObj) -> PresentedAbGroup:
        raise NotImplementedError

    @abc.abstractmethod
    def left_morphism(self, h: FinSetMor) -> AbMor:
        raise NotImplementedError

    @abc.abstractmethod
    def right_object(self, obj: PresentedAbGroup) -> FinSetObj:
        """:raises ValueError: if R A is not a finite set."""
        raise NotImplementedError

    @abc.abstractmethod
    def right_morphism(self, f: AbMor) -> FinSetMor:
        raise NotImplementedError

    @abc.abstractmethod
    def element_index(self, obj: PresentedAbGroup, element: Sequence[int]) -> int:
        """The index in R A of an element of a finite A."""
        raise NotImplementedError

    @abc.abstractmethod
    def unit_element(self, obj: FinSetObj, index: int) -> Vector:
        """κ_D(d) as an element of L D."""
        raise NotImplementedError

    @abc.abstractmethod
    def monoidal_element(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        """Φ_{A,B}(a, b) as an element of A⊗B."""
        raise NotImplementedError

    @abc.abstractmethod
    def monoidal_unit_element(self) -> Vector:
        """φ(*) as an element of the unit of 𝒞."""
        raise NotImplementedError

    @abc.abstractmethod
    def counit_on_elements(self, obj: PresentedAbGroup, elements: Sequence[Sequence[int]]) -> AbMor:
        """λ_A restricted along a finite family of elements: the morphism L(n) -> A sending generator i to a_i."""
        raise NotImplementedError

    def counit(self, obj: PresentedAbGroup) -> AbMor:
        """λ_A: L R A -> A for a finite group A."""
        return self.counit_on_elements(obj, obj.elements)

    def monoidal(self, a: PresentedAbGroup, b: PresentedAbGroup) -> FinSetMor:
        """Φ_{A,B}: R A ⊗ R B -> R(A⊗B) for finite A and B."""
        ra, rb = self.right_object(a), self.right_object(b)
        product = self.target.tensor(a, b)
        table = [self.element_index(product, self.monoidal_element(x, y)) for x in a.elements for y in b.elements]

        return FinSetMor(self.source.tensor(ra, rb), self.right_object(product), table)

    def opmonoidal(self, d: FinSetObj, e: FinSetObj) -> AbMor:
        """Ψ_{D,D'}: L(D⊗D') -> LD ⊗ LD', the mate of Φ."""
        left_d, left_e = self.left_object(d), self.left_object(e)
        images = [self.monoidal_element(self.unit_element(d, x), self.unit_element(e, y))
                  for x in range(d.size) for y in range(e.size)]

        return self.counit_on_elements(self.target.tensor(left_d, left_e), images)

    def opmonoidal_unit(self) -> AbMor:
        """ψ: L I -> I, the mate of φ."""
        return self.counit_on_elements(self.target.unit, [self.monoidal_unit_element()])


class FreeAbelianAdjunction(MonoidalAdjunction):
    """
    Z^(-) ⊣ |-| between finite sets and finitely generated abelian groups. L sends a set of size n to Z^n, κ_D sends d
    to the basis vector e_d, λ_A sends the generator [a] to a, Φ(a, b) = a⊗b and φ(*) = 1.
    """

    def __init__(self):
        super().__init__(FinSet(), FinAb())

    def left_object(self, obj: FinSetObj) -> PresentedAbGroup:
        return PresentedAbGroup.free(obj.size)

    def left_morphism(self, h: FinSetMor) -> AbMor:
        matrix = zeros(h.codomain.size, h.domain.size)

        for x in range(h.domain.size):
            matrix[h(x), x] = 1

        return AbMor(self.left_object(h.domain), self.left_object(h.codomain), matrix, check=False)

    def right_object(self, obj: PresentedAbGroup) -> FinSetObj:
        if not obj.is_finite:
            raise ValueError(f"The underlying set of {obj.describe()} is infinite, R is only realized on finite "
                             f"groups.")

        return FinSetObj(obj.order, labels=tuple(str(list(element)) for element in obj.elements))

    def right_morphism(self, f: AbMor) -> FinSetMor:
        return FinSetMor(self.right_object(f.domain), self.right_object(f.codomain),
                         [f.codomain.index_of(f(element)) for element in f.domain.elements])

    def element_index(self, obj: PresentedAbGroup, element: Sequence[int]) -> int:
        return obj.index_of(element)

    def unit_element(self, obj: FinSetObj, index: int) -> Vector:
        return self.left_object(obj).basis_vector(index)

    def monoidal_element(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        return tuple(int(x) for x in kron(column_vector(a), column_vector(b))[:, 0])

    def monoidal_unit_element(self) -> Vector:
        return (1,)

    def counit_on_elements(self, obj: PresentedAbGroup, elements: Sequence[Sequence[int]]) -> AbMor:
        matrix = zeros(obj.gens, len(elements))

        for j, element in enumerate(elements):
            matrix[:, j] = list(element)

        return AbMor(PresentedAbGroup.free(len(elements)), obj, matrix)


def free_abelian_adjunction() -> FreeAbelianAdjunction:
    return FreeAbelianAdjunction()


def check_adjunction(adjunction: MonoidalAdjunction, sets: Sequence[FinSetObj], groups: Sequence[PresentedAbGroup],
                     set_maps: Sequence[FinSetMor] = (), group_maps: Sequence[AbMor] = ()) -> VerificationReport:
    """
    Check the triangle identities, the naturality of κ, λ, Φ and Ψ, and that Ψ, ψ are the mates of Φ, φ, on the given
    sample objects and morphisms. Groups must be finite.
    """
    source, target = adjunction.source, adjunction.target
    report = VerificationReport('monoidal adjunction')

    for a in groups:
        # Rλ_A ∘ κ_{RA} = id_{RA}
        counit = adjunction.counit(a)
        ra = adjunction.right_object(a)
        report.add(f"triangle.right[{a.describe()}]", all(
            counit(adjunction.unit_element(ra, i)) == element for i, element in enumerate(a.elements)
        ))

    for d in sets:
        # λ_{LD} ∘ Lκ_D = id_{LD}
        left = adjunction.left_object(d)
        composite = adjunction.counit_on_elements(left, [adjunction.unit_element(d, x) for x in range(d.size)])
        report.add(f"triangle.left[{d.size}]", target.equal(composite, target.identity(left)))

        for e in sets:
            psi = adjunction.opmonoidal(d, e)
            report.add(f"mate.Psi[{d.size},{e.size}]", all(
                psi(adjunction.unit_element(source.tensor(d, e), x * e.size + y)) == target.tensor(
                    adjunction.left_object(d), adjunction.left_object(e)).canonical(
                    adjunction.monoidal_element(adjunction.unit_element(d, x), adjunction.unit_element(e, y)))
                for x in range(d.size) for y in range(e.size)
            ))

    psi = adjunction.opmonoidal_unit()
    report.add('mate.psi', psi(adjunction.unit_element(source.unit, 0)) == target.unit.canonical(
        adjunction.monoidal_unit_element()))

    for h in set_maps:
        lh = adjunction.left_morphism(h)
        report.add(f"naturality.kappa[{h.domain.size}->{h.codomain.size}]", all(
            lh(adjunction.unit_element(h.domain, x)) == adjunction.unit_element(h.codomain, h(x))
            for x in range(h.domain.size)
        ))

        for k in set_maps:
            lhs = target.compose(adjunction.opmonoidal(h.codomain, k.codomain),
                                 adjunction.left_morphism(source.tensor_mor(h, k)))
            rhs = target.compose(target.tensor_mor(lh, adjunction.left_morphism(k)),
                                 adjunction.opmonoidal(h.domain, k.domain))
            report.add(f"naturality.Psi[{h.domain.size}->{h.codomain.size},{k.domain.size}->{k.codomain.size}]",
                       target.equal(lhs, rhs))

    for f in group_maps:
        lhs = target.compose(f, adjunction.counit(f.domain))
        rhs = target.compose(adjunction.counit(f.codomain),
                             adjunction.left_morphism(adjunction.right_morphism(f)))
        report.add(f"naturality.lambda[{f.domain.describe()}->{f.codomain.describe()}]", target.equal(lhs, rhs))

        for g in group_maps:
            lhs = source.compose(adjunction.right_morphism(target.tensor_mor(f, g)),
                                 adjunction.monoidal(f.domain, g.domain))
            rhs = source.compose(adjunction.monoidal(f.codomain, g.codomain),
                                 source.tensor_mor(adjunction.right_morphism(f), adjunction.right_morphism(g)))
            report.add(f"naturality.Phi[{f.domain.describe()},{g.domain.describe()}]", source.equal(lhs, rhs))

    return report


@dataclasses.dataclass(frozen=True)
class GradedRelation:
    """A morphism X -> |TLD| that lands in a single degree: the injection of degree `degree` after `component`."""

    degree: int
    component: AbMor


@dataclasses.dataclass(frozen=True)
class RelationMorphisms:
    """
    The unit relation α₁ = e_{TLD}∘ψ, β₁ = ξ_{LD}∘L(e_D): LI -> |TLD| and the multiplication relation
    α₂ = m_{TLD}∘(ξ⊗ξ)∘Ψ, β₂ = ξ_{LD}∘L(m_D): L(D⊗D) -> |TLD|, in the tensor algebra truncated at degree N.
    """

    algebra: GradedTensorAlgebra
    alpha1: GradedRelation
    beta1: GradedRelation
    alpha2: GradedRelation
    beta2: GradedRelation

    def total(self, relation: GradedRelation) -> AbMor:
        return self.algebra.backend.compose(self.algebra.injection(relation.degree), relation.component)

    @property
    def pairs(self) -> Tuple[Tuple[GradedRelation, GradedRelation], ...]:
        """Multiplication relation first, then the unit relation."""
        return (self.alpha2, self.beta2), (self.alpha1, self.beta1)


def relation_morphisms(monoid: MonoidObject, truncation: int = 3,
                       adjunction: Optional[MonoidalAdjunction] = None) -> RelationMorphisms:
    """
    :raises ValueError: if `monoid` is not a FinSet monoid satisfying the monoid laws.
    """
    adjunction = free_abelian_adjunction() if adjunction is None else adjunction

    if not isinstance(monoid.backend, FinSet):
        raise ValueError(f"Can only lift monoids in finite sets, got one in {monoid.backend.name}.")

    if not check_monoid(monoid).ok:
        raise ValueError(f"{monoid} does not satisfy the monoid laws.")

    target = adjunction.target
    d = monoid.carrier
    algebra = truncated_tensor_algebra(adjunction.left_object(d), truncation)

    alpha1 = GradedRelation(0, adjunction.opmonoidal_unit())
    beta1 = GradedRelation(1, adjunction.left_morphism(monoid.unit))
    alpha2 = GradedRelation(2, target.compose(algebra.multiply(1, 1), adjunction.opmonoidal(d, d)))
    beta2 = GradedRelation(1, adjunction.left_morphism(monoid.mult))

    return RelationMorphisms(algebra=algebra, alpha1=alpha1, beta1=beta1, alpha2=alpha2, beta2=beta2)


def truncated_lambda(algebra: GradedTensorAlgebra, relation: GradedRelation, max_degree: int) -> AbMor:
    """
    Λ_γ(u⊗x⊗v) = u·γ(x)·v on ⊕ T_p ⊗ X ⊗ T_q over p + q ≤ N - max_degree, the part of TLD ⊗ X ⊗ TLD on which the
    product stays within the truncation.
    """
    backend = algebra.backend
    top = algebra.truncation - max_degree
    blocks = []

    for p in range(top + 1):
        for q in range(top - p + 1):
            middle = backend.tensor_mor_all(backend.identity(algebra.component(p)), relation.component,
                                            backend.identity(algebra.component(q)))
            blocks.append(backend.compose(algebra.injection(p + relation.degree + q), middle))

    result = blocks[0]

    for block in blocks[1:]:
        result = backend.copair(result, block)

    return result


def truncated_lambda_pairs(relations: RelationMorphisms) -> List[Pair]:
    return [(truncated_lambda(relations.algebra, first, max(first.degree, second.degree)),
             truncated_lambda(relations.algebra, second, max(first.degree, second.degree)))
            for first, second in relations.pairs]


@dataclasses.dataclass(frozen=True)
class LiftedObject:
    """The monoid L_D together with the data it was computed from."""

    """The FinSet monoid D."""
    source: MonoidObject
    """The ring L_D, presented on the generators [d]."""
    monoid: MonoidObject
    """The truncation degree N."""
    truncation: int
    relations: RelationMorphisms = dataclasses.field(repr=False)
    """The multiple coequalizer of the truncated Λ-pairs on |T_N LD|."""
    coequalizer: CoequalizerResult = dataclasses.field(repr=False)
    """The isomorphism j from the carrier of L_D onto the quotient, induced by the degree-1 inclusion."""
    inclusion: AbMor = dataclasses.field(repr=False)
    """The inverse of j."""
    retraction: AbMor = dataclasses.field(repr=False)
    """π_D: |T_N LD| -> L_D."""
    projection: AbMor = dataclasses.field(repr=False)
    """The comparison with the previous truncation degree, empty when there is none."""
    stabilization: VerificationReport = dataclasses.field(repr=False, compare=False,
                                                          default_factory=lambda: VerificationReport('stabilization'))

    @property
    def algebra(self) -> GradedTensorAlgebra:
        return self.relations.algebra


def _lift_at(monoid: MonoidObject, truncation: int, adjunction: MonoidalAdjunction) -> LiftedObject:
    backend = adjunction.target
    relations = relation_morphisms(monoid, truncation, adjunction)
    algebra = relations.algebra
    coequalizer = multiple_coequalizer(backend, truncated_lambda_pairs(relations), codomain=algebra.obj)
    projection = coequalizer.projection

    factorization = backend.image_factorization(backend.compose(projection, algebra.injection(1)))
    inclusion = factorization.mono
    carrier = factorization.image

    if not backend.is_isomorphism(inclusion):
        raise StabilizationError(f"At truncation degree {truncation}, the degree-1 generators do not generate the "
                                 f"quotient of the tensor algebra.")

    retraction = backend.inverse(inclusion)

    # [d]·[d'] is the class of the degree-2 word [d]⊗[d'], and 1 is the class of the degree-0 unit.
    mult = backend.compose_all(retraction, projection, relations.total(relations.alpha2))
    unit = backend.compose_all(retraction, projection, algebra.unit)
    ring = finab_ring(carrier, mult.matrix, [int(x) for x in unit.matrix[:, 0]],
                      name=f"Z[{monoid.name}]" if monoid.name else '')

    logging.debug(f"Lifted a monoid of order {monoid.size} at truncation {truncation}: "
                  f"{algebra.obj.gens} generators -> {carrier.describe()}.")

    return LiftedObject(source=monoid, monoid=ring, truncation=truncation, relations=relations,
                        coequalizer=coequalizer, inclusion=inclusion, retraction=retraction,
                        projection=backend.compose(retraction, projection))


def lift_object(monoid: MonoidObject, truncation: int = 3, adjunction: Optional[MonoidalAdjunction] = None,
                stabilize: bool = True) -> LiftedObject:
    """
    Compute L_D, the monoid ring Z[D] for the free abelian adjunction.

    :param monoid: A finite monoid D in FinSet.
    :param truncation: The truncation degree N ≥ 2 of the tensor algebra.
    :param adjunction: (optional) The adjunction to lift. Defaults to the free abelian adjunction.
    :param stabilize: Whether to compare with truncation N - 1 (only when N ≥ 3).
    :raises StabilizationError: if the results at N - 1 and N differ.
    """
    check_domain(truncation, 'truncation', int, Domain.Positive, minimum=2)
    adjunction = free_abelian_adjunction() if adjunction is None else adjunction
    lifted = _lift_at(monoid, truncation, adjunction)

    if not stabilize or truncation < 3:
        return lifted

    previous = _lift_at(monoid, truncation - 1, adjunction)
    report = VerificationReport('stabilization')
    detail = f"degrees {truncation - 1} and {truncation}"
    report.add('carrier', previous.monoid.carrier == lifted.monoid.carrier, detail=detail,
               witness=[previous.monoid.carrier.describe(), lifted.monoid.carrier.describe()])

    if report.ok:
        report.add('multiplication', previous.monoid.mult == lifted.monoid.mult, detail=detail)
        report.add('unit', previous.monoid.unit == lifted.monoid.unit, detail=detail)

    if not report.ok:
        raise StabilizationError(f"The lifted object of {monoid} changes between truncation {detail}: "
                                 f"{[check.name for check in report.failures]}.")

    return dataclasses.replace(lifted, stabilization=report)


@dataclasses.dataclass(frozen=True)
class LiftedUnit:
    """
    γ_D = Rπ_D ∘ η_D with η_D = Rξ_{LD} ∘ κ_D, element-wise: η_D(d) = [d] in |TLD| and γ_D(d) = [d] in L_D.
    """

    lifted: LiftedObject
    eta: Tuple[Vector, ...]
    gamma: Tuple[Vector, ...]

    def __call__(self, index: int) -> Vector:
        return self.gamma[index]

    def check(self) -> VerificationReport:
        """γ_D is a monoid morphism D -> R̄L_D, the multiplicative monoid of L_D."""
        source, ring = self.lifted.source, self.lifted.monoid
        report = VerificationReport('lifted unit')
        failures = [(a, b) for a in range(source.size) for b in range(source.size)
                    if ring.product(self.gamma[a], self.gamma[b]) != self.gamma[source.product(a, b)]]
        report.add('multiplicative', not failures, witness=failures[0] if failures else None)
        report.add('unital', self.gamma[source.identity_element] == ring.identity_element)
        report.add('factors_through_eta', all(
            self.lifted.projection(eta) == gamma for eta, gamma in zip(self.eta, self.gamma)))

        return report


def lifted_unit(lifted: LiftedObject, adjunction: Optional[MonoidalAdjunction] = None) -> LiftedUnit:
    adjunction = free_abelian_adjunction() if adjunction is None else adjunction
    d = lifted.source.carrier
    xi = lifted.algebra.injection(1)
    eta = tuple(xi(adjunction.unit_element(d, x)) for x in range(d.size))

    return LiftedUnit(lifted=lifted, eta=eta, gamma=tuple(lifted.projection(element) for element in eta))


def lift_right(ring: MonoidObject, adjunction: Optional[MonoidalAdjunction] = None) -> MonoidObject:
    """
    R̄A: the multiplicative monoid of a finite ring, with multiplication R(m_A)∘Φ_{A,A} and unit R(e_A)∘φ.

    :raises ValueError: if the additive group of the ring is infinite.
    """
    adjunction = free_abelian_adjunction() if adjunction is None else adjunction
    group = ring.carrier
    carrier = adjunction.right_object(group)
    mult = adjunction.source.compose(adjunction.right_morphism(ring.mult), adjunction.monoidal(group, group))
    unit = adjunction.element_index(group, ring.unit(adjunction.monoidal_unit_element()))

    return MonoidObject(adjunction.source, carrier, mult, FinSetMor(adjunction.source.unit, carrier, [unit]),
                        name=f"R({ring.name})" if ring.name else '')


class MonoidRingLifting:
    """
    The lifted adjunction between finite monoids and rings at a fixed truncation degree: L_D, γ_D, σ_A, L_h, and the
    bijection between monoid morphisms D -> R̄A and ring morphisms L_D -> A. Lifted objects are cached.

    The hom-set computations only need the multiplication relations, which live in degree 2, so the default
    truncation is 2.
    """

    def __init__(self, truncation: int = 2, adjunction: Optional[MonoidalAdjunction] = None, show_progress=False):
        check_domain(truncation, 'truncation', int, Domain.Positive, minimum=2)
        self.truncation = truncation
        self.adjunction = free_abelian_adjunction() if adjunction is None else adjunction
        self.show_progress = show_progress
        self._lifts: Dict[MonoidObject, LiftedObject] = {}
        self._counits: Dict[MonoidObject, Tuple[MonoidObject, MonoidMorphism]] = {}

    def lift(self, monoid: MonoidObject) -> LiftedObject:
        if monoid not in self._lifts:
            self._lifts[monoid] = lift_object(monoid, self.truncation, self.adjunction)

        return self._lifts[monoid]

    def unit(self, monoid: MonoidObject) -> LiftedUnit:
        return lifted_unit(self.lift(monoid), self.adjunction)

    def right(self, ring: MonoidObject) -> MonoidObject:
        return lift_right(ring, self.adjunction)

    def counit(self, ring: MonoidObject) -> MonoidMorphism:
        """
        σ_A: L_{R̄A} -> A, the factorization through the quotient of the truncated extension ε_A of λ_A: LRA -> |A|,
        restricted along j. On generators, σ_A([a]) = a.
        """
        if ring not in self._counits:
            backend = self.adjunction.target
            right = self.right(ring)
            lifted = self.lift(right)
            epsilon = HomomorphicExtension(ring, self.adjunction.counit(ring.carrier), self.truncation)
            through_quotient = lifted.coequalizer.factorize(epsilon.truncated(lifted.algebra.free_object))
            sigma = MonoidMorphism(lifted.monoid, ring, backend.compose(through_quotient, lifted.inclusion))
            self._counits[ring] = (right, sigma)

        return self._counits[ring][1]

    def check_counit(self, ring: MonoidObject) -> VerificationReport:
        """σ_A is a ring morphism and σ_A∘π_{R̄A} = ε_A on degrees 0 and 1."""
        backend = self.adjunction.target
        sigma = self.counit(ring)
        lifted = self.lift(self.right(ring))
        epsilon = HomomorphicExtension(ring, self.adjunction.counit(ring.carrier), self.truncation)
        report = VerificationReport(f"counit ({ring.name})")
        report.extend(check_monoid_morphism(sigma), prefix='ring_morphism')

        for degree in (0, 1):
            lhs = backend.compose_all(sigma.morphism, lifted.projection, lifted.algebra.injection(degree))
            report.add(f"lifts_epsilon.degree{degree}", backend.equal(lhs, epsilon.component(degree)),
                       witness=backend.witness(lhs, epsilon.component(degree)))

        return report

    def lift_morphism(self, h: MonoidMorphism) -> MonoidMorphism:
        """
        L_h: L_D -> L_C, the unique ring morphism with L_h∘π_D = π_C∘TLh, so that L_h([d]) = [h(d)].

        :raises ValueError: if `h` is not a monoid morphism.
        """
        report = check_monoid_morphism(h)

        if not report.ok:
            raise ValueError(f"Can only lift monoid morphisms, {h.morphism} fails {[c.name for c in report.failures]}.")

        backend = self.adjunction.target
        lifted_d, lifted_c = self.lift(h.source), self.lift(h.target)
        tlh = self.tensor_algebra_morphism(h).total()
        through_quotient = lifted_d.coequalizer.factorize(backend.compose(lifted_c.coequalizer.projection, tlh))

        return MonoidMorphism(lifted_d.monoid, lifted_c.monoid,
                              backend.compose_all(lifted_c.retraction, through_quotient, lifted_d.inclusion))

    def tensor_algebra_morphism(self, h: MonoidMorphism) -> GradedMorphism:
        """TLh on the truncation."""
        return monad_on_morphism(self.adjunction.target, self.adjunction.left_morphism(h.morphism), self.truncation)

    def check_lifted_morphism(self, h: MonoidMorphism) -> VerificationReport:
        """
        L_h is a ring morphism with L_h∘π_D = π_C∘TLh, TLh carries the relation morphisms of D to those of C, and
        γ is natural: L_h∘γ_D = γ_C∘h.
        """
        backend = self.adjunction.target
        lh = self.lift_morphism(h)
        lifted_d, lifted_c = self.lift(h.source), self.lift(h.target)
        tlh = self.tensor_algebra_morphism(h).total()
        relations_d, relations_c = lifted_d.relations, lifted_c.relations
        lhh = self.adjunction.left_morphism(self.adjunction.source.tensor_mor(h.morphism, h.morphism))
        report = VerificationReport('lifted morphism')
        report.extend(check_monoid_morphism(lh), prefix='ring_morphism')

        report.add('square', backend.equal(backend.compose(lh.morphism, lifted_d.projection),
                                           backend.compose(lifted_c.projection, tlh)))

        for name in ('alpha1', 'beta1'):
            report.add(f"relations.{name}", backend.equal(
                backend.compose(tlh, relations_d.total(getattr(relations_d, name))),
                relations_c.total(getattr(relations_c, name))))

        for name in ('alpha2', 'beta2'):
            report.add(f"relations.{name}", backend.equal(
                backend.compose(tlh, relations_d.total(getattr(relations_d, name))),
                backend.compose(relations_c.total(getattr(relations_c, name)), lhh)))

        gamma_d, gamma_c = self.unit(h.source), self.unit(h.target)
        report.add('unit_naturality', all(lh.morphism(gamma_d(x)) == gamma_c(h.morphism(x))
                                          for x in range(h.source.size)))

        return report

    def transpose(self, d: MonoidMorphism, ring: MonoidObject) -> MonoidMorphism:
        """The ring morphism σ_A∘L_d: L_D -> A corresponding to a monoid morphism d: D -> R̄A."""
        return compose_monoid(self.counit(ring), self.lift_morphism(d))

    def untranspose(self, f: MonoidMorphism, monoid: MonoidObject) -> MonoidMorphism:
        """The monoid morphism R̄f∘γ_D: D -> R̄A corresponding to a ring morphism f: L_D -> A."""
        gamma = self.unit(monoid)
        right = self.right(f.target)
        table = [f.target.carrier.index_of(f.morphism(gamma(x))) for x in range(monoid.size)]

        return MonoidMorphism(monoid, right, FinSetMor(monoid.carrier, right.carrier, table))

    def hom_bijection_check(self, monoid: MonoidObject, ring: MonoidObject) -> VerificationReport:
        """
        Enumerate all monoid morphisms D -> R̄A and all ring morphisms L_D -> A by brute force, and check that
        transposition and its inverse are mutually inverse bijections between them.
        """
        right = self.right(ring)
        lifted = self.lift(monoid)
        self.counit(ring)

        monoid_morphisms = enumerate_monoid_homomorphisms(monoid, right)
        ring_morphisms = enumerate_ring_homomorphisms(lifted.monoid, ring)
        report = VerificationReport(f"hom bijection ({monoid.name or 'D'}, {ring.name or 'A'})")
        report.add('counts_equal', len(monoid_morphisms) == len(ring_morphisms),
                   witness=[len(monoid_morphisms), len(ring_morphisms)],
                   detail=f"{len(monoid_morphisms)} monoid morphisms, {len(ring_morphisms)} ring morphisms")

        transposes = tqdm_imap(lambda d: self.transpose(d, ring), monoid_morphisms,
                               show_progress=self.show_progress)
        untransposes = tqdm_imap(lambda f: self.untranspose(f, monoid), ring_morphisms,
                                 show_progress=self.show_progress)

        not_ring = [i for i, f in enumerate(transposes) if not check_monoid_morphism(f).ok]
        report.add('transpose_is_ring_morphism', not not_ring, witness=not_ring[0] if not_ring else None)

        missing = [i for i, f in enumerate(transposes) if not any(f.morphism == g.morphism for g in ring_morphisms)]
        report.add('transpose_enumerated', not missing, witness=missing[0] if missing else None)

        round_trip = [i for i, (d, f) in enumerate(zip(monoid_morphisms, transposes))
                      if self.untranspose(f, monoid).morphism != d.morphism]
        report.add('untranspose_after_transpose', not round_trip, witness=round_trip[0] if round_trip else None)

        round_trip = [i for i, (f, d) in enumerate(zip(ring_morphisms, untransposes))
                      if self.transpose(d, ring).morphism != f.morphism]
        report.add('transpose_after_untranspose', not round_trip, witness=round_trip[0] if round_trip else None)

        return report


def hom_transpose(d: MonoidMorphism, ring: MonoidObject, lifting: Optional[MonoidRingLifting] = None) -> MonoidMorphism:
    lifting = MonoidRingLifting() if lifting is None else lifting

    return lifting.transpose(d, ring)


def hom_bijection_check(monoid: MonoidObject, ring: MonoidObject,
                        lifting: Optional[MonoidRingLifting] = None) -> VerificationReport:
    lifting = MonoidRingLifting() if lifting is None else lifting

    return lifting.hom_bijection_check(monoid, ring)


def counit(ring: MonoidObject, lifting: Optional[MonoidRingLifting] = None) -> MonoidMorphism:
    lifting = MonoidRingLifting() if lifting is None else lifting

    return lifting.counit(ring)


def lift_morphism(h: MonoidMorphism, lifting: Optional[MonoidRingLifting] = None) -> MonoidMorphism:
    lifting = MonoidRingLifting() if lifting is None else lifting

    return lifting.lift_morphism(h)
