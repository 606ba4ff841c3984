"""
Monoid objects in a strict monoidal category, the Λ-construction and coequalizers of monoids.

For a monoid A and a morphism γ: X -> A, Λ_γ = m∘(m⊗A)∘(A⊗γ⊗A): A⊗X⊗A -> A sends a⊗x⊗a' to a·γ(x)·a'. The
coequalizer of (Λ_α, Λ_β) in the underlying category identifies exactly the two-sided closure of α ~ β, and it carries
a unique monoid structure making the projection a monoid morphism.
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

import dataclasses
import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from moncat.category import CategoryBackend, CoequalizerResult, FactorizationError, Morphism, Object, Pair, \
    multiple_coequalizer, unflatten_index
from moncat.finab import AbMor, FinAb, PresentedAbGroup
from moncat.finset import FinSet, FinSetMor, FinSetObj
from moncat.custom_types import Vector
from moncat.report import VerificationReport
from moncat.smith import column_vector, int_matrix, kron, to_lists


@dataclasses.dataclass(frozen=True)
class MonoidObject:
    """A monoid (A, m, e) in a strict monoidal category. The laws are checked by `check_monoid`, not on creation."""

    """The category the monoid lives in."""
    backend: CategoryBackend = dataclasses.field(compare=False)
    """The carrier object A."""
    carrier: Object
    """The multiplication m: A⊗A -> A."""
    mult: Morphism
    """The unit e: I -> A."""
    unit: Morphism
    """Display name, e.g. 'Z/4'."""
    name: str = dataclasses.field(default='', compare=False)

    def __post_init__(self):
        backend = self.backend
        square = backend.tensor(self.carrier, self.carrier)

        if backend.domain(self.mult) != square or backend.codomain(self.mult) != self.carrier:
            raise ValueError(f"The multiplication of a monoid on {self.carrier} must be a morphism A⊗A -> A, "
                             f"got {self.mult}.")

        if backend.domain(self.unit) != backend.unit or backend.codomain(self.unit) != self.carrier:
            raise ValueError(f"The unit of a monoid on {self.carrier} must be a morphism I -> A, got {self.unit}.")

    def __repr__(self):
        return f"MonoidObject({self.backend.name}, {self.name or self.carrier})"

    @property
    def size(self) -> int:
        """The number of elements (FinSet) or generators (FinAb) of the carrier."""
        return self.backend.basis_size(self.carrier)

    @property
    def table(self) -> np.ndarray:
        """The multiplication table of a FinSet monoid: table[a, b] = a·b."""
        if not isinstance(self.backend, FinSet):
            raise TypeError(f"Only monoids in FinSet have a multiplication table, this one lives in "
                            f"{self.backend.name}.")

        return self.mult.table.reshape(self.size, self.size)

    @property
    def identity_element(self) -> Union[int, Vector]:
        if isinstance(self.backend, FinSet):
            return self.unit(0)

        return self.carrier.canonical(self.unit.matrix[:, 0])

    def product(self, a, b):
        """The product a·b of two elements (indices in FinSet, coordinate vectors in FinAb)."""
        if isinstance(self.backend, FinSet):
            return self.mult(a * self.size + b)

        return self.mult([int(x) for x in kron(column_vector(a), column_vector(b))[:, 0]])

    def to_json(self) -> dict:
        if isinstance(self.backend, FinSet):
            return dict(backend=self.backend.name, carrier=self.carrier.to_json(), mult=self.table.tolist(),
                        unit=int(self.identity_element))

        return dict(backend=self.backend.name, carrier=self.carrier.to_json(), mult=to_lists(self.mult.matrix),
                    unit=[int(x) for x in self.unit.matrix[:, 0]])

    @classmethod
    def from_json(cls, json_dict: dict) -> 'MonoidObject':
        backend_name = json_dict['backend']

        if backend_name == FinSet.name:
            carrier = FinSetObj.from_json(json_dict['carrier'])

            return finset_monoid(json_dict['mult'], json_dict['unit'], labels=carrier.labels,
                                 name=json_dict.get('name', ''))
        elif backend_name == FinAb.name:
            return finab_ring(PresentedAbGroup.from_json(json_dict['carrier']), json_dict['mult'], json_dict['unit'],
                              name=json_dict.get('name', ''))
        else:
            raise ValueError(f"Unknown backend '{backend_name}', expected one of {[FinSet.name, FinAb.name]}.")


def finset_monoid(table: Sequence[Sequence[int]], unit: int, labels: Optional[Sequence[str]] = None,
                  name: str = '') -> MonoidObject:
    """
    Create a monoid in FinSet from its multiplication table.

    :param table: An n×n table with table[a][b] = a·b.
    :param unit: The index of the identity element.
    :param labels: (optional) Display names of the elements.
    :param name: (optional) Display name of the monoid.
    """
    table = np.asarray(table, dtype=np.int64)

    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise ValueError(f"A multiplication table must be square, got shape {table.shape}.")

    backend = FinSet()
    n = table.shape[0]
    carrier = FinSetObj(n, labels=tuple(labels) if labels is not None else None)
    mult = FinSetMor(backend.tensor(carrier, carrier), carrier, table.reshape(-1))

    return MonoidObject(backend, carrier, mult, FinSetMor(backend.unit, carrier, [unit]), name=name)


def finab_ring(group: PresentedAbGroup, structure, unit: Sequence[int], name: str = '') -> MonoidObject:
    """
    Create a monoid in FinAb, i.e. a unital ring.

    :param group: The additive group.
    :param structure: The g×g² matrix of structure constants; column i·g + j is the product of generators i and j.
    :param unit: The coordinates of the identity element.
    :param name: (optional) Display name of the ring.
    :raises ValueError: if the structure constants are not bilinear with respect to the relations.
    """
    backend = FinAb()
    structure = structure if isinstance(structure, np.ndarray) else int_matrix(structure, rows=group.gens,
                                                                               cols=group.gens ** 2)
    mult = AbMor(backend.tensor(group, group), group, structure)
    unit = AbMor(backend.unit, group, column_vector(unit))

    return MonoidObject(backend, group, mult, unit, name=name)


@dataclasses.dataclass(frozen=True)
class MonoidMorphism:
    """A morphism of the underlying category between the carriers of two monoids."""

    source: MonoidObject
    target: MonoidObject
    morphism: Morphism

    def __post_init__(self):
        backend = self.source.backend

        if backend.domain(self.morphism) != self.source.carrier or \
                backend.codomain(self.morphism) != self.target.carrier:
            raise ValueError(f"{self.morphism} does not map the carrier of {self.source} to the carrier of "
                             f"{self.target}.")

    @staticmethod
    def identity(monoid: MonoidObject) -> 'MonoidMorphism':
        return MonoidMorphism(monoid, monoid, monoid.backend.identity(monoid.carrier))


def compose_monoid(g: MonoidMorphism, f: MonoidMorphism) -> MonoidMorphism:
    """g∘f"""
    return MonoidMorphism(f.source, g.target, f.source.backend.compose(g.morphism, f.morphism))


def _witness(backend: CategoryBackend, f: Morphism, g: Morphism, sizes: Sequence[int]) -> Optional[Tuple[int, ...]]:
    index = backend.witness(f, g)

    return None if index is None else unflatten_index(index, sizes)


def check_monoid(monoid: MonoidObject) -> VerificationReport:
    """
    Verify associativity and both unit laws. A failing law carries the first offending element (or generator) tuple
    as its witness.
    """
    backend = monoid.backend
    m = monoid.mult
    e = monoid.unit
    identity = backend.identity(monoid.carrier)
    n = monoid.size
    report = VerificationReport(f"monoid laws ({monoid.name or backend.name})")

    left_assoc = backend.compose(m, backend.tensor_mor(m, identity))
    right_assoc = backend.compose(m, backend.tensor_mor(identity, m))
    report.add('associativity', backend.equal(left_assoc, right_assoc),
               witness=_witness(backend, left_assoc, right_assoc, (n, n, n)))

    left_unit = backend.compose(m, backend.tensor_mor(e, identity))
    report.add('left_unit', backend.equal(left_unit, identity), witness=_witness(backend, left_unit, identity, (n,)))

    right_unit = backend.compose(m, backend.tensor_mor(identity, e))
    report.add('right_unit', backend.equal(right_unit, identity),
               witness=_witness(backend, right_unit, identity, (n,)))

    return report


def check_monoid_morphism(f: MonoidMorphism) -> VerificationReport:
    """Verify f∘m = m'∘(f⊗f) and f∘e = e'."""
    backend = f.source.backend
    source, target = f.source, f.target
    report = VerificationReport(f"monoid morphism ({source.name or backend.name} -> {target.name or backend.name})")

    lhs = backend.compose(f.morphism, source.mult)
    rhs = backend.compose(target.mult, backend.tensor_mor(f.morphism, f.morphism))
    report.add('multiplicative', backend.equal(lhs, rhs), witness=_witness(backend, lhs, rhs, (source.size,) * 2))

    unit = backend.compose(f.morphism, source.unit)
    report.add('unital', backend.equal(unit, target.unit))

    return report


def lambda_of(monoid: MonoidObject, gamma: Morphism) -> Morphism:
    """
    Λ_γ = m∘(m⊗A)∘(A⊗γ⊗A): A⊗X⊗A -> A.

    :raises ValueError: if γ does not land in the carrier of the monoid.
    """
    backend = monoid.backend

    if backend.codomain(gamma) != monoid.carrier:
        raise ValueError(f"Λ needs a morphism into the carrier {monoid.carrier}, got one into "
                         f"{backend.codomain(gamma)}.")

    identity = backend.identity(monoid.carrier)

    return backend.compose_all(monoid.mult, backend.tensor_mor(monoid.mult, identity),
                               backend.tensor_mor_all(identity, gamma, identity))


def fact1_identities(tau: Union[MonoidMorphism, Morphism], alpha: Morphism, beta: Optional[Morphism] = None,
                     source: Optional[MonoidObject] = None) -> VerificationReport:
    """
    Check the basic identities of the Λ-construction for α: X -> A:

    * α = Λ_α∘(e⊗X⊗e),
    * τ∘Λ_α = Λ_{τ∘α}∘(τ⊗X⊗τ) when τ is a monoid morphism,
    * with a second β, the equivalence τ∘Λ_α = τ∘Λ_β <=> τ∘α = τ∘β. For a plain morphism τ only the implication
      from left to right holds and is checked.

    :param tau: A monoid morphism out of A, or a plain morphism out of its carrier (then `source` is required).
    :param alpha: A morphism X -> A.
    :param beta: (optional) A second morphism X -> A.
    :param source: The monoid A when `tau` is a plain morphism.
    :return: The report. Each implication check passes if the implication holds on this instance.
    """
    is_monoid_morphism = isinstance(tau, MonoidMorphism)
    monoid = tau.source if is_monoid_morphism else source

    if monoid is None:
        raise ValueError("The source monoid must be given when τ is not a monoid morphism.")

    backend = monoid.backend
    tau_morphism = tau.morphism if is_monoid_morphism else tau
    x = backend.domain(alpha)
    report = VerificationReport('Λ identities')

    lambda_alpha = lambda_of(monoid, alpha)
    recovered = backend.compose(lambda_alpha, backend.tensor_mor_all(monoid.unit, backend.identity(x), monoid.unit))
    report.add('unit_recovery', backend.equal(recovered, alpha), witness=backend.witness(recovered, alpha))

    if is_monoid_morphism:
        lhs = backend.compose(tau_morphism, lambda_alpha)
        rhs = backend.compose(lambda_of(tau.target, backend.compose(tau_morphism, alpha)),
                              backend.tensor_mor_all(tau_morphism, backend.identity(x), tau_morphism))
        report.add('naturality', backend.equal(lhs, rhs), witness=backend.witness(lhs, rhs))

    if beta is not None:
        lambda_beta = lambda_of(monoid, beta)
        generators_agree = backend.equal(backend.compose(tau_morphism, alpha), backend.compose(tau_morphism, beta))
        lambdas_agree = backend.equal(backend.compose(tau_morphism, lambda_alpha),
                                      backend.compose(tau_morphism, lambda_beta))
        detail = f"τα = τβ: {generators_agree}, τΛα = τΛβ: {lambdas_agree}"

        report.add('equivalence.lambda_to_generators', not lambdas_agree or generators_agree, detail=detail)

        if is_monoid_morphism:
            report.add('equivalence.generators_to_lambda', not generators_agree or lambdas_agree, detail=detail)

    return report


def induce_quotient_monoid(monoid: MonoidObject, coequalizer: CoequalizerResult) -> MonoidObject:
    """
    The unique monoid structure on the quotient Q of a (multiple) coequalizer of Λ-pairs making the projection π a
    monoid morphism. Since A⊗- and -⊗Q preserve the coequalizer, m_A first descends to m: A⊗Q -> Q with
    m∘(A⊗π) = π∘m_A, and then to m_Q: Q⊗Q -> Q with m_Q∘(π⊗Q) = m.
    """
    backend = monoid.backend
    pi = coequalizer.projection
    quotient = coequalizer.obj
    id_a = backend.identity(monoid.carrier)
    id_q = backend.identity(quotient)

    left = multiple_coequalizer(backend, [(backend.tensor_mor(id_a, f), backend.tensor_mor(id_a, g))
                                          for f, g in coequalizer.pairs],
                                codomain=backend.tensor(monoid.carrier, monoid.carrier))
    left_comparison = left.factorize(backend.tensor_mor(id_a, pi))
    half = backend.compose(left.factorize(backend.compose(pi, monoid.mult)), backend.inverse(left_comparison))

    right = multiple_coequalizer(backend, [(backend.tensor_mor(f, id_q), backend.tensor_mor(g, id_q))
                                           for f, g in coequalizer.pairs],
                                 codomain=backend.tensor(monoid.carrier, quotient))
    right_comparison = right.factorize(backend.tensor_mor(pi, id_q))
    mult = backend.compose(right.factorize(half), backend.inverse(right_comparison))

    return MonoidObject(backend, quotient, mult, backend.compose(pi, monoid.unit))


@dataclasses.dataclass(frozen=True)
class MonoidCoequalizer:
    """
    The coequalizer of monoids obtained by coequalizing Λ-pairs, one stage per pair of generating morphisms.
    When the generating pairs are monoid morphisms, this is the coequalizer in the category of monoids.
    """

    """The monoid A whose elements are identified."""
    source: MonoidObject
    """The generating pairs (α_i, β_i: X_i -> A)."""
    pairs: Tuple[Pair, ...]
    """The quotient monoid Q."""
    quotient: MonoidObject
    """The projection π: A -> Q."""
    projection: MonoidMorphism
    """The underlying coequalizer of (Λ_α, Λ_β) of every stage, in order."""
    stages: Tuple[CoequalizerResult, ...] = dataclasses.field(repr=False)

    def coequalizes(self, tau: Morphism) -> bool:
        backend = self.source.backend

        return all(backend.equal(backend.compose(tau, alpha), backend.compose(tau, beta)) for alpha, beta in self.pairs)

    def factorize(self, tau: MonoidMorphism) -> MonoidMorphism:
        """
        The unique monoid morphism σ: Q -> C with σ∘π = τ.

        :raises FactorizationError: if τ∘α ≠ τ∘β for some generating pair.
        """
        if tau.source != self.source:
            raise FactorizationError(f"Expected a monoid morphism out of {self.source}, got one out of {tau.source}.")

        if not self.coequalizes(tau.morphism):
            raise FactorizationError("τ∘α ≠ τ∘β, so τ does not factor through the coequalizer.")

        sigma = tau.morphism

        for stage in self.stages:
            sigma = stage.factorize(sigma)

        return MonoidMorphism(self.quotient, tau.target, sigma)

    def verify(self) -> VerificationReport:
        """Re-check the induced structure: monoid laws, π a monoid morphism, π a regular epi, and uniqueness."""
        backend = self.source.backend
        pi = self.projection.morphism
        report = VerificationReport('monoid coequalizer')
        report.extend(check_monoid(self.quotient), prefix='quotient')
        report.extend(check_monoid_morphism(self.projection), prefix='projection')
        report.add('coequalizes', self.coequalizes(pi))
        report.add('regular_epi', backend.is_epimorphism(pi))

        # Any multiplication making π multiplicative agrees with m_Q after precomposing the epimorphism π⊗π.
        pi_squared = backend.tensor_mor(pi, pi)
        report.add('unique_structure', backend.is_epimorphism(pi_squared) and backend.equal(
            backend.compose(self.quotient.mult, pi_squared), backend.compose(pi, self.source.mult)))

        return report


def monoid_coequalizer(monoid: MonoidObject, alpha: Morphism, beta: Morphism) -> MonoidCoequalizer:
    """
    Coequalize α, β: X -> A in the category of monoids: the projection is the underlying coequalizer of
    (Λ_α, Λ_β) and the quotient carries the induced monoid structure.

    :param monoid: The monoid A.
    :param alpha: A morphism X -> A of the underlying category.
    :param beta: A morphism X -> A of the underlying category.
    """
    backend = monoid.backend
    backend.check_parallel(alpha, beta)
    coequalizer = backend.coequalizer(lambda_of(monoid, alpha), lambda_of(monoid, beta))
    quotient = dataclasses.replace(induce_quotient_monoid(monoid, coequalizer),
                                   name=f"{monoid.name}/~" if monoid.name else '')

    logging.debug(f"Monoid coequalizer in {backend.name}: {monoid.size} -> {quotient.size}.")

    return MonoidCoequalizer(source=monoid, pairs=((alpha, beta),), quotient=quotient,
                             projection=MonoidMorphism(monoid, quotient, coequalizer.projection),
                             stages=(coequalizer,))


def monoid_multiple_coequalizer(monoid: MonoidObject, pairs: Sequence[Pair]) -> MonoidCoequalizer:
    """
    Coequalize several pairs into A at once, by coequalizing the image of each pair in the quotient of the previous
    stages. With no pairs, the result is A itself with the identity.
    """
    backend = monoid.backend
    pairs = tuple((alpha, beta) for alpha, beta in pairs)

    for alpha, beta in pairs:
        backend.check_parallel(alpha, beta)

        if backend.codomain(alpha) != monoid.carrier:
            raise ValueError(f"All pairs must land in the carrier {monoid.carrier}, got a pair into "
                             f"{backend.codomain(alpha)}.")

    quotient = monoid
    projection = backend.identity(monoid.carrier)
    stages = []

    for alpha, beta in pairs:
        stage = monoid_coequalizer(quotient, backend.compose(projection, alpha), backend.compose(projection, beta))
        stages.extend(stage.stages)
        quotient = stage.quotient
        projection = backend.compose(stage.projection.morphism, projection)

    logging.debug(f"Monoid multiple coequalizer of {len(pairs)} pair(s) in {backend.name}: "
                  f"{monoid.size} -> {quotient.size}.")

    return MonoidCoequalizer(source=monoid, pairs=pairs, quotient=quotient,
                             projection=MonoidMorphism(monoid, quotient, projection), stages=tuple(stages))


def coequalizer_coincidence(monoid: MonoidObject, first: Pair, second: Pair) -> bool:
    """
    Whether the underlying coequalizers of (Λ_α, Λ_β) and (Λ_α', Λ_β') are the same quotient of A with the same
    projection. Quotients are canonical in both backends, so equal congruences give identical results.
    """
    backend = monoid.backend
    quotients = [backend.coequalizer(lambda_of(monoid, alpha), lambda_of(monoid, beta))
                 for alpha, beta in (first, second)]

    return quotients[0].obj == quotients[1].obj and backend.equal(quotients[0].projection, quotients[1].projection)
