"""
The contract for a strict monoidal category with computable coequalizers, and the colimit algorithms that are built
only on top of that contract (multiple coequalizers, reflexive pairs, and checks that tensoring preserves
coequalizers).
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
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

from moncat.report import VerificationReport

Object = Any
Morphism = Any
"""A parallel pair of morphisms f, g: X -> A."""
Pair = Tuple[Morphism, Morphism]


class UnsupportedOperationError(NotImplementedError):
    """Raised when a backend does not provide an optional operation (e.g. coproducts)."""


class FactorizationError(ValueError):
    """Raised when a morphism is asked to factor through a coequalizer that it does not coequalize."""


@dataclasses.dataclass(frozen=True)
class CoequalizerResult:
    """A (multiple) coequalizer: the quotient object, the projection and the means to factor through it."""

    """The backend the coequalizer was computed in."""
    backend: 'CategoryBackend'
    """The parallel pairs that are coequalized. Ordinary coequalizers have exactly one."""
    pairs: Tuple[Pair, ...]
    """The quotient object Q."""
    obj: Object
    """The projection A -> Q."""
    projection: Morphism
    """Given h: A -> Z that coequalizes every pair, returns the unique u: Q -> Z with u∘π = h."""
    factorizer: Callable[[Morphism], Morphism] = dataclasses.field(repr=False, compare=False)

    @property
    def codomain(self) -> Object:
        """The object A whose morphisms are being identified."""
        return self.backend.domain(self.projection)

    def coequalizes(self, h: Morphism) -> bool:
        """Whether h∘f = h∘g for every pair (f, g)."""
        return all(self.backend.equal(self.backend.compose(h, f), self.backend.compose(h, g)) for f, g in self.pairs)

    def factorize(self, h: Morphism) -> Morphism:
        """
        Factor a morphism through the projection.

        :param h: A morphism A -> Z with h∘f = h∘g for every pair.
        :return: The unique u: Q -> Z with u∘π = h.
        :raises FactorizationError: if `h` does not coequalize the pairs.
        """
        if self.backend.domain(h) != self.codomain:
            raise FactorizationError(f"Cannot factor a morphism with domain {self.backend.domain(h)} through a "
                                     f"coequalizer of morphisms into {self.codomain}.")

        if not self.coequalizes(h):
            raise FactorizationError("The morphism does not coequalize the pairs, so it does not factor through the "
                                     "coequalizer.")

        return self.factorizer(h)


@dataclasses.dataclass(frozen=True)
class CoproductResult:
    """A binary coproduct X + Y with its injections."""

    obj: Object
    left_injection: Morphism
    right_injection: Morphism


@dataclasses.dataclass(frozen=True)
class ImageFactorization:
    """A factorization f = mono∘epi where epi is a regular epimorphism onto the image of f."""

    epi: Morphism
    mono: Morphism

    @property
    def image(self) -> Object:
        return self.epi.codomain


class CategoryBackend(abc.ABC):
    """
    The capabilities of a concrete strict monoidal category.

    Tensor products are strict by construction: tensoring is associative and unital on the nose, i.e. the unit
    object is returned unchanged by `tensor(unit, X)` and `tensor(X, unit)`, and bracketing does not matter.
    """

    """Short name used in reports and JSON payloads."""
    name = ''

    @property
    @abc.abstractmethod
    def unit(self) -> Object:
        """The unit object I of the tensor product."""
        raise NotImplementedError

    @staticmethod
    def domain(f: Morphism) -> Object:
        return f.domain

    @staticmethod
    def codomain(f: Morphism) -> Object:
        return f.codomain

    @abc.abstractmethod
    def identity(self, obj: Object) -> Morphism:
        raise NotImplementedError

    @abc.abstractmethod
    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """The composite g∘f (apply `f` first)."""
        raise NotImplementedError

    @abc.abstractmethod
    def tensor(self, x: Object, y: Object) -> Object:
        raise NotImplementedError

    @abc.abstractmethod
    def tensor_mor(self, f: Morphism, g: Morphism) -> Morphism:
        raise NotImplementedError

    @abc.abstractmethod
    def equal(self, f: Morphism, g: Morphism) -> bool:
        """Decide whether two parallel morphisms are equal."""
        raise NotImplementedError

    @abc.abstractmethod
    def witness(self, f: Morphism, g: Morphism) -> Optional[int]:
        """
        :return: The index of the first element (FinSet) or generator (FinAb) of the common domain on which the
            two parallel morphisms differ, None if they are equal.
        """
        raise NotImplementedError

    @abc.abstractmethod
    def basis_size(self, obj: Object) -> int:
        """The number of elements (FinSet) or generators (FinAb) that index the object."""
        raise NotImplementedError

    @abc.abstractmethod
    def coequalizer(self, f: Morphism, g: Morphism) -> CoequalizerResult:
        raise NotImplementedError

    @abc.abstractmethod
    def is_epimorphism(self, f: Morphism) -> bool:
        raise NotImplementedError

    @abc.abstractmethod
    def is_isomorphism(self, f: Morphism) -> bool:
        raise NotImplementedError

    @abc.abstractmethod
    def inverse(self, f: Morphism) -> Morphism:
        """:raises ValueError: if `f` is not an isomorphism."""
        raise NotImplementedError

    def coproduct(self, x: Object, y: Object) -> CoproductResult:
        raise UnsupportedOperationError(f"The {self.name} backend does not provide coproducts.")

    def copair(self, f: Morphism, g: Morphism) -> Morphism:
        """The morphism X + Y -> Z with components f: X -> Z and g: Y -> Z."""
        raise UnsupportedOperationError(f"The {self.name} backend does not provide coproducts.")

    def image_factorization(self, f: Morphism) -> ImageFactorization:
        raise UnsupportedOperationError(f"The {self.name} backend does not provide image factorizations.")

    def kernel_pair(self, f: Morphism) -> Pair:
        """A parallel pair whose coequalizer is the epi part of the image factorization of `f`."""
        raise UnsupportedOperationError(f"The {self.name} backend does not provide kernel pairs.")

    def sample_morphisms(self, x: Object, z: Object, limit: int = 64) -> Iterator[Morphism]:
        """Yield (up to `limit`) morphisms x -> z, every one of them if there are at most `limit`."""
        raise UnsupportedOperationError(f"The {self.name} backend cannot enumerate morphisms.")

    def test_targets(self) -> List[Object]:
        """A fixed battery of small objects used to probe universal properties."""
        return []

    def tensor_all(self, *objects: Object) -> Object:
        """Left-to-right tensor of any number of objects. The empty tensor is the unit."""
        result = self.unit

        for obj in objects:
            result = self.tensor(result, obj)

        return result

    def tensor_mor_all(self, *morphisms: Morphism) -> Morphism:
        """Left-to-right tensor of one or more morphisms."""
        if not morphisms:
            return self.identity(self.unit)

        result = morphisms[0]

        for f in morphisms[1:]:
            result = self.tensor_mor(result, f)

        return result

    def compose_all(self, *morphisms: Morphism) -> Morphism:
        """compose_all(h, g, f) = h∘g∘f."""
        if not morphisms:
            raise ValueError("Need at least one morphism to compose.")

        result = morphisms[-1]

        for g in reversed(morphisms[:-1]):
            result = self.compose(g, result)

        return result

    def tensor_power(self, obj: Object, n: int) -> Object:
        return self.tensor_all(*[obj] * n)

    def tensor_power_mor(self, f: Morphism, n: int) -> Morphism:
        return self.tensor_mor_all(*[f] * n)

    def check_composable(self, g: Morphism, f: Morphism):
        if self.codomain(f) != self.domain(g):
            raise ValueError(f"Cannot compose {g} after {f}: codomain {self.codomain(f)} does not match domain "
                             f"{self.domain(g)}.")

    def check_parallel(self, f: Morphism, g: Morphism):
        if self.domain(f) != self.domain(g) or self.codomain(f) != self.codomain(g):
            raise ValueError(f"Expected a parallel pair of morphisms, got {f} and {g}.")


def morphism_equal(backend: CategoryBackend, f: Morphism, g: Morphism) -> bool:
    """Decide equality of two parallel morphisms, rejecting pairs that are not parallel."""
    backend.check_parallel(f, g)

    return backend.equal(f, g)


def multiple_coequalizer(backend: CategoryBackend, pairs: Sequence[Pair],
                         codomain: Optional[Object] = None) -> CoequalizerResult:
    """
    Coequalize several parallel pairs with a common codomain A at once, by iterating ordinary coequalizers: first
    q1 = coeq(f1, g1), then q2 = coeq(q1∘f2, q1∘g2), and so on. The projection is the composite q_n∘...∘q1.

    :param backend: The category to work in.
    :param pairs: The parallel pairs (f_i, g_i: X_i -> A).
    :param codomain: The object A. Required only if `pairs` is empty.
    :return: The multiple coequalizer. With no pairs this is (A, id_A).
    """
    pairs = tuple((f, g) for f, g in pairs)

    if not pairs:
        if codomain is None:
            raise ValueError("The codomain must be given to coequalize an empty list of pairs.")

        return CoequalizerResult(backend=backend, pairs=(), obj=codomain, projection=backend.identity(codomain),
                                 factorizer=lambda h: h)

    codomain = backend.codomain(pairs[0][0]) if codomain is None else codomain

    for f, g in pairs:
        backend.check_parallel(f, g)

        if backend.codomain(f) != codomain:
            raise ValueError(f"All pairs must share the codomain {codomain}, got a pair into {backend.codomain(f)}.")

    stages: List[CoequalizerResult] = []
    projection = backend.identity(codomain)

    for f, g in pairs:
        stage = backend.coequalizer(backend.compose(projection, f), backend.compose(projection, g))
        stages.append(stage)
        projection = backend.compose(stage.projection, projection)

    logging.debug(f"Multiple coequalizer of {len(pairs)} pair(s) in {backend.name}: "
                  f"{backend.basis_size(codomain)} -> {backend.basis_size(stages[-1].obj)}.")

    def factorizer(h: Morphism) -> Morphism:
        # Each stage's factorization is valid because h coequalizes every pair.
        u = h

        for stage in stages:
            u = stage.factorize(u)

        return u

    return CoequalizerResult(backend=backend, pairs=pairs, obj=stages[-1].obj, projection=projection,
                             factorizer=factorizer)


@dataclasses.dataclass(frozen=True)
class ReflexivePair:
    """The reflexive pair (f̄, ḡ): C + D -> D built from a pair f, g: C -> D, with a common section."""

    fbar: Morphism
    gbar: Morphism
    coproduct: CoproductResult

    @property
    def section(self) -> Morphism:
        """The injection D -> C + D, split by both f̄ and ḡ."""
        return self.coproduct.right_injection


def reflexive_pair(backend: CategoryBackend, f: Morphism, g: Morphism) -> ReflexivePair:
    """
    Replace a parallel pair f, g: C -> D by the reflexive pair f̄ = [f, id_D], ḡ = [g, id_D]: C + D -> D. Both pairs
    have the same coequalizers.

    :raises UnsupportedOperationError: if the backend has no binary coproducts.
    """
    backend.check_parallel(f, g)
    d = backend.codomain(f)
    coproduct = backend.coproduct(backend.domain(f), d)
    identity = backend.identity(d)

    return ReflexivePair(fbar=backend.copair(f, identity), gbar=backend.copair(g, identity), coproduct=coproduct)


def check_tensor_preserves_coequalizer(backend: CategoryBackend, obj: Object, coequalizer: CoequalizerResult,
                                       sample_limit: int = 64) -> VerificationReport:
    """
    Check that C⊗π and π⊗C are again coequalizers of the tensored pairs C⊗f, C⊗g (resp. f⊗C, g⊗C).

    The check is exact: the backend's own coequalizer of the tensored pairs is factored through C⊗π and the comparison
    morphism must be an isomorphism. In addition, the universal property is exercised against the backend's battery of
    test targets: every sampled v: C⊗Q -> Z must be recovered as the factorization of v∘(C⊗π).

    :param backend: The category to work in.
    :param obj: The object C to tensor with.
    :param coequalizer: The coequalizer to tensor.
    :param sample_limit: The maximum number of morphisms sampled per test target.
    :return: The report. A failed check indicates a bug in the backend.
    """
    report = VerificationReport(f"tensor preserves coequalizer ({backend.name})")
    identity = backend.identity(obj)

    for side in ('left', 'right'):
        def tensored(f: Morphism) -> Morphism:
            return backend.tensor_mor(identity, f) if side == 'left' else backend.tensor_mor(f, identity)

        pairs = [(tensored(f), tensored(g)) for f, g in coequalizer.pairs]
        projection = tensored(coequalizer.projection)
        source = backend.domain(projection)
        quotient = backend.codomain(projection)

        report.add(f"{side}.coequalizes", all(
            backend.equal(backend.compose(projection, f), backend.compose(projection, g)) for f, g in pairs
        ))
        report.add(f"{side}.regular_epi", backend.is_epimorphism(projection))

        reference = multiple_coequalizer(backend, pairs, codomain=source)
        comparison = reference.factorize(projection)

        if not report.add(f"{side}.comparison_iso", backend.is_isomorphism(comparison),
                          detail=f"{backend.basis_size(reference.obj)} vs {backend.basis_size(quotient)}"):
            continue

        comparison_inverse = backend.inverse(comparison)

        def factor(h: Morphism) -> Morphism:
            return backend.compose(reference.factorize(h), comparison_inverse)

        existence_ok = True
        uniqueness_ok = True
        witness = None

        for target in backend.test_targets():
            try:
                candidates = list(backend.sample_morphisms(quotient, target, limit=sample_limit))
                reference_maps = list(backend.sample_morphisms(reference.obj, target, limit=sample_limit))
            except UnsupportedOperationError:
                break

            # Every morphism that coequalizes the tensored pairs factors through the tensored projection...
            for w in reference_maps:
                h = backend.compose(w, reference.projection)

                if not backend.equal(backend.compose(factor(h), projection), h):
                    existence_ok = False
                    witness = witness or str(target)

            # ...and the factorization is unique.
            for v in candidates:
                if not backend.equal(factor(backend.compose(v, projection)), v):
                    uniqueness_ok = False
                    witness = witness or str(target)

        report.add(f"{side}.factorization", existence_ok, witness=witness)
        report.add(f"{side}.uniqueness", uniqueness_ok, witness=witness)

    return report


def check_regular_factorization(backend: CategoryBackend, f: Morphism) -> VerificationReport:
    """
    Check the image factorization f = mono∘epi: it must compose back to `f`, and epi must be a regular epimorphism,
    namely the coequalizer of the kernel pair of `f`.
    """
    report = VerificationReport(f"regular factorization ({backend.name})")
    factorization = backend.image_factorization(f)

    report.add('composes_back', backend.equal(backend.compose(factorization.mono, factorization.epi), f),
               witness=backend.witness(backend.compose(factorization.mono, factorization.epi), f))
    report.add('epi', backend.is_epimorphism(factorization.epi))

    k1, k2 = backend.kernel_pair(f)
    kernel_coequalizer = backend.coequalizer(k1, k2)
    report.add('epi_coequalizes_kernel_pair', kernel_coequalizer.coequalizes(factorization.epi))

    if report.ok:
        comparison = kernel_coequalizer.factorize(factorization.epi)
        report.add('epi_is_coequalizer', backend.is_isomorphism(comparison))

    return report


def coequalizers_agree(backend: CategoryBackend, first: CoequalizerResult, second: CoequalizerResult) -> bool:
    """Whether two coequalizers of morphisms into the same object are identical (same quotient, same projection)."""
    return (first.obj == second.obj and
            backend.domain(first.projection) == backend.domain(second.projection) and
            backend.equal(first.projection, second.projection))


def coequalizers_isomorphic(backend: CategoryBackend, first: CoequalizerResult, second: CoequalizerResult) -> bool:
    """Whether two coequalizers of the same object are isomorphic under the projections, i.e. equal as quotients."""
    if backend.domain(first.projection) != backend.domain(second.projection):
        return False

    if not (first.coequalizes(second.projection) and second.coequalizes(first.projection)):
        return False

    return backend.is_isomorphism(first.factorize(second.projection))


def flatten_index(indices: Sequence[int], sizes: Sequence[int]) -> int:
    """Row-major flattening of a multi-index: (i, j) over sizes (m, n) maps to i·n + j."""
    index = 0

    for i, size in zip(indices, sizes):
        index = index * size + i

    return index


def unflatten_index(index: int, sizes: Sequence[int]) -> Tuple[int, ...]:
    """The inverse of `flatten_index`."""
    indices = []

    for size in reversed(sizes):
        index, i = divmod(index, size)
        indices.append(i)

    return tuple(reversed(indices))
