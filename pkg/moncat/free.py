"""
Free monoids and the free ⊣ forgetful adjunction, at evaluation level.

The free monoid TX = ∐_n X^{⊗n} is infinite, so it is never built as a backend object. It is represented by words
(FinSet), by the degree-n components X^{⊗n} and by truncations ⊕_{n≤N} X^{⊗n}, which are ordinary backend objects. In
FinAb the truncation is the truncated tensor algebra.
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
import itertools
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from moncat.category import CategoryBackend, Morphism, Object, flatten_index
from moncat.finab import FinAb, PresentedAbGroup
from moncat.finset import FinSet, FinSetMor, FinSetObj
from moncat.custom_types import Vector, Word
from moncat.monoid import MonoidObject
from moncat.report import VerificationReport
from moncat.smith import kron, column_vector
from moncat.utils import check_domain, Domain


class DegreeOverflowError(ArithmeticError):
    """Raised when a product or component would exceed the truncation degree."""


class WordMonoid:
    """The free monoid on a finite alphabet: words under concatenation, with the empty word as unit."""

    def __init__(self, alphabet: FinSetObj):
        self.alphabet = alphabet

    def __repr__(self):
        return f"WordMonoid({self.alphabet.size} letters)"

    @property
    def unit(self) -> Word:
        return ()

    def validate(self, word: Sequence[int]) -> Word:
        word = tuple(int(letter) for letter in word)

        for letter in word:
            if not 0 <= letter < self.alphabet.size:
                raise ValueError(f"The letter {letter} is not in the alphabet of size {self.alphabet.size}.")

        return word

    def multiply(self, u: Sequence[int], v: Sequence[int]) -> Word:
        return self.validate(u) + self.validate(v)

    def generator(self, letter: int) -> Word:
        """ξ: the one-letter word."""
        return self.validate((letter,))

    def words(self, max_length: int) -> Iterator[Word]:
        """Every word of length at most `max_length`, shortest first and lexicographically within a length."""
        for length in range(max_length + 1):
            yield from itertools.product(range(self.alphabet.size), repeat=length)

    def index_of(self, word: Sequence[int]) -> int:
        """The position of a word in `words`, i.e. in the truncated free object of any degree ≥ len(word)."""
        word = self.validate(word)
        n = self.alphabet.size
        offset = sum(n ** length for length in range(len(word)))

        return offset + flatten_index(word, (n,) * len(word))


def iterated_multiplication(monoid: MonoidObject, n: int) -> Morphism:
    """m^{(n)}: A^{⊗n} -> A, the n-fold product, where m^{(0)} = e and m^{(1)} = id."""
    check_domain(n, 'n', int, Domain.NonNegative)
    backend = monoid.backend

    if n == 0:
        return monoid.unit

    result = backend.identity(monoid.carrier)

    for _ in range(n - 1):
        result = backend.compose(monoid.mult, backend.tensor_mor(result, backend.identity(monoid.carrier)))

    return result


@dataclasses.dataclass(frozen=True)
class TruncatedFreeObject:
    """⊕_{n≤N} X^{⊗n} as a coproduct in the backend, with the degree-n components first to last."""

    backend: CategoryBackend = dataclasses.field(compare=False)
    base: Object
    truncation: int
    components: Tuple[Object, ...] = dataclasses.field(repr=False)
    obj: Object = dataclasses.field(repr=False)
    injections: Tuple[Morphism, ...] = dataclasses.field(repr=False)

    def injection(self, n: int) -> Morphism:
        if n > self.truncation:
            raise DegreeOverflowError(f"Degree {n} exceeds the truncation degree {self.truncation}.")

        return self.injections[n]

    def offset(self, n: int) -> int:
        """The index of the first element (generator) of the degree-n block."""
        return sum(self.backend.basis_size(component) for component in self.components[:n])

    def copair(self, components: Sequence[Morphism]) -> Morphism:
        """The morphism out of the truncation with the given degree-wise components."""
        if len(components) != self.truncation + 1:
            raise ValueError(f"Expected {self.truncation + 1} components, got {len(components)}.")

        result = components[0]

        for component in components[1:]:
            result = self.backend.copair(result, component)

        return result


def truncated_free_object(backend: CategoryBackend, base: Object, truncation: int) -> TruncatedFreeObject:
    """
    Build ⊕_{n≤N} X^{⊗n} by iterated binary coproducts.

    :raises UnsupportedOperationError: if the backend has no coproducts.
    """
    check_domain(truncation, 'truncation', int, Domain.NonNegative)
    components = tuple(backend.tensor_power(base, n) for n in range(truncation + 1))
    obj = components[0]
    injections = [backend.identity(obj)]

    for component in components[1:]:
        coproduct = backend.coproduct(obj, component)
        injections = [backend.compose(coproduct.left_injection, injection) for injection in injections]
        injections.append(coproduct.right_injection)
        obj = coproduct.obj

    return TruncatedFreeObject(backend=backend, base=base, truncation=truncation, components=components, obj=obj,
                               injections=tuple(injections))


class HomomorphicExtension:
    """
    The homomorphic extension ᾱ: TX -> A of α: X -> |A|. Its degree-n component is m^{(n)}∘α^{⊗n}, so that a word
    x_1...x_k is sent to α(x_1)·...·α(x_k).
    """

    def __init__(self, monoid: MonoidObject, alpha: Morphism, truncation: Optional[int] = None):
        """
        :param monoid: The target monoid A.
        :param alpha: The morphism α: X -> |A| to extend.
        :param truncation: (optional) The largest degree that may be evaluated. Unbounded by default.
        """
        backend = monoid.backend

        if backend.codomain(alpha) != monoid.carrier:
            raise ValueError(f"Can only extend morphisms into the carrier {monoid.carrier}, got {alpha}.")

        if truncation is not None:
            check_domain(truncation, 'truncation', int, Domain.NonNegative)

        self.monoid = monoid
        self.alpha = alpha
        self.truncation = truncation
        self._components: Dict[int, Morphism] = {}

    @property
    def base(self) -> Object:
        return self.monoid.backend.domain(self.alpha)

    def component(self, n: int) -> Morphism:
        """
        ᾱ restricted to X^{⊗n}.

        :raises DegreeOverflowError: if n exceeds the truncation degree.
        """
        if self.truncation is not None and n > self.truncation:
            raise DegreeOverflowError(f"Cannot evaluate degree {n} beyond the truncation degree {self.truncation}.")

        if n not in self._components:
            backend = self.monoid.backend
            self._components[n] = backend.compose(iterated_multiplication(self.monoid, n),
                                                  backend.tensor_power_mor(self.alpha, n))

        return self._components[n]

    def _generator_image(self, letter: int):
        if isinstance(self.monoid.backend, FinSet):
            return self.alpha(letter)

        return self.alpha(self.base.basis_vector(letter))

    def __call__(self, word: Sequence[int]):
        """The product of the images of the letters (generators) of a word, e_A for the empty word."""
        if self.truncation is not None and len(word) > self.truncation:
            raise DegreeOverflowError(f"Cannot evaluate a word of length {len(word)} beyond the truncation degree "
                                      f"{self.truncation}.")

        result = self.monoid.identity_element

        for letter in word:
            result = self.monoid.product(result, self._generator_image(letter))

        return result

    def truncated(self, free_object: TruncatedFreeObject) -> Morphism:
        """ᾱ as a backend morphism ⊕_{n≤N} X^{⊗n} -> A."""
        return free_object.copair([self.component(n) for n in range(free_object.truncation + 1)])


def homomorphic_extension(alpha: Morphism, monoid: MonoidObject,
                          truncation: Optional[int] = None) -> HomomorphicExtension:
    return HomomorphicExtension(monoid, alpha, truncation=truncation)


class FreeMonoidAdjunction:
    """
    T ⊣ |-| truncated at degree N: the unit ξ: X -> |TX| is the inclusion of degree one, the counit ζ_A: T|A| -> A is
    the extension of the identity, and α: X -> |A| corresponds to its homomorphic extension ᾱ.
    """

    def __init__(self, backend: CategoryBackend, base: Object, truncation: int = 3):
        self.backend = backend
        self.base = base
        self.truncation = truncation
        self.free_object = truncated_free_object(backend, base, truncation)

    @property
    def unit(self) -> Morphism:
        """ξ_X"""
        return self.free_object.injection(1)

    def extension(self, monoid: MonoidObject, alpha: Morphism) -> HomomorphicExtension:
        return HomomorphicExtension(monoid, alpha, truncation=self.truncation)

    def counit(self, monoid: MonoidObject) -> Morphism:
        """ζ_A on ⊕_{n≤N} |A|^{⊗n}."""
        extension = HomomorphicExtension(monoid, self.backend.identity(monoid.carrier), truncation=self.truncation)

        return extension.truncated(truncated_free_object(self.backend, monoid.carrier, self.truncation))

    def unit_extension(self) -> Optional[FinSetMor]:
        """
        The homomorphic extension of ξ into the free monoid, as an endomorphism of the truncation: each letter of a
        word is sent through ξ and the resulting words are concatenated. Only defined in FinSet.

        :return: The endomorphism, or None if some image is longer than the truncation degree.
        """
        if not isinstance(self.backend, FinSet):
            raise TypeError(f"The unit extension is only computed on words, got the backend {self.backend}.")

        words = WordMonoid(self.base)
        elements = list(words.words(self.truncation))
        table = []

        for word in elements:
            folded = words.unit

            for letter in word:
                folded = words.multiply(folded, elements[self.unit(letter)])

            if len(folded) > self.truncation:
                return None

            table.append(words.index_of(folded))

        return FinSetMor(self.free_object.obj, self.free_object.obj, table)

    def check_triangles(self, monoid: MonoidObject, alpha: Morphism) -> VerificationReport:
        """ᾱ∘ξ = α, |ζ_A|∘ξ_{|A|} = id, and in FinSet, the extension of ξ fixes every word."""
        backend = self.backend
        report = VerificationReport('free monoid adjunction')
        extension = self.extension(monoid, alpha)
        restricted = backend.compose(extension.truncated(self.free_object), self.unit)
        report.add('extension_restricts', backend.equal(restricted, alpha), witness=backend.witness(restricted, alpha))

        counit = self.counit(monoid)
        counit_unit = backend.compose(counit, truncated_free_object(backend, monoid.carrier, self.truncation)
                                      .injection(1))
        report.add('counit_triangle', backend.equal(counit_unit, backend.identity(monoid.carrier)))

        if isinstance(backend, FinSet):
            words = WordMonoid(self.base)
            identity = backend.identity(self.free_object.obj)
            unit_extension = self.unit_extension()

            if unit_extension is None:
                report.add('unit_extension_is_identity', False,
                           detail='the extension of the unit leaves the truncation')
            else:
                report.add('unit_extension_is_identity', backend.equal(unit_extension, identity),
                           witness=backend.witness(unit_extension, identity))

            sample = list(words.words(self.truncation))
            multiplicative = all(
                monoid.product(extension(u), extension(v)) == extension(u + v)
                for u in sample for v in sample if len(u) + len(v) <= self.truncation
            )
            report.add('extension_multiplicative', multiplicative)

        return report


def enumerate_word_morphisms(monoid: MonoidObject, alphabet: FinSetObj, max_length: int) -> List[Dict[Word, int]]:
    """
    Every map φ from the words of length at most `max_length` to a FinSet monoid that satisfies φ(()) = e and
    φ(uv) = φ(u)·φ(v) whenever |uv| ≤ max_length. Values are chosen word by word, in the order of
    `WordMonoid.words`, and rejected as soon as a split disagrees.
    """
    if not isinstance(monoid.backend, FinSet):
        raise TypeError(f"Word morphisms can only be enumerated into FinSet monoids, got {monoid.backend.name}.")

    words = list(WordMonoid(alphabet).words(max_length))
    table = monoid.table
    identity = monoid.identity_element
    results = []
    assignment: Dict[Word, int] = {}

    def consistent(word: Word, value: int) -> bool:
        if not word:
            return value == identity

        return all(table[assignment[word[:k]], assignment[word[k:]]] == value for k in range(1, len(word)))

    def backtrack(position: int):
        if position == len(words):
            results.append(dict(assignment))
            return

        word = words[position]

        for value in range(monoid.size):
            if consistent(word, value):
                assignment[word] = value
                backtrack(position + 1)
                del assignment[word]

    backtrack(0)
    logging.debug(f"Found {len(results)} word morphisms from words of length ≤ {max_length} over "
                  f"{alphabet.size} letters into a monoid of size {monoid.size}.")

    return results


class GradedTensorAlgebra:
    """
    The tensor algebra ⊕_n G^{⊗n} of a presented group truncated at degree N. Degree-n elements are coordinate vectors
    over the generators of G^{⊗n}, and the product of degrees p and q is the concatenation of tensor indices, i.e. the
    Kronecker product of coordinate vectors.
    """

    def __init__(self, base: PresentedAbGroup, truncation: int):
        check_domain(truncation, 'truncation', int, Domain.NonNegative, minimum=2)
        self.backend = FinAb()
        self.base = base
        self.truncation = truncation
        self.free_object = truncated_free_object(self.backend, base, truncation)

    def __repr__(self):
        return f"GradedTensorAlgebra({self.base.describe()}, N={self.truncation})"

    @property
    def components(self) -> Tuple[PresentedAbGroup, ...]:
        return self.free_object.components

    @property
    def ranks(self) -> Tuple[int, ...]:
        """The number of generators of each component."""
        return tuple(component.gens for component in self.components)

    @property
    def obj(self) -> PresentedAbGroup:
        return self.free_object.obj

    def component(self, n: int) -> PresentedAbGroup:
        if n > self.truncation:
            raise DegreeOverflowError(f"Degree {n} exceeds the truncation degree {self.truncation}.")

        return self.components[n]

    def injection(self, n: int) -> Morphism:
        return self.free_object.injection(n)

    @property
    def unit(self) -> Morphism:
        """The degree-0 inclusion Z -> ⊕_{n≤N} G^{⊗n}."""
        return self.injection(0)

    def multiply(self, p: int, q: int) -> Morphism:
        """
        The product G^{⊗p} ⊗ G^{⊗q} -> G^{⊗(p+q)}, which is the identity by strictness of ⊗.

        :raises DegreeOverflowError: if p + q exceeds the truncation degree.
        """
        if p + q > self.truncation:
            raise DegreeOverflowError(f"The product of degrees {p} and {q} exceeds the truncation degree "
                                      f"{self.truncation}.")

        return self.backend.identity(self.backend.tensor(self.component(p), self.component(q)))

    def split(self, vector: Sequence[int]) -> List[Vector]:
        """Split coordinates on ⊕_{n≤N} G^{⊗n} into degree-wise coordinates."""
        if len(vector) != self.obj.gens:
            raise ValueError(f"Expected {self.obj.gens} coordinates, got {len(vector)}.")

        offsets = [self.free_object.offset(n) for n in range(self.truncation + 2)]

        return [tuple(int(x) for x in vector[offsets[n]:offsets[n + 1]]) for n in range(self.truncation + 1)]

    def product(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        """
        The product of two elements of the truncation.

        :raises DegreeOverflowError: if a non-zero part of the product has degree above N.
        """
        result = [0] * self.obj.gens

        for p, u_p in enumerate(self.split(u)):
            for q, v_q in enumerate(self.split(v)):
                if not any(u_p) or not any(v_q):
                    continue

                coordinates = [int(x) for x in kron(column_vector(u_p), column_vector(v_q))[:, 0]]

                if p + q > self.truncation:
                    overflow = self.backend.tensor(self.components[p], self.components[q])

                    if any(overflow.canonical(coordinates)):
                        raise DegreeOverflowError(f"The product of a degree {p} and a degree {q} element exceeds the "
                                                  f"truncation degree {self.truncation}.")

                    continue

                offset = self.free_object.offset(p + q)

                for i, x in enumerate(coordinates):
                    result[offset + i] += x

        return self.obj.canonical(result)


def truncated_tensor_algebra(base: PresentedAbGroup, truncation: int) -> GradedTensorAlgebra:
    """
    :raises ValueError: if the truncation degree is below 2.
    """
    return GradedTensorAlgebra(base, truncation)


@dataclasses.dataclass(frozen=True)
class GradedMorphism:
    """The truncated action T f = ∐_{n≤N} ⊗^n f of the free monoid monad on a morphism."""

    backend: CategoryBackend = dataclasses.field(compare=False)
    components: Tuple[Morphism, ...]

    @property
    def truncation(self) -> int:
        return len(self.components) - 1

    def component(self, n: int) -> Morphism:
        if n > self.truncation:
            raise DegreeOverflowError(f"Degree {n} exceeds the truncation degree {self.truncation}.")

        return self.components[n]

    def total(self) -> Morphism:
        """T f as a single morphism between the truncated free objects."""
        f = self.components[1]
        source = truncated_free_object(self.backend, self.backend.domain(f), self.truncation)
        target = truncated_free_object(self.backend, self.backend.codomain(f), self.truncation)

        return source.copair([self.backend.compose(target.injection(n), component)
                              for n, component in enumerate(self.components)])

    def epimorphic_components(self) -> List[bool]:
        return [self.backend.is_epimorphism(component) for component in self.components]


def monad_on_morphism(backend: CategoryBackend, f: Morphism, truncation: int) -> GradedMorphism:
    """The components ⊗^n f for n = 0, ..., N."""
    check_domain(truncation, 'truncation', int, Domain.NonNegative, minimum=1)

    return GradedMorphism(backend, tuple(backend.tensor_power_mor(f, n) for n in range(truncation + 1)))
