"""
The monoidal category of finitely generated abelian groups with the tensor product over the integers. Monoids in it
are unital rings.

A group is always carried as a presentation: g generators and an integer relation matrix whose columns span the
relation lattice, so that the group is the cokernel of R: Z^c -> Z^g. Morphisms are integer matrices acting on
generator columns and compose by matrix multiplication. Relation lattices are stored in Hermite normal form, which
makes presentations of equal subgroups identical.
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
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from moncat.category import CategoryBackend, CoequalizerResult, CoproductResult, ImageFactorization, Pair
from moncat.custom_types import IntMatrix, Vector
from moncat.smith import SmithNormalForm, as_int_matrix, block_diagonal, column_vector, hermite_normal_form, hstack, \
    identity_matrix, int_matrix, kernel, kron, matmul, smith_normal_form, solve, to_lists, zeros
from moncat.utils import validate_shape, check_domain, Domain


class PresentedAbGroup:
    """A finitely generated abelian group Z^g / L where the lattice L is spanned by the columns of `relations`."""

    def __init__(self, gens: int, relations: Optional[IntMatrix] = None):
        """
        :param gens: The number of generators g.
        :param relations: (optional) A g×c integer matrix whose columns are the relations. Defaults to none, i.e. the
            free abelian group Z^g.
        """
        check_domain(gens, 'gens', int, Domain.NonNegative)
        relations = zeros(gens, 0) if relations is None else as_int_matrix(relations)
        validate_shape(relations, 'relations', (gens, None))

        self.gens = gens
        self.relations = hermite_normal_form(relations)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PresentedAbGroup) and self.gens == other.gens and
                self.relations.shape == other.relations.shape and np.array_equal(self.relations, other.relations))

    def __hash__(self):
        return hash((self.gens, tuple(map(tuple, to_lists(self.relations)))))

    def __repr__(self):
        return f"PresentedAbGroup(gens={self.gens}, {self.describe()})"

    @functools.cached_property
    def snf(self) -> SmithNormalForm:
        return smith_normal_form(self.relations)

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        """The orders d_1 | d_2 | ... of the non-trivial finite cyclic summands."""
        return self.snf.invariant_factors

    @property
    def free_rank(self) -> int:
        return self.gens - self.snf.rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> Optional[int]:
        """The number of elements, None if the group is infinite."""
        if not self.is_finite:
            return None

        order = 1

        for d in self.invariant_factors:
            order *= d

        return order

    @functools.cached_property
    def moduli(self) -> Tuple[int, ...]:
        """
        The modulus of each canonical coordinate: coordinate i of U·x is taken modulo moduli[i], where 0 means the
        coordinate is free and 1 means it is always zero.
        """
        diagonal = self.snf.diagonal

        return tuple(diagonal[i] if i < len(diagonal) else 0 for i in range(self.gens))

    def canonical_coordinates(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """The coordinates of an element in the decomposition Z/d_1 ⊕ ... ⊕ Z^r, reduced to [0, d_i)."""
        transformed = matmul(self.snf.U, column_vector(vector))[:, 0] if self.gens else []

        return tuple(int(y) % d if d else int(y) for y, d in zip(transformed, self.moduli))

    def canonical(self, vector: Sequence[int]) -> Vector:
        """The canonical representative of the coset of `vector`, in generator coordinates."""
        if len(vector) != self.gens:
            raise ValueError(f"Expected a vector of length {self.gens}, got {len(vector)}.")

        if not self.gens:
            return ()

        coordinates = column_vector(self.canonical_coordinates(vector))

        return tuple(int(x) for x in matmul(self.snf.U_inverse, coordinates)[:, 0])

    def contains(self, vectors: IntMatrix) -> bool:
        """Whether every column of `vectors` lies in the relation lattice, i.e. is zero in the group."""
        if vectors.shape[1] == 0 or self.gens == 0:
            return True

        transformed = matmul(self.snf.U, vectors)

        for i, d in enumerate(self.moduli):
            for y in transformed[i]:
                if (d == 0 and y != 0) or (d != 0 and y % d != 0):
                    return False

        return True

    def first_nonzero_column(self, vectors: IntMatrix) -> Optional[int]:
        """The index of the first column that is non-zero in the group, None if every column is zero."""
        for j in range(vectors.shape[1]):
            if not self.contains(vectors[:, j:j + 1]):
                return j

        return None

    def equal_elements(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.contains(column_vector([x - y for x, y in zip(a, b)]))

    @functools.cached_property
    def elements(self) -> Tuple[Vector, ...]:
        """
        Every element as its canonical representative, ordered by canonical coordinates (lexicographically).

        :raises ValueError: if the group is infinite.
        """
        if not self.is_finite:
            raise ValueError(f"Cannot enumerate the elements of the infinite group {self.describe()}.")

        ranges = [range(d) for d in self.moduli]
        elements = []

        for coordinates in itertools.product(*ranges):
            if self.gens:
                vector = matmul(self.snf.U_inverse, column_vector(coordinates))[:, 0]
                elements.append(tuple(int(x) for x in vector))
            else:
                elements.append(())

        return tuple(elements)

    def index_of(self, vector: Sequence[int]) -> int:
        """The position of the element in `elements` (finite groups only)."""
        if not self.is_finite:
            raise ValueError(f"Elements of the infinite group {self.describe()} have no index.")

        index = 0

        for y, d in zip(self.canonical_coordinates(vector), self.moduli):
            index = index * d + y

        return index

    def zero(self) -> Vector:
        return (0,) * self.gens

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.gens))

    def is_isomorphic(self, other: 'PresentedAbGroup') -> bool:
        return self.invariant_factors == other.invariant_factors and self.free_rank == other.free_rank

    def describe(self) -> str:
        summands = [f"Z/{d}" for d in self.invariant_factors] + ['Z'] * self.free_rank

        return ' + '.join(summands) if summands else '0'

    def to_json(self) -> dict:
        return dict(gens=self.gens, relations=to_lists(np.ascontiguousarray(self.relations.T)))

    @classmethod
    def from_json(cls, json_dict: dict) -> 'PresentedAbGroup':
        gens = int(json_dict['gens'])
        columns = json_dict.get('relations', [])
        relations = np.ascontiguousarray(int_matrix(columns, rows=len(columns), cols=gens).T)

        return PresentedAbGroup(gens, relations)

    @staticmethod
    def free(rank: int) -> 'PresentedAbGroup':
        return PresentedAbGroup(rank)

    @staticmethod
    def cyclic(n: int) -> 'PresentedAbGroup':
        """Z/n, where n = 0 gives Z."""
        return PresentedAbGroup(1, int_matrix([[n]]))

    @staticmethod
    def from_invariants(*moduli: int) -> 'PresentedAbGroup':
        """Z/m_1 ⊕ ... ⊕ Z/m_k with one generator per summand (0 gives a free summand)."""
        k = len(moduli)
        relations = zeros(k, k)

        for i, d in enumerate(moduli):
            relations[i, i] = d

        return PresentedAbGroup(k, relations)


class AbMor:
    """
    A homomorphism of presented groups, given by a (codomain gens)×(domain gens) matrix whose column j is the image of
    generator j. Equality is equality of homomorphisms, i.e. matrices are compared modulo the codomain relations.
    """

    def __init__(self, domain: PresentedAbGroup, codomain: PresentedAbGroup, matrix, check=True):
        """
        :param domain: The source group.
        :param codomain: The target group.
        :param matrix: The integer matrix.
        :param check: Whether to verify that the matrix maps relations to relations.
        """
        matrix = as_int_matrix(matrix) if not (isinstance(matrix, np.ndarray) and matrix.dtype == object) else matrix
        validate_shape(matrix, 'matrix', (codomain.gens, domain.gens))

        if check and not codomain.contains(matmul(matrix, domain.relations)):
            raise ValueError(f"The matrix {to_lists(matrix)} does not define a homomorphism "
                             f"{domain.describe()} -> {codomain.describe()}: relations are not mapped to relations.")

        matrix.flags.writeable = False

        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix

    @functools.cached_property
    def canonical_matrix(self) -> Tuple[Vector, ...]:
        """The canonical representative of the image of every generator."""
        return tuple(self.codomain.canonical(self.matrix[:, j]) for j in range(self.domain.gens))

    def __call__(self, vector: Sequence[int]) -> Vector:
        image = matmul(self.matrix, column_vector(vector))[:, 0] if self.domain.gens else [0] * self.codomain.gens

        return self.codomain.canonical([int(x) for x in image])

    def __eq__(self, other) -> bool:
        return (isinstance(other, AbMor) and self.domain == other.domain and self.codomain == other.codomain and
                self.codomain.contains(self.matrix - other.matrix))

    def __hash__(self):
        return hash((self.domain, self.codomain, self.canonical_matrix))

    def __repr__(self):
        return f"AbMor({self.domain.describe()} -> {self.codomain.describe()}, {to_lists(self.matrix)})"

    def to_json(self) -> dict:
        return dict(dom=self.domain.to_json(), cod=self.codomain.to_json(), matrix=to_lists(self.matrix))

    @classmethod
    def from_json(cls, json_dict: dict) -> 'AbMor':
        domain = PresentedAbGroup.from_json(json_dict['dom'])
        codomain = PresentedAbGroup.from_json(json_dict['cod'])
        matrix = int_matrix(json_dict['matrix'], rows=codomain.gens, cols=domain.gens)

        return AbMor(domain, codomain, matrix)


class FinAb(CategoryBackend):
    """
    Finitely generated abelian groups with ⊗ over Z. The generator (i, j) of A ⊗ B is i·g_B + j (Kronecker order) and Z
    is a strict unit.
    """

    name = 'finab'

    @property
    def unit(self) -> PresentedAbGroup:
        return PresentedAbGroup(1)

    def identity(self, obj: PresentedAbGroup) -> AbMor:
        return AbMor(obj, obj, identity_matrix(obj.gens), check=False)

    def compose(self, g: AbMor, f: AbMor) -> AbMor:
        self.check_composable(g, f)

        return AbMor(f.domain, g.codomain, matmul(g.matrix, f.matrix), check=False)

    def tensor(self, x: PresentedAbGroup, y: PresentedAbGroup) -> PresentedAbGroup:
        """Generators are pairs; the relations are those of x tensored with y's generators and vice versa."""
        if x == self.unit:
            return y

        if y == self.unit:
            return x

        relations = hstack([kron(x.relations, identity_matrix(y.gens)), kron(identity_matrix(x.gens), y.relations)],
                           rows=x.gens * y.gens)

        return PresentedAbGroup(x.gens * y.gens, relations)

    def tensor_mor(self, f: AbMor, g: AbMor) -> AbMor:
        return AbMor(self.tensor(f.domain, g.domain), self.tensor(f.codomain, g.codomain), kron(f.matrix, g.matrix),
                     check=False)

    def equal(self, f: AbMor, g: AbMor) -> bool:
        """Two parallel morphisms are equal iff every column of the difference lies in the codomain's relations."""
        self.check_parallel(f, g)

        return f.codomain.contains(f.matrix - g.matrix)

    def witness(self, f: AbMor, g: AbMor) -> Optional[int]:
        self.check_parallel(f, g)

        return f.codomain.first_nonzero_column(f.matrix - g.matrix)

    def basis_size(self, obj: PresentedAbGroup) -> int:
        return obj.gens

    def coequalizer(self, f: AbMor, g: AbMor) -> CoequalizerResult:
        """A / im(f - g): the codomain's generators with the columns of f - g added as relations."""
        self.check_parallel(f, g)
        codomain = f.codomain
        quotient = PresentedAbGroup(codomain.gens, hstack([codomain.relations, f.matrix - g.matrix],
                                                          rows=codomain.gens))
        projection = AbMor(codomain, quotient, identity_matrix(codomain.gens), check=False)

        def factorizer(h: AbMor) -> AbMor:
            # Well-defined because h∘f = h∘g has been checked by the caller.
            return AbMor(quotient, h.codomain, h.matrix, check=False)

        logging.debug(f"FinAb coequalizer: {codomain.describe()} -> {quotient.describe()}.")

        return CoequalizerResult(backend=self, pairs=((f, g),), obj=quotient, projection=projection,
                                 factorizer=factorizer)

    def _preimages(self, f: AbMor) -> Optional[IntMatrix]:
        """Preimages under `f` of the codomain's generators, or None if `f` is not surjective."""
        system = hstack([f.matrix, f.codomain.relations], rows=f.codomain.gens)
        solution = solve(system, identity_matrix(f.codomain.gens))

        return None if solution is None else np.ascontiguousarray(solution[:f.domain.gens, :])

    def is_epimorphism(self, f: AbMor) -> bool:
        snf = smith_normal_form(hstack([f.matrix, f.codomain.relations], rows=f.codomain.gens))

        return snf.rank == f.codomain.gens and all(d == 1 for d in snf.diagonal)

    def inverse(self, f: AbMor) -> AbMor:
        preimages = self._preimages(f)

        if preimages is None:
            raise ValueError(f"{f} is not surjective, so it has no inverse.")

        if not f.domain.contains(matmul(preimages, f.codomain.relations)):
            raise ValueError(f"{f} is not injective, so it has no inverse.")

        inverse = AbMor(f.codomain, f.domain, preimages, check=False)

        if not self.equal(self.compose(inverse, f), self.identity(f.domain)):
            raise ValueError(f"{f} is not injective, so it has no inverse.")

        return inverse

    def is_isomorphism(self, f: AbMor) -> bool:
        try:
            self.inverse(f)
        except ValueError:
            return False

        return True

    def direct_sum(self, x: PresentedAbGroup, y: PresentedAbGroup) -> PresentedAbGroup:
        """The block presentation of x ⊕ y, generators of x first."""
        return PresentedAbGroup(x.gens + y.gens, block_diagonal(x.relations, y.relations))

    def coproduct(self, x: PresentedAbGroup, y: PresentedAbGroup) -> CoproductResult:
        obj = self.direct_sum(x, y)
        left = zeros(obj.gens, x.gens)
        right = zeros(obj.gens, y.gens)

        for i in range(x.gens):
            left[i, i] = 1

        for i in range(y.gens):
            right[x.gens + i, i] = 1

        return CoproductResult(obj=obj, left_injection=AbMor(x, obj, left, check=False),
                               right_injection=AbMor(y, obj, right, check=False))

    def copair(self, f: AbMor, g: AbMor) -> AbMor:
        if f.codomain != g.codomain:
            raise ValueError(f"The components of a copairing must share a codomain, got {f} and {g}.")

        return AbMor(self.direct_sum(f.domain, g.domain), f.codomain,
                     hstack([f.matrix, g.matrix], rows=f.codomain.gens), check=False)

    def kernel_lattice(self, f: AbMor) -> IntMatrix:
        """A spanning set of {x in Z^g | f(x) = 0}, which contains the domain's relations."""
        system = hstack([f.matrix, f.codomain.relations], rows=f.codomain.gens)
        basis = kernel(system)

        return hstack([np.ascontiguousarray(basis[:f.domain.gens, :]), f.domain.relations], rows=f.domain.gens)

    def image_factorization(self, f: AbMor) -> ImageFactorization:
        """The image is presented on the domain's generators modulo the kernel; the epi is a cokernel projection."""
        image = PresentedAbGroup(f.domain.gens, self.kernel_lattice(f))
        epi = AbMor(f.domain, image, identity_matrix(f.domain.gens), check=False)
        mono = AbMor(image, f.codomain, f.matrix, check=False)

        return ImageFactorization(epi=epi, mono=mono)

    def kernel_pair(self, f: AbMor) -> Pair:
        """
        The kernel k: K -> A of `f` together with the zero map. Its coequalizer A / ker(f) is the same as that of the
        set-theoretic kernel pair, since (a, b) ↦ (a - b, b) identifies the two pairs.
        """
        lattice = self.kernel_lattice(f)
        source = PresentedAbGroup.free(lattice.shape[1])

        return (AbMor(source, f.domain, lattice, check=False),
                AbMor(source, f.domain, zeros(f.domain.gens, lattice.shape[1]), check=False))

    def sample_morphisms(self, x: PresentedAbGroup, z: PresentedAbGroup, limit: int = 64) -> Iterator[AbMor]:
        """
        Morphisms x -> z determined by generator images. Targets with a free part only use images with coordinates in
        {-1, 0, 1}. Enumeration is exhaustive when the candidate space is small and seeded-random otherwise.
        """
        images = list(z.elements) if z.is_finite else list(itertools.product((-1, 0, 1), repeat=z.gens))
        total = len(images) ** x.gens
        count = 0

        if total <= 16 * limit:
            candidates = itertools.product(images, repeat=x.gens)
        else:
            rng = np.random.default_rng(x.gens * 1009 + z.gens)
            candidates = (tuple(images[i] for i in rng.integers(0, len(images), size=x.gens))
                          for _ in range(16 * limit))

        for columns in candidates:
            matrix = int_matrix([[column[i] for column in columns] for i in range(z.gens)], rows=z.gens, cols=x.gens)

            if z.contains(matmul(matrix, x.relations)):
                yield AbMor(x, z, matrix, check=False)
                count += 1

                if count >= limit:
                    return

    def test_targets(self) -> List[PresentedAbGroup]:
        return [PresentedAbGroup.cyclic(2), PresentedAbGroup.cyclic(3), PresentedAbGroup.cyclic(4),
                PresentedAbGroup.from_invariants(2, 2)]

    def element(self, obj: PresentedAbGroup, vector: Sequence[int]) -> AbMor:
        """The morphism Z -> obj sending 1 to `vector`."""
        return AbMor(self.unit, obj, column_vector(vector), check=False)

    def zero(self, x: PresentedAbGroup, y: PresentedAbGroup) -> AbMor:
        return AbMor(x, y, zeros(y.gens, x.gens), check=False)
