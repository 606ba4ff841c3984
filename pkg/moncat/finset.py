"""The cartesian monoidal category of finite sets. Monoids in it are ordinary finite monoids."""

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

import numpy as np

from moncat.category import CategoryBackend, CoequalizerResult, CoproductResult, ImageFactorization, Pair


@dataclasses.dataclass(frozen=True)
class FinSetObj:
    """A finite set {0, ..., size - 1}. Labels are for display only and do not take part in equality."""

    size: int
    labels: Optional[Tuple[str, ...]] = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.size, bool) or not isinstance(self.size, (int, np.integer)) or self.size < 0:
            raise ValueError(f"The size of a finite set must be a non-negative integer, got {self.size}.")

        object.__setattr__(self, 'size', int(self.size))

        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)

            if len(labels) != self.size:
                raise ValueError(f"Expected {self.size} labels, got {len(labels)}.")

            if len(set(labels)) != len(labels):
                raise ValueError(f"Labels must be distinct, got {labels}.")

            object.__setattr__(self, 'labels', labels)

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels is not None else str(index)

    def __repr__(self):
        return f"FinSetObj({self.size})"

    def to_json(self) -> dict:
        json_dict = dict(size=self.size)

        if self.labels is not None:
            json_dict['labels'] = list(self.labels)

        return json_dict

    @classmethod
    def from_json(cls, json_dict: dict) -> 'FinSetObj':
        labels = json_dict.get('labels')

        return FinSetObj(size=int(json_dict['size']), labels=tuple(labels) if labels is not None else None)


class FinSetMor:
    """A function between finite sets, stored as the table of images of 0, ..., |domain| - 1."""

    def __init__(self, domain: FinSetObj, codomain: FinSetObj, table: Sequence[int]):
        table = np.array(table, dtype=np.int64).reshape(-1)

        if len(table) != domain.size:
            raise ValueError(f"A map out of a set of size {domain.size} needs a table of that length, "
                             f"got {len(table)} entries.")

        if len(table) > 0 and (table.min() < 0 or table.max() >= codomain.size):
            raise ValueError(f"Every table entry must index the codomain of size {codomain.size}, "
                             f"got {table.tolist()}.")

        table.flags.writeable = False

        self.domain = domain
        self.codomain = codomain
        self.table = table

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other) -> bool:
        return (isinstance(other, FinSetMor) and self.domain == other.domain and self.codomain == other.codomain and
                np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.domain, self.codomain, self.table.tobytes()))

    def __repr__(self):
        return f"FinSetMor({self.domain.size} -> {self.codomain.size}, {self.table.tolist()})"

    @property
    def is_surjective(self) -> bool:
        return len(np.unique(self.table)) == self.codomain.size

    @property
    def is_injective(self) -> bool:
        return len(np.unique(self.table)) == self.domain.size

    def to_json(self) -> dict:
        return dict(dom=self.domain.to_json(), cod=self.codomain.to_json(), table=self.table.tolist())

    @classmethod
    def from_json(cls, json_dict: dict) -> 'FinSetMor':
        return FinSetMor(domain=FinSetObj.from_json(json_dict['dom']), codomain=FinSetObj.from_json(json_dict['cod']),
                         table=[int(x) for x in json_dict['table']])


class UnionFind:
    """Disjoint sets over 0, ..., size - 1 with path halving and union by rank."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        parent = self.parent

        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]

        return x

    def union(self, a: int, b: int) -> bool:
        root_a, root_b = self.find(a), self.find(b)

        if root_a == root_b:
            return False

        if self.rank[root_a] < self.rank[root_b]:
            root_a, root_b = root_b, root_a

        self.parent[root_b] = root_a

        if self.rank[root_a] == self.rank[root_b]:
            self.rank[root_a] += 1

        return True

    def canonical_classes(self) -> Tuple[List[int], List[int]]:
        """
        Number the classes in order of their smallest member.

        :return: A 2-tuple containing the class index of every element, and the smallest member of every class.
        """
        class_of_root: Dict[int, int] = {}
        class_index = []
        representatives = []

        for x in range(len(self.parent)):
            root = self.find(x)

            if root not in class_of_root:
                class_of_root[root] = len(representatives)
                representatives.append(x)

            class_index.append(class_of_root[root])

        return class_index, representatives


class FinSet(CategoryBackend):
    """
    Finite sets with the cartesian product as tensor. The pair (i, j) in X ⊗ Y is the element i·|Y| + j, which makes
    the product strictly associative, and the one-element set is a strict unit.
    """

    name = 'finset'

    @property
    def unit(self) -> FinSetObj:
        return FinSetObj(1)

    def identity(self, obj: FinSetObj) -> FinSetMor:
        return FinSetMor(obj, obj, np.arange(obj.size))

    def compose(self, g: FinSetMor, f: FinSetMor) -> FinSetMor:
        self.check_composable(g, f)

        return FinSetMor(f.domain, g.codomain, g.table[f.table])

    def tensor(self, x: FinSetObj, y: FinSetObj) -> FinSetObj:
        if x == self.unit:
            return y

        if y == self.unit:
            return x

        return FinSetObj(x.size * y.size)

    def tensor_mor(self, f: FinSetMor, g: FinSetMor) -> FinSetMor:
        table = np.add.outer(f.table * g.codomain.size, g.table).reshape(-1)

        return FinSetMor(self.tensor(f.domain, g.domain), self.tensor(f.codomain, g.codomain), table)

    def equal(self, f: FinSetMor, g: FinSetMor) -> bool:
        return f == g

    def witness(self, f: FinSetMor, g: FinSetMor) -> Optional[int]:
        differences = np.flatnonzero(f.table != g.table)

        return int(differences[0]) if len(differences) > 0 else None

    def basis_size(self, obj: FinSetObj) -> int:
        return obj.size

    def coequalizer(self, f: FinSetMor, g: FinSetMor) -> CoequalizerResult:
        """
        The quotient of the codomain by the smallest equivalence relation with f(x) ~ g(x) for every x. Classes are
        numbered in order of their smallest member, so that equal relations give identical quotients.
        """
        self.check_parallel(f, g)
        codomain = f.codomain
        union_find = UnionFind(codomain.size)

        for a, b in zip(f.table.tolist(), g.table.tolist()):
            union_find.union(a, b)

        class_index, representatives = union_find.canonical_classes()
        quotient = FinSetObj(len(representatives))
        projection = FinSetMor(codomain, quotient, class_index)

        def factorizer(h: FinSetMor) -> FinSetMor:
            return FinSetMor(quotient, h.codomain, h.table[representatives])

        logging.debug(f"FinSet coequalizer: {codomain.size} elements -> {quotient.size} classes.")

        return CoequalizerResult(backend=self, pairs=((f, g),), obj=quotient, projection=projection,
                                 factorizer=factorizer)

    def is_epimorphism(self, f: FinSetMor) -> bool:
        return f.is_surjective

    def is_isomorphism(self, f: FinSetMor) -> bool:
        return f.domain.size == f.codomain.size and f.is_surjective

    def inverse(self, f: FinSetMor) -> FinSetMor:
        if not self.is_isomorphism(f):
            raise ValueError(f"{f} is not a bijection.")

        return FinSetMor(f.codomain, f.domain, np.argsort(f.table))

    def coproduct(self, x: FinSetObj, y: FinSetObj) -> CoproductResult:
        """The disjoint union with the block of `x` first."""
        obj = FinSetObj(x.size + y.size)

        return CoproductResult(obj=obj, left_injection=FinSetMor(x, obj, np.arange(x.size)),
                               right_injection=FinSetMor(y, obj, x.size + np.arange(y.size)))

    def copair(self, f: FinSetMor, g: FinSetMor) -> FinSetMor:
        if f.codomain != g.codomain:
            raise ValueError(f"The components of a copairing must share a codomain, got {f} and {g}.")

        domain = self.coproduct(f.domain, g.domain).obj

        return FinSetMor(domain, f.codomain, np.concatenate([f.table, g.table]))

    def image_factorization(self, f: FinSetMor) -> ImageFactorization:
        """Factor through the set of values hit by `f`, indexed in order of first occurrence."""
        values, first_occurrence = np.unique(f.table, return_index=True)
        hit = values[np.argsort(first_occurrence)]
        position = {int(value): i for i, value in enumerate(hit)}
        image = FinSetObj(len(hit))

        epi = FinSetMor(f.domain, image, [position[int(value)] for value in f.table])
        mono = FinSetMor(image, f.codomain, hit)

        return ImageFactorization(epi=epi, mono=mono)

    def kernel_pair(self, f: FinSetMor) -> Pair:
        """The projections of {(a, b) | f(a) = f(b)}, ordered lexicographically."""
        pairs = [(a, b) for a in range(f.domain.size) for b in range(f.domain.size) if f.table[a] == f.table[b]]
        kernel = FinSetObj(len(pairs))

        return (FinSetMor(kernel, f.domain, [a for a, _ in pairs]),
                FinSetMor(kernel, f.domain, [b for _, b in pairs]))

    def sample_morphisms(self, x: FinSetObj, z: FinSetObj, limit: int = 64) -> Iterator[FinSetMor]:
        if x.size > 0 and z.size == 0:
            return

        if z.size ** x.size <= limit:
            for table in itertools.product(range(z.size), repeat=x.size):
                yield FinSetMor(x, z, table)
        else:
            rng = np.random.default_rng(x.size * 1009 + z.size)

            for _ in range(limit):
                yield FinSetMor(x, z, rng.integers(0, z.size, size=x.size))

    def enumerate_morphisms(self, x: FinSetObj, z: FinSetObj) -> Iterator[FinSetMor]:
        """Every function x -> z, in lexicographic order of tables."""
        for table in itertools.product(range(z.size), repeat=x.size):
            yield FinSetMor(x, z, table)

    def test_targets(self) -> List[FinSetObj]:
        return [FinSetObj(1), FinSetObj(2), FinSetObj(3)]

    def constant(self, domain: FinSetObj, codomain: FinSetObj, value: int) -> FinSetMor:
        return FinSetMor(domain, codomain, [value] * domain.size)

    def element(self, obj: FinSetObj, index: int) -> FinSetMor:
        """The morphism I -> obj picking out an element."""
        return FinSetMor(self.unit, obj, [index])
