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

from pathlib import Path
from typing import Tuple, Union

import numpy as np

File = Union[str, Path]
"""A word over a finite alphabet, i.e. a sequence of element indices. The empty word is the unit."""
Word = Tuple[int, ...]
"""A vector of integer coordinates with respect to the generators of a presented abelian group."""
Vector = Tuple[int, ...]
"""A 2D numpy array of arbitrary-precision integers (dtype=object)."""
IntMatrix = np.ndarray
