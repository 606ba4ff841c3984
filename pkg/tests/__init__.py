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

from tests.catalog import CongruenceOracleTests, HomomorphismEnumerationTests, IdealOracleTests, MonoidCatalogTests, \
    MonoidRingOracleTests, RingCatalogTests
from tests.category import IndexTests, MorphismEqualTests, MultipleCoequalizerTests, ReflexivePairTests
from tests.finab import AbMorTests, FinAbCoequalizerTests, FinAbColimitTests, FinAbMonoidalTests, PresentedAbGroupTests
from tests.finset import FinSetCoequalizerTests, FinSetColimitTests, FinSetMonoidalTests, UnionFindTests
from tests.free import FreeMonoidAdjunctionTests, HomomorphicExtensionTests, MonadOnMorphismTests, TensorAlgebraTests, \
    WordMonoidTests
from tests.lifting import FreeAbelianAdjunctionTests, LiftObjectTests, LiftRightTests, MonoidRingLiftingTests, \
    RelationMorphismTests
from tests.monoid import CoincidenceTests, Fact1Tests, LambdaTests, MonoidCoequalizerTests, MonoidLawTests, \
    MultipleMonoidCoequalizerTests
from tests.pipeline import CheckCommandTests, CoequalizeCommandTests, HomCheckCommandTests, MonoidRingCommandTests, \
    OptionsTests, PipelineTests
from tests.smith import HermiteNormalFormTests, IntegerLinearAlgebraTests, SmithNormalFormTests
