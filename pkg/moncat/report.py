"""Verification reports: named pass/fail checks with counterexample witnesses."""

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
from typing import Any, List, Optional

from tabulate import tabulate


@dataclasses.dataclass(frozen=True)
class Check:
    """The outcome of verifying a single law or equation."""

    """Short identifier of the law, e.g. 'associativity'."""
    name: str
    """Whether the law holds."""
    passed: bool
    """A JSON friendly counterexample (e.g. the failing element triple), None if the check passed."""
    witness: Optional[Any] = None
    """Free-form detail, e.g. the objects involved."""
    detail: str = ''

    def to_json(self) -> dict:
        return dict(name=self.name, passed=self.passed, witness=self.witness, detail=self.detail)


class VerificationReport:
    """An ordered collection of checks. A report is `ok` iff every check passed."""

    def __init__(self, title: str, checks: Optional[List[Check]] = None):
        self.title = title
        self.checks: List[Check] = list(checks) if checks else []

    def add(self, name: str, passed: bool, witness: Optional[Any] = None, detail: str = '') -> bool:
        """
        Record the outcome of a check.

        :return: `passed`, so that callers can branch on the result.
        """
        self.checks.append(Check(name=name, passed=bool(passed), witness=None if passed else witness, detail=detail))

        if not passed:
            logging.warning(f"{self.title}: check '{name}' failed (witness: {witness}). {detail}".rstrip())

        return bool(passed)

    def extend(self, other: 'VerificationReport', prefix: Optional[str] = None) -> 'VerificationReport':
        """Append the checks of another report, optionally prefixing their names."""
        prefix = other.title if prefix is None else prefix

        for check in other.checks:
            name = f"{prefix}.{check.name}" if prefix else check.name
            self.checks.append(dataclasses.replace(check, name=name))

        return self

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def __bool__(self):
        return self.ok

    def __len__(self):
        return len(self.checks)

    def __repr__(self):
        return f"{self.__class__.__name__}(title='{self.title}', ok={self.ok}, checks={len(self.checks)})"

    def to_json(self) -> dict:
        return dict(title=self.title, ok=self.ok, checks=[check.to_json() for check in self.checks])

    def to_text(self) -> str:
        rows = [(check.name, 'pass' if check.passed else 'FAIL', '' if check.witness is None else check.witness)
                for check in self.checks]
        status = 'ok' if self.ok else f"{len(self.failures)} failed"

        return f"{self.title} ({status})\n" + tabulate(rows, headers=('check', 'result', 'witness'))
