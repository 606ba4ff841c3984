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

import argparse
import enum
from typing import Dict, Optional

from moncat.custom_types import File
from moncat.utils import check_domain, Domain


class ReprMixin:
    """Mixin that provides a basic string representation for objects."""

    def __repr__(self):
        def format_key_value_pair(key):
            value = self.__getattribute__(key)

            if isinstance(value, str):
                return f"{key}='{value}'"
            else:
                return f"{key}={value}"

        return f"{self.__class__.__name__}({', '.join(list(map(format_key_value_pair, self.__dict__)))})"

    def __str__(self):
        return repr(self)


class Options(ReprMixin):
    """
    Interface for objects that store options that can be initialised either programmatically or
    via command-line arguments.
    """

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        """
        Add arguments to a parser (modifies object in-place).
        Implementing members should add the new arguments to a group.

        :param parser: The parser object to add the arguments to.
        """
        raise NotImplementedError

    @staticmethod
    def from_args(args: argparse.Namespace) -> 'Options':
        """
        Create an Options object from parsed command line arguments.

        :param args: The namespace object from calling `parser.parse_args()`.
        """
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.__dict__ == other.__dict__


class Command(enum.Enum):
    # Verify the monoid laws of a monoid, or the laws of a monoid morphism.
    Check = enum.auto()
    # Coequalize one or more pairs of morphisms into a monoid.
    Coequalize = enum.auto()
    # Compute the lifted left adjoint at a finite monoid, i.e. its monoid ring.
    MonoidRing = enum.auto()
    # Compare monoid morphisms D -> R̄A with ring morphisms Z[D] -> A.
    HomCheck = enum.auto()

    @classmethod
    def get_choices(cls):
        return {
            cls.Check.get_cli_name(): cls.Check,
            cls.Coequalize.get_cli_name(): cls.Coequalize,
            cls.MonoidRing.get_cli_name(): cls.MonoidRing,
            cls.HomCheck.get_cli_name(): cls.HomCheck,
        }

    @classmethod
    def get_cli_names(cls) -> Dict['Command', str]:
        return {
            cls.Check: 'check',
            cls.Coequalize: 'coequalize',
            cls.MonoidRing: 'monoid_ring',
            cls.HomCheck: 'hom_check',
        }

    def get_cli_name(self) -> str:
        cli_names = self.get_cli_names()

        if self not in cli_names:
            raise NotImplementedError(f"The command '{self.name}' does not have a CLI name.")

        return cli_names[self]

    @classmethod
    def from_string(cls, name):
        choices = cls.get_choices()

        if name.lower() in choices:
            return choices[name.lower()]
        else:
            raise RuntimeError(f"No command called {name}, valid choices are: {list(choices.keys())}")


class ReportFormat(enum.Enum):
    Json = enum.auto()
    Text = enum.auto()

    @classmethod
    def get_choices(cls):
        return {
            cls.Json.get_cli_name(): cls.Json,
            cls.Text.get_cli_name(): cls.Text,
        }

    @classmethod
    def get_cli_names(cls) -> Dict['ReportFormat', str]:
        return {
            cls.Json: 'json',
            cls.Text: 'text',
        }

    def get_cli_name(self) -> str:
        cli_names = self.get_cli_names()

        if self not in cli_names:
            raise NotImplementedError(f"The report format '{self.name}' does not have a CLI name.")

        return cli_names[self]

    @classmethod
    def from_string(cls, name):
        choices = cls.get_choices()

        if name.lower() in choices:
            return choices[name.lower()]
        else:
            raise RuntimeError(f"No report format called {name}, valid choices are: {list(choices.keys())}")


class VerifyDepth(enum.Enum):
    # Only the checks that define the result (laws, coequalizing, stabilization, counts).
    Fast = enum.auto()
    # Additionally compare against the brute-force oracles and re-check the auxiliary identities.
    Full = enum.auto()

    @classmethod
    def get_choices(cls):
        return {
            cls.Fast.get_cli_name(): cls.Fast,
            cls.Full.get_cli_name(): cls.Full,
        }

    @classmethod
    def get_cli_names(cls) -> Dict['VerifyDepth', str]:
        return {
            cls.Fast: 'fast',
            cls.Full: 'full',
        }

    def get_cli_name(self) -> str:
        cli_names = self.get_cli_names()

        if self not in cli_names:
            raise NotImplementedError(f"The verification depth '{self.name}' does not have a CLI name.")

        return cli_names[self]

    @classmethod
    def from_string(cls, name):
        choices = cls.get_choices()

        if name.lower() in choices:
            return choices[name.lower()]
        else:
            raise RuntimeError(f"No verification depth called {name}, valid choices are: {list(choices.keys())}")


class PipelineOptions(Options):
    """Options that select what the program does."""

    def __init__(self, command=Command.Check, verbose=False):
        """
        :param command: The construction or verification to run on the input.
        :param verbose: Whether DEBUG messages should be printed to the console.
        """
        self.command = command
        self.verbose = verbose

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        group = parser.add_argument_group('Pipeline Options')

        group.add_argument('--command', type=str, choices=Command.get_choices(), required=True,
                           help='The command to run on the input payload.')
        group.add_argument('--verbose', action='store_true', help='Print DEBUG messages to the console.')

    @staticmethod
    def from_args(args: argparse.Namespace) -> 'PipelineOptions':
        return PipelineOptions(command=Command.from_string(args.command), verbose=args.verbose)

    def to_json(self) -> dict:
        return dict(command=self.command.get_cli_name())


class StorageOptions(Options):
    """Options regarding storage of inputs and outputs."""

    def __init__(self, input_path: File, output_path: Optional[File] = None, log_file: Optional[File] = None):
        """
        :param input_path: The JSON file with the request payload.
        :param output_path: (optional) Where to write the report. Defaults to stdout.
        :param log_file: (optional) Where to write the detailed log.
        """
        self.input_path = input_path
        self.output_path = output_path
        self.log_file = log_file

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        group = parser.add_argument_group('Storage Options')

        group.add_argument('--input', type=str, required=True,
                           help='The JSON file describing the monoid(s), morphisms or ring to work on.')
        group.add_argument('--output', type=str, default=None,
                           help='Where to write the report. If not given, the report is printed to stdout.')
        group.add_argument('--log-file', type=str, default=None,
                           help='Where to write the detailed log. Console logs always go to stderr.')

    @staticmethod
    def from_args(args: argparse.Namespace) -> 'StorageOptions':
        return StorageOptions(input_path=args.input, output_path=args.output, log_file=args.log_file)


class ConstructionOptions(Options):
    """Options for the constructions and the verification transcript."""

    def __init__(self, truncation=3, verify_depth=VerifyDepth.Full):
        """
        :param truncation: The truncation degree N ≥ 2 of the tensor algebra used to compute monoid rings.
        :param verify_depth: How much of the verification transcript to compute.
        """
        self.truncation = truncation
        self.verify_depth = verify_depth

    @property
    def truncation(self) -> int:
        return self._truncation

    @truncation.setter
    def truncation(self, truncation: int):
        check_domain(truncation, 'truncation', int, Domain.Positive, minimum=2)
        self._truncation = truncation

    @property
    def full(self) -> bool:
        return self.verify_depth == VerifyDepth.Full

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        group = parser.add_argument_group('Construction Options')

        group.add_argument('--truncation', type=int, default=3,
                           help='The truncation degree of the tensor algebra. The monoid ring is compared between '
                                'degrees N - 1 and N to confirm stabilization.')
        group.add_argument('--verify-depth', type=str, default=VerifyDepth.Full.get_cli_name(),
                           choices=VerifyDepth.get_choices(),
                           help='Whether to only run the defining checks (fast) or to also compare with the '
                                'brute-force oracles (full).')

    @staticmethod
    def from_args(args: argparse.Namespace) -> 'ConstructionOptions':
        return ConstructionOptions(truncation=args.truncation, verify_depth=VerifyDepth.from_string(args.verify_depth))

    def copy(self) -> 'ConstructionOptions':
        return ConstructionOptions(truncation=self.truncation, verify_depth=self.verify_depth)

    def to_json(self) -> dict:
        """
        Convert the construction options to a JSON friendly dictionary.
        :return: A dictionary containing the construction options.
        """
        return dict(truncation=self.truncation, verify_depth=self.verify_depth.get_cli_name())

    @classmethod
    def from_json(cls, json_dict: dict) -> 'ConstructionOptions':
        """
        Get construction options from a JSON dictionary.

        :param json_dict: A JSON formatted dictionary.
        :return: The construction options.
        """
        return ConstructionOptions(truncation=int(json_dict['truncation']),
                                   verify_depth=VerifyDepth.from_string(json_dict['verify_depth']))


class ReportOptions(Options):
    """Options for how the result is written."""

    def __init__(self, report_format=ReportFormat.Json):
        """
        :param report_format: JSON for scripts, text for people.
        """
        self.report_format = report_format

    @staticmethod
    def add_args(parser: argparse.ArgumentParser):
        group = parser.add_argument_group('Report Options')

        group.add_argument('--report', type=str, default=ReportFormat.Json.get_cli_name(),
                           choices=ReportFormat.get_choices(), help='The format of the report.')

    @staticmethod
    def from_args(args: argparse.Namespace) -> 'ReportOptions':
        return ReportOptions(report_format=ReportFormat.from_string(args.report))

    def to_json(self) -> dict:
        return dict(report_format=self.report_format.get_cli_name())

    @classmethod
    def from_json(cls, json_dict: dict) -> 'ReportOptions':
        return ReportOptions(report_format=ReportFormat.from_string(json_dict['report_format']))
