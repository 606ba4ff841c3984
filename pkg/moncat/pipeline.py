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
import dataclasses
import logging
import sys
from typing import List, Optional, Sequence

from tabulate import tabulate

from moncat.category import Pair
from moncat.finset import FinSet
from moncat.io import SchemaError, dumps, load_json, parse_finite_monoid, parse_finite_ring, parse_monoid, \
    parse_monoid_morphism, parse_pairs, require
from moncat.lifting import MonoidRingLifting, StabilizationError, lift_object, lifted_unit
from moncat.monoid import MonoidCoequalizer, MonoidObject, check_monoid, check_monoid_morphism, fact1_identities, \
    monoid_coequalizer, monoid_multiple_coequalizer
from moncat.options import Command, ConstructionOptions, PipelineOptions, ReportFormat, ReportOptions, StorageOptions
from moncat.oracles import congruence_quotient, enumerate_monoid_homomorphisms, enumerate_ring_homomorphisms, \
    generated_pairs, ideal_closure, ideal_quotient, monoid_ring
from moncat.report import VerificationReport
from moncat.utils import Timer, setup_logger


@dataclasses.dataclass(frozen=True)
class Request:
    """One invocation of the program: what to run, on what, and how thoroughly."""

    """The command to run."""
    command: Command
    """The parsed JSON payload."""
    payload: dict
    """The truncation degree and verification depth."""
    options: ConstructionOptions = dataclasses.field(default_factory=ConstructionOptions)


@dataclasses.dataclass(frozen=True)
class Response:
    """The result of a request: a JSON friendly result and the verification transcript."""

    request: Request
    result: dict
    transcript: VerificationReport
    """Short key/value lines for the text report."""
    summary: dict = dataclasses.field(default_factory=dict)
    """Multiplication tables to print in the text report."""
    tables: dict = dataclasses.field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.transcript.ok

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> dict:
        return dict(command=self.request.command.get_cli_name(), options=self.request.options.to_json(), ok=self.ok,
                    result=self.result, transcript=self.transcript.to_json())

    def to_text(self) -> str:
        lines = [f"{self.request.command.get_cli_name()}: {'ok' if self.ok else 'FAILED'}"]

        if self.summary:
            lines.append(tabulate(list(self.summary.items()), tablefmt='plain'))

        for name, table in self.tables.items():
            size = len(table)
            lines.append(f"\n{name}")
            lines.append(tabulate([[a] + list(row) for a, row in enumerate(table)],
                                  headers=['·'] + list(range(size))))

        lines.append('')
        lines.append(self.transcript.to_text())

        return '\n'.join(lines)

    def render(self, report_format: ReportFormat) -> str:
        if report_format == ReportFormat.Text:
            return self.to_text() + '\n'

        return dumps(self.to_json()) + '\n'


class Pipeline:
    """Runs one command on one JSON payload and writes the report."""

    def __init__(self, options: PipelineOptions, storage_options: StorageOptions,
                 construction_options: Optional[ConstructionOptions] = None,
                 report_options: Optional[ReportOptions] = None):
        """
        :param options: Which command to run.
        :param storage_options: Where the payload is read from and the report written to.
        :param construction_options: The truncation degree and verification depth.
        :param report_options: The report format.
        """
        self.options = options
        self.storage_options = storage_options
        self.construction_options = construction_options if construction_options is not None else ConstructionOptions()
        self.report_options = report_options if report_options is not None else ReportOptions()

        setup_logger(storage_options.log_file, verbose=options.verbose)

    @staticmethod
    def from_command_line(argv: Optional[Sequence[str]] = None) -> 'Pipeline':
        """
        Initialises an instance of the pipeline using command line arguments.

        :param argv: (optional) The arguments to parse instead of `sys.argv`.
        :return: An instance of the pipeline.
        """
        parser = argparse.ArgumentParser("MONCAT", description="Compute and verify coequalizers of monoids and "
                                                               "monoid rings with exact arithmetic.")
        PipelineOptions.add_args(parser)
        StorageOptions.add_args(parser)
        ConstructionOptions.add_args(parser)
        ReportOptions.add_args(parser)

        args = parser.parse_args(argv)

        pipeline_options = PipelineOptions.from_args(args)
        storage_options = StorageOptions.from_args(args)
        report_options = ReportOptions.from_args(args)

        try:
            construction_options = ConstructionOptions.from_args(args)
        except ValueError as e:
            # Exits with code 2 like every other usage error.
            parser.error(str(e))

        pipeline = Pipeline(
            options=pipeline_options,
            storage_options=storage_options,
            construction_options=construction_options,
            report_options=report_options
        )

        logging.debug(args)

        return pipeline

    @property
    def command(self) -> Command:
        return self.options.command

    def run(self) -> int:
        """
        Read the payload, run the command and write the report.

        :return: The exit code: 0 if every check passed, 1 on a mathematical failure, 2 on an unreadable or invalid
            payload.
        """
        try:
            payload = load_json(self.storage_options.input_path)
            request = Request(self.command, payload, self.construction_options.copy())

            with Timer() as timer:
                response = self.handle(request)
        except (SchemaError, OSError) as e:
            logging.error(f"Could not process {self.storage_options.input_path}: {e}")

            return 2

        logging.info(f"Ran '{self.command.get_cli_name()}' in {timer.elapsed.total_seconds():.2f}s: "
                     f"{len(response.transcript)} checks, {len(response.transcript.failures)} failed.")

        output = response.render(self.report_options.report_format)

        if self.storage_options.output_path:
            with open(self.storage_options.output_path, 'w') as f:
                f.write(output)

            logging.info(f"Wrote the report to {self.storage_options.output_path}.")
        else:
            sys.stdout.write(output)
            sys.stdout.flush()

        return response.exit_code

    @staticmethod
    def handle(request: Request) -> Response:
        """
        Dispatch a request to its command.

        :raises SchemaError: if the payload does not describe what the command needs.
        """
        handlers = {
            Command.Check: cmd_check,
            Command.Coequalize: cmd_coequalize,
            Command.MonoidRing: cmd_monoid_ring,
            Command.HomCheck: cmd_hom_check,
        }

        if request.command not in handlers:
            raise NotImplementedError(f"No handler for the command {request.command}.")

        logging.info(f"Running '{request.command.get_cli_name()}' with {request.options}.")

        return handlers[request.command](request)


def _tables(**monoids: MonoidObject) -> dict:
    return {name: monoid.table.tolist() for name, monoid in monoids.items() if isinstance(monoid.backend, FinSet)}


def _describe(monoid: MonoidObject) -> str:
    if isinstance(monoid.backend, FinSet):
        return f"monoid of order {monoid.size}"

    return f"ring with additive group {monoid.carrier.describe()}"


def cmd_check(request: Request) -> Response:
    """
    Verify the laws of a monoid (`{"monoid": ...}`) or of a monoid morphism (`{"morphism": ...}`), including the
    laws of its source and target.
    """
    payload = request.payload
    transcript = VerificationReport('check')

    if 'morphism' in payload:
        f = parse_monoid_morphism(payload['morphism'])
        transcript.extend(check_monoid(f.source), prefix='source')
        transcript.extend(check_monoid(f.target), prefix='target')
        transcript.extend(check_monoid_morphism(f), prefix='morphism')
        result = dict(source=f.source.to_json(), target=f.target.to_json(), morphism=f.morphism.to_json())
        summary = dict(source=_describe(f.source), target=_describe(f.target))
        tables = _tables(source=f.source, target=f.target)
    else:
        monoid = parse_monoid(require(payload, 'monoid', 'payload'))
        transcript.extend(check_monoid(monoid), prefix='')
        result = dict(monoid=monoid.to_json())
        summary = dict(monoid=_describe(monoid))
        tables = _tables(monoid=monoid)

    return Response(request, result, transcript, summary=summary, tables=tables)


def _oracle_checks(coequalizer: MonoidCoequalizer, pairs: List[Pair]) -> VerificationReport:
    """Compare a quotient with the smallest congruence (monoids) or with A/(A·im(α - β)·A) (finite rings)."""
    monoid = coequalizer.source
    quotient = coequalizer.quotient
    report = VerificationReport('oracle')

    if isinstance(monoid.backend, FinSet):
        oracle, class_index = congruence_quotient(monoid, [p for alpha, beta in pairs
                                                           for p in generated_pairs(alpha, beta)])
        report.add('smallest_congruence', oracle == quotient and
                   coequalizer.projection.morphism.table.tolist() == class_index,
                   witness=[oracle.size, quotient.size], detail='congruence closure')
    elif monoid.carrier.is_finite:
        generators = [[a - b for a, b in zip(alpha(e), beta(e))]
                      for alpha, beta in pairs for e in _basis(alpha.domain.gens)]
        oracle = ideal_quotient(monoid, ideal_closure(monoid, generators))
        report.add('ideal_closure', oracle.is_isomorphic(quotient.carrier),
                   witness=[oracle.describe(), quotient.carrier.describe()], detail='two-sided ideal closure')
    else:
        logging.info("Skipping the ideal closure oracle since the ring is infinite.")

    return report


def _basis(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def cmd_coequalize(request: Request) -> Response:
    """
    Coequalize one or more pairs into a monoid (`{"monoid": ..., "source": X, "alpha": ..., "beta": ...}` or with a
    list under "pairs"). The result holds the quotient monoid and the projection.
    """
    payload = request.payload
    monoid = parse_monoid(require(payload, 'monoid', 'payload'))
    pairs = parse_pairs(monoid, payload)
    transcript = VerificationReport('coequalize')

    if not transcript.extend(check_monoid(monoid), prefix='monoid').ok:
        return Response(request, dict(monoid=monoid.to_json()), transcript, summary=dict(monoid=_describe(monoid)))

    if len(pairs) == 1:
        coequalizer = monoid_coequalizer(monoid, *pairs[0])
    else:
        coequalizer = monoid_multiple_coequalizer(monoid, pairs)

    quotient = coequalizer.quotient
    transcript.extend(coequalizer.verify(), prefix='')

    if request.options.full:
        for i, (alpha, beta) in enumerate(pairs):
            transcript.extend(fact1_identities(coequalizer.projection, alpha, beta), prefix=f"lambda[{i}]")

        transcript.extend(_oracle_checks(coequalizer, pairs), prefix='oracle')

    result = dict(quotient=quotient.to_json(), projection=coequalizer.projection.morphism.to_json())
    summary = dict(monoid=_describe(monoid), pairs=len(pairs), quotient=_describe(quotient))

    return Response(request, result, transcript, summary=summary, tables=_tables(quotient=quotient))


def cmd_monoid_ring(request: Request) -> Response:
    """
    Compute Z[D] for a finite monoid D (`{"monoid": ...}`) as the lifted left adjoint at the requested truncation
    degree, with the stabilization transcript and a comparison with the monoid ring built directly.
    """
    monoid = parse_finite_monoid(require(request.payload, 'monoid', 'payload'))
    truncation = request.options.truncation
    transcript = VerificationReport('monoid_ring')

    if not transcript.extend(check_monoid(monoid), prefix='monoid').ok:
        return Response(request, dict(monoid=monoid.to_json()), transcript, summary=dict(monoid=_describe(monoid)))

    try:
        lifted = lift_object(monoid, truncation)
    except StabilizationError as e:
        transcript.add('stabilization', False, witness=truncation, detail=str(e))

        return Response(request, dict(monoid=monoid.to_json()), transcript, summary=dict(monoid=_describe(monoid)))

    ring = lifted.monoid
    transcript.extend(lifted.stabilization, prefix='stabilization')
    transcript.extend(check_monoid(ring), prefix='ring')
    oracle = monoid_ring(monoid)
    transcript.add('oracle.monoid_ring', oracle == ring, detail='the free abelian group on D with [d]·[d\'] = [dd\']')

    if request.options.full:
        transcript.extend(lifted_unit(lifted).check(), prefix='unit')

    result = dict(ring=ring.to_json(), free_rank=ring.carrier.free_rank,
                  torsion=list(ring.carrier.invariant_factors), truncation=truncation)
    summary = dict(monoid=_describe(monoid), ring=_describe(ring), truncation=truncation,
                   generators=lifted.algebra.obj.gens)

    return Response(request, result, transcript, summary=summary)


def cmd_hom_check(request: Request) -> Response:
    """
    Enumerate monoid morphisms D -> R̄A and ring morphisms Z[D] -> A (`{"monoid": D, "ring": A}`) and check that
    transposition is a bijection between them.
    """
    payload = request.payload
    monoid = parse_finite_monoid(require(payload, 'monoid', 'payload'))
    ring = parse_finite_ring(require(payload, 'ring', 'payload'))
    transcript = VerificationReport('hom_check')
    transcript.extend(check_monoid(monoid), prefix='monoid')
    transcript.extend(check_monoid(ring), prefix='ring')

    if not transcript.ok:
        return Response(request, dict(monoid=monoid.to_json(), ring=ring.to_json()), transcript)

    # The relations of Z[D] live in degree 2, which is all the hom-set comparison needs.
    lifting = MonoidRingLifting(truncation=2)
    bijection = lifting.hom_bijection_check(monoid, ring)
    transcript.extend(bijection, prefix='bijection')

    if request.options.full:
        transcript.extend(lifting.check_counit(ring), prefix='counit')

    counts = dict(monoid_morphisms=len(enumerate_monoid_homomorphisms(monoid, lifting.right(ring))),
                  ring_morphisms=len(enumerate_ring_homomorphisms(lifting.lift(monoid).monoid, ring)))
    result = dict(monoid=monoid.to_json(), ring=ring.to_json(), **counts)
    summary = dict(monoid=_describe(monoid), ring=_describe(ring), **counts)

    return Response(request, result, transcript, summary=summary)


def main():
    program = Pipeline.from_command_line()
    sys.exit(program.run())


if __name__ == '__main__':
    main()
