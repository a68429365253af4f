# -*- coding: utf-8 -*-

"""
The ``krt-toolkit`` command.

Exit codes are a stable contract:

- ``0`` the command succeeded
- ``1`` a semantic negative: a run did not halt,
  a check failed, or a certificate did not verify
- ``2`` a usage error: bad numerals, options, or oracle files

"""

import functools
import logging
import random
import sys
from typing import Any, Callable, List, Tuple

import click
from typing_extensions import Final

from krt_toolkit.basesys.encoding import Abnormal, classify, format_listing
from krt_toolkit.basesys.outcomes import Halted, RunOutcome
from krt_toolkit.checks.presets import SUITES
from krt_toolkit.checks.samples import random_program
from krt_toolkit.cli.formatter import Reporter, outcome_record, outcome_text
from krt_toolkit.cli.params import NATURAL, PROGRAM
from krt_toolkit.combinators.control import comp_m
from krt_toolkit.combinators.padding import pad, pad_once_traced
from krt_toolkit.combinators.recursion import krt, krt_plain
from krt_toolkit.combinators.specialize import smn
from krt_toolkit.combinators.stock import identity, successor
from krt_toolkit.constructions import (
    DerivedSystem,
    diagonal_clause,
    eta_build,
    fixed_point_demo,
    psi_build,
    theorem1_candidates,
    theta_build,
    zeta_build,
    zeta_clause,
)
from krt_toolkit.logic.oracles import Oracle
from krt_toolkit.logic.scripts import oracle_from_spec
from krt_toolkit.numcode import (
    bitlen,
    lift_digit_limit,
    nth_prime,
    pair,
    set_decode,
    set_encode,
    tuple_decode,
    tuple_encode,
    unpair,
)
from krt_toolkit.options.config import Configuration
from krt_toolkit.options.validation import CliConfig
from krt_toolkit.system import build_system
from krt_toolkit.universal.certificates import (
    Certificate,
    certificate_from_record,
    certificate_to_record,
    emit_certificate,
    verify_certificate,
)
from krt_toolkit.universal.simulation import Mode, simulate
from krt_toolkit.version import pkg_name, pkg_version

logger = logging.getLogger(__name__)

#: Exit status of semantic negatives.
NEGATIVE_EXIT: Final = 1

#: Name that runs every suite.
ALL_SUITES: Final = 'all'

#: What ``construct`` can build.
CONSTRUCTIONS: Final = (
    'theorem1', 'psi', 'eta', 'theta', 'zeta', 'fixedpoint',
)

#: Programs evaluated by the smoke report of ``construct``.
_SMOKE_PROGRAMS: Final = 3

_Command = Callable[..., Any]


def _configured(function: _Command) -> _Command:
    """Attaches the shared options and passes a validated config."""
    @functools.wraps(function)
    def decorator(**kwargs):
        options = {
            option.name: kwargs.pop(option.name)
            for option in Configuration.options
        }
        try:
            config = CliConfig(**options)
        except ValueError as exc:
            raise click.UsageError(str(exc))
        return function(config, Reporter(config.structured), **kwargs)
    return Configuration.register_options(decorator)


def _oracle(config: CliConfig) -> Oracle:
    try:
        return oracle_from_spec(config.oracle)
    except (ValueError, OSError) as exc:
        raise click.UsageError('Bad oracle {0!r}: {1}'.format(
            config.oracle, exc,
        ))


def _negative() -> None:
    sys.exit(NEGATIVE_EXIT)


@click.group()
@click.version_option(version=pkg_version, prog_name=pkg_name)
@click.option('--verbose', is_flag=True, help='Log construction details.')
def cli(verbose: bool) -> None:
    """Executable recursion theorem constructions."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )
    lift_digit_limit()


@cli.group()
def numcode() -> None:
    """Pairing, tuples, set codes, and primes."""


@numcode.command('pair')
@click.argument('first', type=NATURAL)
@click.argument('second', type=NATURAL)
@_configured
def numcode_pair(config, reporter, first: int, second: int) -> None:
    """Prints ⟨FIRST, SECOND⟩."""
    reporter.emit({'pair': pair(first, second)}, str(pair(first, second)))


@numcode.command('unpair')
@click.argument('paired', type=NATURAL)
@_configured
def numcode_unpair(config, reporter, paired: int) -> None:
    """Prints both halves of PAIRED."""
    first, second = unpair(paired)
    reporter.emit(
        {'first': first, 'second': second},
        '{0} {1}'.format(first, second),
    )


@numcode.command('tuple')
@click.argument('elements', type=NATURAL, nargs=-1, required=True)
@_configured
def numcode_tuple(config, reporter, elements: Tuple[int, ...]) -> None:
    """Prints the code of a tuple with at least two ELEMENTS."""
    try:
        encoded = tuple_encode(elements, len(elements))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    reporter.emit({'tuple': encoded}, str(encoded))


@numcode.command('untuple')
@click.argument('encoded', type=NATURAL)
@click.argument('arity', type=NATURAL)
@_configured
def numcode_untuple(config, reporter, encoded: int, arity: int) -> None:
    """Prints the ARITY elements ENCODED stands for."""
    try:
        elements = tuple_decode(encoded, arity)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    reporter.emit(
        {'elements': elements},
        ' '.join(str(element) for element in elements),
    )


@numcode.command('set')
@click.argument('members', type=NATURAL, nargs=-1)
@_configured
def numcode_set(config, reporter, members: Tuple[int, ...]) -> None:
    """Prints the code of a set of at most two MEMBERS."""
    try:
        encoded = set_encode(set(members))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    reporter.emit({'set': encoded.code}, str(encoded.code))


@numcode.command('members')
@click.argument('encoded', type=NATURAL)
@_configured
def numcode_members(config, reporter, encoded: int) -> None:
    """Prints the members of the set ENCODED names."""
    members = sorted(set_decode(encoded))
    reporter.emit(
        {'members': members},
        ' '.join(str(member) for member in members),
    )


@numcode.command('bitlen')
@click.argument('number', type=NATURAL)
@_configured
def numcode_bitlen(config, reporter, number: int) -> None:
    """Prints the bit length of NUMBER, which is 1 for zero."""
    reporter.emit({'bitlen': bitlen(number)}, str(bitlen(number)))


@numcode.command('prime')
@click.argument('index', type=NATURAL)
@_configured
def numcode_prime(config, reporter, index: int) -> None:
    """Prints the INDEX-th prime, counting from 2 as the zeroth."""
    reporter.emit({'prime': nth_prime(index)}, str(nth_prime(index)))


@cli.command()
@click.argument('program', type=PROGRAM)
@_configured
def inspect(config, reporter, program: int) -> None:
    """Classifies PROGRAM and prints its listing."""
    decoded = classify(program)
    if isinstance(decoded, Abnormal):
        reporter.emit({'program': program, 'class': 'abnormal'}, 'abnormal')
        return
    body = decoded.body
    reporter.emit(
        {
            'program': program,
            'class': 'normal',
            'padcount': body.padcount,
            'instructions': [str(line) for line in body.instructions],
        },
        'padcount: {0}\n{1}'.format(body.padcount, format_listing(body)),
    )


@cli.command()
@click.argument('program', type=PROGRAM)
@click.argument('argument', type=NATURAL)
@click.option('--pure', is_flag=True, help='Interpret through u stepwise.')
@_configured
def run(config, reporter, program: int, argument: int, pure: bool) -> None:
    """Runs PROGRAM on ARGUMENT within the budget."""
    outcome = simulate(
        build_system(_oracle(config)),
        program,
        argument,
        config.budget,
        mode=Mode.pure if pure else Mode.accelerated,
    )
    _report_outcome(reporter, outcome)
    if not isinstance(outcome, Halted):
        _negative()


@cli.command('krt')
@click.argument('task', type=PROGRAM)
@click.argument('parameter', type=PROGRAM, required=False)
@_configured
def krt_command(config, reporter, task: int, parameter) -> None:
    """
    Prints the self-referential program of TASK.

    With PARAMETER it runs TASK on ⟨self, ⟨PARAMETER, x⟩⟩,
    otherwise on ⟨self, x⟩.
    """
    if parameter is None:
        code = krt_plain(task)
    else:
        code = krt(parameter, task)
    reporter.emit({'krt': code}, str(code))


@cli.command('pad')
@click.argument('program', type=NATURAL)
@click.option('--once', is_flag=True, help='Use the padding-once code.')
@_configured
def pad_command(config, reporter, program: int, once: bool) -> None:
    """Prints a larger code of PROGRAM that computes the same."""
    if not once:
        reporter.emit({'pad': pad(program)}, str(pad(program)))
        return
    traced = pad_once_traced(program)
    reporter.emit(
        {'pad_once': traced.code, 'case': traced.case.name},
        '{0} ({1})'.format(traced.code, traced.case.name),
    )


@cli.command()
@click.argument('outer', type=PROGRAM)
@click.argument('inner', type=PROGRAM, nargs=-1, required=True)
@_configured
def compose(config, reporter, outer: int, inner: Tuple[int, ...]) -> None:
    """Prints the code of OUTER applied to the outputs of every INNER."""
    code = comp_m(outer, inner)
    reporter.emit({'compose': code}, str(code))


@cli.command('smn')
@click.argument('program', type=PROGRAM)
@click.argument('stored', type=NATURAL)
@_configured
def smn_command(config, reporter, program: int, stored: int) -> None:
    """Prints the code of PROGRAM with STORED fixed as first input."""
    code = smn(program, stored)
    reporter.emit({'smn': code}, str(code))


@cli.command()
@click.argument('which', type=click.Choice(CONSTRUCTIONS))
@click.option(
    '--program',
    type=PROGRAM,
    default=None,
    help='p of theorem1, d of fixedpoint.',
)
@click.option(
    '--points',
    type=NATURAL,
    default=5,
    show_default=True,
    help='Arguments of the smoke evaluation.',
)
@_configured
def construct(config, reporter, which: str, program, points: int) -> None:
    """Builds a construction and reports which clauses applied."""
    oracle = _oracle(config)
    if which == 'theorem1':
        _construct_theorem1(config, reporter, oracle, program, points)
    elif which == 'fixedpoint':
        _construct_fixed_point(config, reporter, oracle, program)
    else:
        builder = {
            'psi': psi_build,
            'eta': eta_build,
            'theta': theta_build,
            'zeta': zeta_build,
        }[which]
        _construct_system(
            config, reporter, builder(oracle, config.derived_budget), points,
        )


@cli.group()
def certificate() -> None:
    """Emits and checks halting certificates."""


@certificate.command('emit')
@click.argument('program', type=PROGRAM)
@click.argument('argument', type=NATURAL)
@_configured
def certificate_emit(config, reporter, program: int, argument: int) -> None:
    """Certifies the output of PROGRAM on ARGUMENT."""
    emitted = emit_certificate(
        build_system(_oracle(config)), program, argument, config.budget,
    )
    if not isinstance(emitted, Certificate):
        _report_outcome(reporter, emitted)
        _negative()
    else:
        click.echo(certificate_to_record(emitted))


@certificate.command('check')
@click.argument('record')
@_configured
def certificate_check(config, reporter, record: str) -> None:
    """Recomputes the run a certificate RECORD claims."""
    try:
        parsed = certificate_from_record(record)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    valid = verify_certificate(build_system(_oracle(config)), parsed)
    reporter.emit({'valid': valid}, 'valid' if valid else 'invalid')
    if not valid:
        _negative()


@cli.command()
@click.argument('suite', type=click.Choice([*SUITES, ALL_SUITES]))
@_configured
def verify(config, reporter, suite: str) -> None:
    """Runs a verification SUITE, or all of them."""
    names = list(SUITES) if suite == ALL_SUITES else [suite]
    logger.debug('Running suites: %s', ', '.join(names))
    failed = 0
    total = 0
    for name in names:
        for result in SUITES[name](config).run():
            reporter.check(result)
            total += 1
            failed += not result.passed
    reporter.emit(
        {'checks': total, 'failed': failed},
        '{0} checks, {1} failed'.format(total, failed),
    )
    if failed:
        _negative()


def _report_outcome(reporter: Reporter, outcome: RunOutcome) -> None:
    reporter.emit(outcome_record(outcome), outcome_text(outcome))


def _smoke_programs(config: CliConfig) -> List[int]:
    rng = random.Random('construct:{0}'.format(config.seed))
    return [random_program(rng) for _ in range(_SMOKE_PROGRAMS)]


def _construct_system(
    config: CliConfig,
    reporter: Reporter,
    system: DerivedSystem,
    points: int,
) -> None:
    codes = system.codes()
    reporter.emit(
        {'system': system.name, **codes},
        '\n'.join(
            '{0}: {1}'.format(name, code) for name, code in codes.items()
        ),
    )
    clause_of = zeta_clause if system.name == 'zeta' else diagonal_clause
    for program in _smoke_programs(config):
        for argument in range(points):
            clause = clause_of(system, program, argument)
            outcome = system.evaluate(program, argument)
            reporter.emit(
                {
                    'program': program,
                    'argument': argument,
                    'clause': clause.value,
                    **outcome_record(outcome),
                },
                '{0}_p({1}): {2}, {3}'.format(
                    system.name, argument, clause.value,
                    outcome_text(outcome),
                ),
            )


def _construct_theorem1(
    config: CliConfig,
    reporter: Reporter,
    oracle: Oracle,
    program,
    points: int,
) -> None:
    candidates = theorem1_candidates(
        successor() if program is None else program, oracle,
    )
    reporter.emit({
        'program': candidates.program,
        'g_code': candidates.g_code.code,
        'e1': candidates.e1,
        'e2': candidates.e2,
    })
    for name, candidate in (('e1', candidates.e1), ('e2', candidates.e2)):
        for argument in range(points):
            clause = candidates.clause(candidate, argument)
            outcome = candidates.machine.run(
                candidate, argument, config.derived_budget,
            )
            reporter.emit(
                {
                    'candidate': name,
                    'argument': argument,
                    'clause': clause.value,
                    **outcome_record(outcome),
                },
                '{0}({1}): {2}, {3}'.format(
                    name, argument, clause.value, outcome_text(outcome),
                ),
            )


def _construct_fixed_point(
    config: CliConfig,
    reporter: Reporter,
    oracle: Oracle,
    program,
) -> None:
    demo = fixed_point_demo(
        build_system(oracle),
        identity() if program is None else program,
        config.budget,
    )
    reporter.emit({'d': demo.d, 'p0': demo.p0, **outcome_record(demo.q0)})
    if demo.certificate is None:
        _negative()
    else:
        click.echo(certificate_to_record(demo.certificate))
