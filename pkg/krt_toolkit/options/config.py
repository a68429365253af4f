# -*- coding: utf-8 -*-

from typing import Any, Callable, ClassVar, Optional, Sequence, TypeVar

import attr
import click
from typing_extensions import final

from krt_toolkit.options import defaults

#: Any ``click`` command before or after the options are attached.
_Command = TypeVar('_Command', bound=Callable[..., Any])


@final
@attr.dataclass(frozen=True, slots=True)
class _Option(object):
    """Represents one ``click`` option shared by every subcommand."""

    long_option_name: str
    default: Any
    help: str
    type: Any = int  # noqa: A003
    envvar: Optional[str] = None

    def __attrs_post_init__(self):
        """Is called after regular init is done."""
        object.__setattr__(  # noqa: WPS609
            self, 'help', '{0} Defaults to: {1}'.format(
                self.help, self.default,
            ),
        )

    @property
    def name(self) -> str:
        """Keyword the command function receives."""
        return self.long_option_name[2:].replace('-', '_')


@final
class Configuration(object):
    """
    Provides the options every subcommand accepts.

    Defaults aim at runs that finish on a laptop.
    All budgets are counted in machine steps.

    Options for budgets:

    - ``budget`` - steps a plain run may take, defaults to
      :str:`krt_toolkit.options.defaults.BUDGET`,
      the ``KRT_BUDGET`` environment variable overrides the default
    - ``derived-budget`` - steps a run of a derived system may take,
      defaults to
      :str:`krt_toolkit.options.defaults.DERIVED_BUDGET`

    Options for the oracle and the checks:

    - ``oracle`` - either ``silent`` or ``scripted:<path>`` naming
      an oracle script, defaults to
      :str:`krt_toolkit.options.defaults.ORACLE`
    - ``range`` - arguments of ``w`` below this number are explored
      exhaustively, defaults to
      :str:`krt_toolkit.options.defaults.EXPLORED_RANGE`
    - ``seed`` - seed of every random selection, defaults to
      :str:`krt_toolkit.options.defaults.SEED`
    - ``samples`` - overrides the sample count of every check,
      ``0`` keeps the count each check prescribes

    Options for output:

    - ``format`` - ``text`` for people and ``structured`` for
      line delimited JSON records, defaults to
      :str:`krt_toolkit.options.defaults.OUTPUT_FORMAT`

    Example::

        krt-toolkit verify zeta --range 128 --seed 7 --format structured

    """

    options: ClassVar[Sequence[_Option]] = [
        # Budgets:

        _Option(
            '--budget',
            defaults.BUDGET,
            'Steps a plain run may take.',
            envvar=defaults.BUDGET_VARIABLE,
        ),

        _Option(
            '--derived-budget',
            defaults.DERIVED_BUDGET,
            'Steps a run of a derived system may take.',
        ),

        # Oracle and checks:

        _Option(
            '--oracle',
            defaults.ORACLE,
            'Oracle specification: silent or scripted:<path>.',
            type=str,
        ),

        _Option(
            '--range',
            defaults.EXPLORED_RANGE,
            'Arguments of w below this number are explored.',
        ),

        _Option(
            '--seed',
            defaults.SEED,
            'Seed of every random selection.',
        ),

        _Option(
            '--samples',
            0,
            'Sample count of every check, 0 keeps the prescribed ones.',
        ),

        # Output:

        _Option(
            '--format',
            defaults.OUTPUT_FORMAT,
            'Output format: text or structured.',
            type=click.Choice(['text', 'structured']),
        ),
    ]

    @classmethod
    def register_options(cls, command: _Command) -> _Command:
        """Attaches all options to a ``click`` command."""
        for option in reversed(cls.options):
            command = click.option(
                option.long_option_name,
                option.name,
                default=option.default,
                help=option.help,
                type=option.type,
                envvar=option.envvar,
            )(command)
        return command
