# -*- coding: utf-8 -*-

from krt_toolkit.cli.main import cli

if __name__ == '__main__':  # pragma: no cover
    cli(prog_name='krt-toolkit')
