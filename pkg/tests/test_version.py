# -*- coding: utf-8 -*-

import subprocess

from krt_toolkit.version import pkg_name, pkg_version


def test_call_krt_toolkit_version():
    """Checks that the package is registered and visible in the meta data."""
    output_text = subprocess.check_output(
        [pkg_name, '--version'],
        stderr=subprocess.STDOUT,
        universal_newlines=True,
        encoding='utf8',
    )

    assert pkg_version in output_text
