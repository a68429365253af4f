# -*- coding: utf-8 -*-

from importlib import metadata

#: Name of the distribution, also the name of the command.
pkg_name = 'krt-toolkit'


def _installed_version(dist_name: str) -> str:  # pragma: no cover
    """Version of the installed distribution, empty for a bare source tree."""
    try:
        return metadata.version(dist_name)
    except metadata.PackageNotFoundError:
        return ''


#: We store the version number inside the `pyproject.toml`:
pkg_version = _installed_version(pkg_name)
