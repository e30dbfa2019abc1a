# SPDX-License-Identifier: Apache-2.0
"""Exact + numerical bifurcation toolkit for polynomial map families."""

try:
    from ._orbitkit import *  # noqa: F401,F403
    from ._orbitkit import __version__  # noqa: F401
except ImportError:  # in-tree builds keep the extension next to the package
    from _orbitkit import *  # noqa: F401,F403
    from _orbitkit import __version__  # noqa: F401
