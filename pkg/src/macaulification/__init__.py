"""Betti tables and h-vectors turned into codimension-two ACM data by basic double links.

Everything is integer arithmetic on twists and h-vectors; no ideals are
computed.  The command line front end lives in ``macaulification.cli``.
"""
from __future__ import annotations

from .errors import DefectError, ValidationError
from .betti import *  # noqa: F401,F403
from .hilbert import *  # noqa: F401,F403
from .bdl import *  # noqa: F401,F403
from .algorithms import *  # noqa: F401,F403
from .liaison import *  # noqa: F401,F403
from .curves import *  # noqa: F401,F403
from .io import *  # noqa: F401,F403
from . import betti, hilbert, bdl, algorithms, liaison, curves, io, fixtures

__version__ = "0.1.0"
