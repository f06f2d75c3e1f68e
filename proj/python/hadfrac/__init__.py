"""Generalized proportional Hadamard fractional integrals (native module)."""

from ._hadfrac import *  # noqa: F401,F403
