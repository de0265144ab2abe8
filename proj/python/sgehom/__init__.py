"""Equivalent strain-gradient constants of dilute composites.

Configs and reports are plain dicts mirroring the CLI's JSON files.
"""

import json

from . import _core
from ._core import ConfigError, DomainError

__all__ = [
    "ConfigError",
    "DomainError",
    "run_case",
    "run_check",
    "run_sweep",
    "reproduce_tables",
    "rve_query",
    "pd_threshold",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def run_case(config, symmetry_tol=1e-10):
    return json.loads(_core.run_case(_dump(config), symmetry_tol))


def run_check(config, symmetry_tol=1e-10):
    return json.loads(_core.run_check(_dump(config), symmetry_tol))


def run_sweep(config):
    """Returns (csv_text, error); error names the first failing grid point."""
    return _core.run_sweep(_dump(config))


def reproduce_tables(tolerance=5e-3):
    return json.loads(_core.reproduce_tables(tolerance))


def rve_query(shape, reference=None, mc_samples=0, seed=0):
    ref = None if reference is None else _dump(reference)
    return json.loads(_core.rve_query(_dump(shape), ref, mc_samples, seed))


def pd_threshold(nu1, nu2, regime="plane_strain"):
    return _core.pd_threshold(nu1, nu2, regime)
