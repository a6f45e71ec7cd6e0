"""Exact orbifold cohomology computations.

Rationals come back as fractions.Fraction; inputs use the same JSON format
as the orbk command line tool.
"""

import json

from ._orbk import (
    OrbkError,
    Quotient,
    canonical_input,
    virtual_dimension,
    wps_euler,
    wps_poincare,
)
from ._orbk import run_command as _run_command

__all__ = [
    "OrbkError",
    "Quotient",
    "canonical_input",
    "run",
    "virtual_dimension",
    "wps_euler",
    "wps_poincare",
]


def run(command, text=None, **options):
    """Run a CLI command in-process. Returns (report dict, exit code)."""
    if "iotas" in options:
        options["iotas"] = [str(x) for x in options["iotas"]]
    if "c1a" in options:
        options["c1a"] = str(options["c1a"])
    output, code = _run_command(command, text, **options)
    return json.loads(output), code
