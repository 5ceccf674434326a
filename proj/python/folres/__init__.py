"""Exact residues of codimension-one foliations."""

import json
from fractions import Fraction

from ._core import (
    FolresError,
    Polynomial,
    integrability_defect,
    is_integrable,
    is_invariant,
    parse_polynomial,
)
from ._core import worked_example_job as _worked_example_job
from ._core import run_command as _run_command

__all__ = [
    "FolresError",
    "Polynomial",
    "integrability_defect",
    "is_integrable",
    "is_invariant",
    "parse_polynomial",
    "run",
    "worked_example",
    "worked_example_job",
    "to_fraction",
]


def to_fraction(text):
    """Parse a "p" or "p/q" string into a Fraction."""
    return Fraction(text)


def _job_text(job):
    if job is None:
        return ""
    if isinstance(job, str):
        return job
    return json.dumps(job)


def run(command, job=None):
    """Run a command and return (exit_code, report dict).

    Index values in the report's "indices" list gain a "fraction" entry.
    """
    code, text = _run_command(command, _job_text(job))
    report = json.loads(text)
    for entry in report.get("indices", []):
        entry["fraction"] = to_fraction(entry["value"])
    return code, report


def worked_example():
    return run("paper-example")


def worked_example_job():
    return json.loads(_worked_example_job())
