"""Exact fate of a light ray in an octagonal mirror maze.

Environments are passed as text in the `segment` / `ray` / `bbox` line
format. IET pieces are (lo, hi, offset) triples of Python ints.
"""

import json

from ._octomaze import (
    OctomazeError,
    complete,
    generate,
    iterate,
    normalize,
    render_svg,
    solve_partial,
    subdiv_count,
)
from . import _octomaze

__all__ = [
    "OctomazeError",
    "complete",
    "error_code",
    "generate",
    "iterate",
    "normalize",
    "render_svg",
    "simulate",
    "solve_partial",
    "subdiv_count",
    "trace",
]


def trace(text, engine="auto", max_naive_steps=None):
    """Fate report of the ray as a dict (numbers are decimal strings)."""
    return json.loads(_octomaze.trace_report(text, engine, max_naive_steps))


def simulate(text, max_steps):
    """Same report, from the one-bounce-at-a-time simulator."""
    return json.loads(_octomaze.simulate_report(text, max_steps))


def error_code(err):
    return str(err).split(":", 1)[0]
