"""Positroid cells, boundary complexes and localized integrands of admissible diagrams."""

from fractions import Fraction

from ._core import (
    DEFAULT_SEED,
    boundary_census,
    cancellation,
    catalog_size,
    cell,
    diagram_name,
    enumerate,
    homology,
    is_admissible,
    kernel_vanishes,
    le_bases,
    named_diagram,
    r_denominator,
    render_le,
    write_report,
)
from ._core import integrand as _integrand


def integrand(diagram: str, seed: int = DEFAULT_SEED) -> Fraction:
    """Exact value of the localized integrand on seeded positive data."""
    return Fraction(_integrand(diagram, seed))


__all__ = [
    "DEFAULT_SEED",
    "boundary_census",
    "cancellation",
    "catalog_size",
    "cell",
    "diagram_name",
    "enumerate",
    "homology",
    "integrand",
    "is_admissible",
    "kernel_vanishes",
    "le_bases",
    "named_diagram",
    "r_denominator",
    "render_le",
    "write_report",
]
