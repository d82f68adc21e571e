"""Finite-group models of density, stability and Galois cohomology."""

from ._core import (
    StablelabError,
    basechange_density,
    group,
    h1,
    h1_star_order,
    persistence_verdict,
    prime_pi,
    run_cli,
    scenario,
    scenario_names,
)

__all__ = [
    "StablelabError",
    "basechange_density",
    "group",
    "h1",
    "h1_star_order",
    "persistence_verdict",
    "prime_pi",
    "run_cli",
    "scenario",
    "scenario_names",
]
