"""Seeded generators and the registry of executable identity checks."""

from .checks import ALIASES, REGISTRY, CheckReport, resolve, run_all, run_check
from .generators import (
    GenParams,
    hashed_table_cochain,
    rand_chain,
    rand_cocycle,
    rand_free_tensor,
    rand_monomial,
    rand_tensor,
    trial_rng,
)

__all__ = [
    "ALIASES",
    "REGISTRY",
    "CheckReport",
    "GenParams",
    "hashed_table_cochain",
    "rand_chain",
    "rand_cocycle",
    "rand_free_tensor",
    "rand_monomial",
    "rand_tensor",
    "resolve",
    "run_all",
    "run_check",
    "trial_rng",
]
