"""Exact verification of compound determinant identities."""

from ._core import (
    CapabilityError,
    DomainError,
    UsageError,
    enumerate_Z,
    iota,
    partitions_in_box,
    run_cli,
    verify_denominators,
    verify_gram,
    verify_leading_term,
    verify_macdonald,
    verify_main,
    verify_prop12,
    verify_schur_det,
    verify_sylvester,
)

__all__ = [
    "CapabilityError",
    "DomainError",
    "UsageError",
    "enumerate_Z",
    "iota",
    "partitions_in_box",
    "run_cli",
    "verify_denominators",
    "verify_gram",
    "verify_leading_term",
    "verify_macdonald",
    "verify_main",
    "verify_prop12",
    "verify_schur_det",
    "verify_sylvester",
]
