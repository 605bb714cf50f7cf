"""AGM-based pi and elementary functions at arbitrary precision.

Numbers go in and come out as decimal strings.
"""
from ._core import (
    acos,
    agm,
    atan,
    elliptic_e,
    elliptic_k,
    exp,
    log,
    main,
    nome,
    pi,
    table,
    theta3,
    verify,
)

__all__ = [
    "acos",
    "agm",
    "atan",
    "elliptic_e",
    "elliptic_k",
    "exp",
    "log",
    "main",
    "nome",
    "pi",
    "table",
    "theta3",
    "verify",
]
