"""Parametric character-table builders for the rank-1 families."""

from __future__ import annotations

from ..tables import (
    CharTable,
    FamilyId,
    INGESTED,
    PGL2,
    PGU3,
    PSL2,
    PSU3,
    REE2G2,
    SUZUKI,
    TableError,
)
from .arith import prime_power
from .pgl2 import build_pgl2
from .psl2 import build_psl2
from .pgu3 import build_pgu3, pgu3_order
from .psu3 import build_psu3, psu3_order
from .suzuki import build_suzuki, suzuki_order
from .ree import build_ree, ree_order

__all__ = [
    "build_pgl2", "build_psl2", "build_pgu3", "build_psu3",
    "build_suzuki", "build_ree", "build_table", "admissible_q",
    "pgu3_order", "psu3_order", "suzuki_order", "ree_order",
]

_BUILDERS = {
    PGL2: build_pgl2,
    PSL2: build_psl2,
    PGU3: build_pgu3,
    PSU3: build_psu3,
    SUZUKI: build_suzuki,
    REE2G2: build_ree,
}


def build_table(tag: str, q: int) -> CharTable:
    tag = tag.upper()
    if tag not in _BUILDERS:
        raise TableError(f"no builder for family {tag!r}")
    return _BUILDERS[tag](q)


def admissible_q(tag: str, q: int) -> bool:
    """Whether q is a valid parameter for the family."""
    tag = tag.upper()
    pp = prime_power(q)
    if pp is None:
        return False
    p, k = pp
    if tag == PGL2:
        return q >= 2
    if tag == PSL2:
        return q >= 3 and p != 2
    if tag in (PGU3, PSU3):
        return q >= 2
    if tag == SUZUKI:
        return p == 2 and k % 2 == 1 and q >= 8
    if tag == REE2G2:
        return p == 3 and k % 2 == 1 and q >= 27
    return False
