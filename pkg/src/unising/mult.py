"""Eigenvalue multiplicities from character values and power maps.

For an element g of order m and a character chi, the multiplicity of
zeta_m^i as an eigenvalue of a representing matrix of g is

    (1/m) * sum_{j=0}^{m-1} chi(g^j) * zeta_m^(-i*j),

computed here with exact cyclotomic arithmetic through the class power
map.  Every result is asserted to be a nonnegative rational integer;
a failure means corrupted table data (bad value or bad power map) and
raises immediately, naming the offending character and class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclo import Cyc
from .tables import CharTable, TableError


class MultiplicityError(TableError):
    """A multiplicity came out non-integral or negative."""


@dataclass
class MultVector:
    char_label: str
    entries: dict[str, int]
    full_spectrum: dict[tuple[str, int], int] | None = None


def _power_values(table: CharTable, char_label: str, class_label: str) -> list[Cyc]:
    cls = table.conj_class(class_label)
    row = table.char(char_label)
    return [row.values[table.class_index(lbl)] for lbl in cls.power_to]


def _as_mult(val: Cyc, m: int, char_label: str, class_label: str, i: int) -> int:
    r = val.as_rational()
    if r is None or (r % m) != 0 or r < 0:
        raise MultiplicityError(
            f"multiplicity of eigenvalue {i} at ({char_label}, {class_label}) "
            f"is {val}/{m}, not a nonnegative integer"
        )
    return int(r // m)


def _dft_value(vals: list[Cyc], m: int, i: int) -> Cyc:
    """Exact sum over j of vals[j] * zeta_m^(-i*j), accumulated raw and
    canonicalized once."""
    L = m
    for v in vals:
        L = L * v.n // math.gcd(L, v.n)
    step = L // m
    acc: dict[int, object] = {}
    for j, v in enumerate(vals):
        if not v.c:
            continue
        off = (-i * j) % m * step
        k = L // v.n
        for e, c in v.c.items():
            key = (e * k + off) % L
            acc[key] = acc.get(key, 0) + c
    return Cyc(L, acc)


def eig_mult(table: CharTable, char_label: str, class_label: str, i: int) -> int:
    """Algebraic multiplicity of zeta_m^i as an eigenvalue at this class."""
    cls = table.conj_class(class_label)
    vals = _power_values(table, char_label, class_label)
    return _as_mult(_dft_value(vals, cls.order, i), cls.order, char_label, class_label, i)


def eig1_mult(table: CharTable, char_label: str, class_label: str) -> int:
    """Multiplicity of the eigenvalue 1: (1/m) sum_j chi(g^j)."""
    return eig_mult(table, char_label, class_label, 0)


def spectrum(table: CharTable, char_label: str, class_label: str) -> list[int]:
    """All m eigenvalue multiplicities at one class, reusing the m power
    values (one pass over the powers per eigenvalue index)."""
    cls = table.conj_class(class_label)
    m = cls.order
    vals = _power_values(table, char_label, class_label)
    out = [
        _as_mult(_dft_value(vals, m, i), m, char_label, class_label, i) for i in range(m)
    ]
    deg = table.char(char_label).degree
    if sum(out) != deg:
        raise MultiplicityError(
            f"spectrum at ({char_label}, {class_label}) sums to {sum(out)}, degree is {deg}"
        )
    return out


def mult_vector(table: CharTable, char_label: str,*, with_spectrum: bool = False) -> MultVector:
    entries: dict[str, int] = {}
    full: dict[tuple[str, int], int] | None = {} if with_spectrum else None
    for cls in table.classes:
        if with_spectrum:
            spec = spectrum(table, char_label, cls.label)
            entries[cls.label] = spec[0]
            for i, mult in enumerate(spec):
                full[(cls.label, i)] = mult
        else:
            entries[cls.label] = eig1_mult(table, char_label, cls.label)
    return MultVector(char_label, entries, full)
