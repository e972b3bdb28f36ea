"""Core character-table records and their validation.

A CharTable bundles conjugacy-class data (orders, sizes, full power
maps) with character rows whose entries are exact cyclotomic numbers.
Validation checks the four defining invariants: square shape, row
orthogonality, column orthogonality and sum of squared degrees equal to
the group order, plus power-map well-formedness.  All checks are exact;
there are no tolerances anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from .cyclo import Cyc, rational

PGL2 = "PGL2"
PSL2 = "PSL2"
PGU3 = "PGU3"
PSU3 = "PSU3"
SUZUKI = "SUZUKI"
REE2G2 = "REE2G2"
INGESTED = "INGESTED"

FAMILY_TAGS = (PGL2, PSL2, PGU3, PSU3, SUZUKI, REE2G2, INGESTED)


class TableError(ValueError):
    """A structural or numerical inconsistency in a character table."""


@dataclass(frozen=True)
class FamilyId:
    tag: str
    q: int  # for REE2G2 this stores q^2; for INGESTED it is 0

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise TableError(f"unknown family tag {self.tag!r}")

    def __str__(self):
        return self.tag if self.tag == INGESTED else f"{self.tag}({self.q})"


@dataclass(frozen=True)
class ConjClass:
    label: str
    order: int
    size: int
    power_to: tuple[str, ...]  # index j in 0..order-1 -> label of class of g^j

    def __post_init__(self):
        if self.order < 1 or self.size < 1:
            raise TableError(f"class {self.label}: bad order/size")
        if len(self.power_to) != self.order:
            raise TableError(f"class {self.label}: power map has {len(self.power_to)} entries, order {self.order}")


@dataclass(frozen=True)
class CharRow:
    label: str
    values: tuple[Cyc, ...]
    param: tuple | None = None

    @property
    def degree(self) -> int:
        d = self.values[0].as_rational()
        return int(d) if d is not None and d.denominator == 1 else -1


@dataclass
class CharTable:
    family: FamilyId
    group_order: int
    classes: tuple[ConjClass, ...]
    chars: tuple[CharRow, ...]
    name: str = ""
    _cindex: dict = field(default_factory=dict, repr=False)
    _xindex: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.classes = tuple(self.classes)
        self.chars = tuple(self.chars)
        self._cindex = {c.label: i for i, c in enumerate(self.classes)}
        self._xindex = {x.label: i for i, x in enumerate(self.chars)}
        if len(self._cindex) != len(self.classes):
            raise TableError("duplicate class labels")
        if len(self._xindex) != len(self.chars):
            raise TableError("duplicate character labels")
        if self.classes[0].order != 1:
            raise TableError("first class must be the identity")

    # -- lookups -------------------------------------------------------

    @property
    def identity_label(self) -> str:
        return self.classes[0].label

    def class_index(self, label: str) -> int:
        i = self._cindex.get(label)
        if i is None:
            i = self._cindex.get(label + "^1")
        if i is None:
            raise KeyError(f"no class {label!r} in {self.name or self.family}")
        return i

    def char_index(self, label: str) -> int:
        i = self._xindex.get(label)
        if i is None:
            i = self._xindex.get(label + "_1")
        if i is None:
            raise KeyError(f"no character {label!r} in {self.name or self.family}")
        return i

    def conj_class(self, label: str) -> ConjClass:
        return self.classes[self.class_index(label)]

    def char(self, label: str) -> CharRow:
        return self.chars[self.char_index(label)]

    def value(self, char_label: str, class_label: str) -> Cyc:
        return self.chars[self.char_index(char_label)].values[self.class_index(class_label)]

    def centralizer_order(self, class_label: str) -> int:
        c = self.conj_class(class_label)
        return self.group_order // c.size

    # -- validation ------------------------------------------------------

    def validate(self, *, orthogonality: bool = True, power_maps: bool = True) -> None:
        n = len(self.classes)
        if len(self.chars) != n:
            raise TableError(f"{self}: {len(self.chars)} characters vs {n} classes")
        if sum(c.size for c in self.classes) != self.group_order:
            raise TableError(f"{self}: class sizes do not sum to the group order")
        for c in self.classes:
            if self.group_order % c.size:
                raise TableError(f"{self}: size of {c.label} does not divide the group order")
        degsq = 0
        for x in self.chars:
            if len(x.values) != n:
                raise TableError(f"{self}: row {x.label} has wrong length")
            d = x.degree
            if d < 1:
                raise TableError(f"{self}: degree of {x.label} is not a positive integer")
            degsq += d * d
            for c, v in zip(self.classes, x.values):
                if any(not isinstance(co, int) for co in v.c.values()):
                    raise TableError(f"{self}: value of {x.label} at {c.label} is not an algebraic integer")
        if degsq != self.group_order:
            raise TableError(f"{self}: sum of squared degrees {degsq} != group order {self.group_order}")
        if power_maps:
            self._validate_power_maps()
        if orthogonality:
            self._validate_orthogonality()

    def _validate_power_maps(self) -> None:
        for c in self.classes:
            if c.power_to[0] != self.identity_label:
                raise TableError(f"power map of {c.label}: g^0 must be the identity class")
            if c.order > 1 and c.power_to[1] != c.label:
                raise TableError(f"power map of {c.label}: g^1 must be the class itself")
            for j, lbl in enumerate(c.power_to):
                d = self.conj_class(lbl)
                if d.order != c.order // math.gcd(c.order, j if j else c.order):
                    raise TableError(
                        f"power map of {c.label}: g^{j} landed in {lbl} of order {d.order}, "
                        f"expected order {c.order // math.gcd(c.order, j if j else c.order)}"
                    )
            # two-step composition agrees with direct lookup
            for j in range(c.order):
                d = self.conj_class(c.power_to[j])
                for k in range(d.order):
                    if d.power_to[k] != c.power_to[j * k % c.order]:
                        raise TableError(
                            f"power map of {c.label}: (g^{j})^{k} inconsistent"
                        )

    def _validate_orthogonality(self) -> None:
        n = len(self.classes)
        rows = [_lift_row(x.values) for x in self.chars]
        sizes = [c.size for c in self.classes]
        for i in range(n):
            mi, ci = rows[i]
            for j in range(i, n):
                mj, cj = rows[j]
                val = _dot(ci, mi, cj, mj, sizes)
                want = rational(self.group_order if i == j else 0)
                if val != want:
                    raise TableError(
                        f"{self}: row orthogonality fails for ({self.chars[i].label}, {self.chars[j].label})"
                    )
        cols = []
        for k in range(n):
            cols.append(_lift_row(tuple(x.values[k] for x in self.chars)))
        ones = [1] * n
        for a in range(n):
            ma, ca = cols[a]
            for b in range(a, n):
                mb, cb = cols[b]
                val = _dot(ca, ma, cb, mb, ones)
                if a == b:
                    want = rational(self.group_order // self.classes[a].size)
                else:
                    want = rational(0)
                if val != want:
                    raise TableError(
                        f"{self}: column orthogonality fails for ({self.classes[a].label}, {self.classes[b].label})"
                    )

    def __str__(self):
        return self.name or str(self.family)


def _lift_row(values: Sequence[Cyc]) -> tuple[int, list[dict[int, object]]]:
    """Common-conductor view of a row for fast exact inner products."""
    m = 1
    for v in values:
        m = m * v.n // math.gcd(m, v.n)
    lifted = []
    for v in values:
        k = m // v.n
        lifted.append({e * k % m: c for e, c in v.c.items()})
    return m, lifted


def _dot(ca, ma, cb, mb, weights) -> Cyc:
    """Exact sum over positions of w * a * conj(b)."""
    m = ma * mb // math.gcd(ma, mb)
    ka, kb = m // ma, m // mb
    acc: dict[int, object] = {}
    for w, da, db in zip(weights, ca, cb):
        if not da or not db:
            continue
        for ea, va in da.items():
            wva = w * va
            ea_ = ea * ka
            for eb, vb in db.items():
                e = (ea_ - eb * kb) % m
                acc[e] = acc.get(e, 0) + wva * vb
    return Cyc(m, acc)


def sizes_from_column_norms(order: int, descs, char_rows, name: str) -> list[int]:
    """Class sizes |G|/|C(g)| with |C(g)| the exact column norm.

    Valid for any genuine character table; the resulting sizes are
    re-checked by the full validator (row orthogonality, power maps) and,
    for small groups, by the brute-force oracle.
    """
    sizes = []
    for idx, d in enumerate(descs):
        norm = rational(0)
        for row in char_rows:
            v = row.values[idx]
            norm = norm + v * v.conj()
        cn = norm.as_rational()
        if cn is None or cn.denominator != 1 or order % int(cn):
            raise TableError(f"{name}: bad centralizer order at {d.label}: {norm}")
        sizes.append(order // int(cn))
    return sizes


def inner_product_rows(table: CharTable, lab1: str, lab2: str) -> Fraction:
    """Normalized inner product <chi, psi> = (1/|G|) sum size * chi * conj(psi).

    Raises if the result is not rational (it always is for full rows of a
    genuine table paired with themselves or rational combinations).
    """
    x = table.char(lab1).values
    y = table.char(lab2).values
    m1, c1 = _lift_row(x)
    m2, c2 = _lift_row(y)
    val = _dot(c1, m1, c2, m2, [c.size for c in table.classes])
    r = val.as_rational()
    if r is None:
        raise TableError("non-rational inner product")
    return r / table.group_order


# -- canonical quotient sets ------------------------------------------


def canonical_quotient(
    items: Iterable[Hashable],
    images: Callable[[Hashable], Iterable[Hashable]],
) -> "OrbitMap":
    """Partition a finite index set by the equivalence generated by `images`.

    `images(x)` must list elements equivalent to x (generators are
    enough; the closure is computed here).  Every image must stay inside
    the item set, and the closure must be symmetric; violations raise
    TableError.  Canonical representatives are the minima of each orbit
    under the natural order, and are returned sorted.
    """
    itemset = set(items)
    seen: dict[Hashable, int] = {}
    orbits: list[set] = []
    for x in itemset:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for z in images(y):
                if z not in itemset:
                    raise TableError(f"quotient relation leaves the index set: {y!r} -> {z!r}")
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        idx = len(orbits)
        orbits.append(orbit)
        for y in orbit:
            if y in seen:
                raise TableError("quotient relation produced overlapping orbits")
            seen[y] = idx
    # symmetry check: x in closure(y) followed y in closure(x) by construction
    for x in itemset:
        for z in images(x):
            if seen[z] != seen[x]:
                raise TableError(f"quotient relation not symmetric/transitive at {x!r}")
    return OrbitMap(orbits)


class OrbitMap:
    """Orbits with canonical (minimal) representatives."""

    def __init__(self, orbits: list[set]):
        self._rep: dict[Hashable, Hashable] = {}
        reps = []
        for orbit in orbits:
            r = min(orbit)
            reps.append(r)
            for x in orbit:
                self._rep[x] = r
        self.reps: list = sorted(reps)

    def rep(self, x: Hashable) -> Hashable:
        return self._rep[x]

    def orbit_size(self, x: Hashable) -> int:
        r = self._rep[x]
        return sum(1 for v in self._rep.values() if v == r)

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)
