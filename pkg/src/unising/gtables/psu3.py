"""Character table of PSU3(q).

For gcd(q+1, 3) = 1 the group coincides with PGU3(q).  Otherwise PSU3
is the index-3 kernel of the determinant-cube map: its classes are the
PGU3 classes whose det exponent vanishes mod 3, with the regular
unipotent class B split into B_0, B_1, B_2, and its characters are the
twist-orbit representatives of the PGU3 rows together with the three
characters of degree (q-1)(q^2-q+1)/3 into which the twist-stable row of
the E-series splits.
"""

from __future__ import annotations

import math

from ..cyclo import Cyc, rational, root_of_unity
from ..tables import CharRow, CharTable, ConjClass, FamilyId, PSU3, TableError
from .arith import prime_power
from .pgu3 import (
    _Cls,
    _Resolver,
    _class_descriptors,
    _power_map,
    _row_functions,
    build_pgu3,
    f_orbits,
    g_orbits,
    pgu3_order,
    sizes_from_column_norms,
    t_orbits,
)


def psu3_order(q: int) -> int:
    return pgu3_order(q) // math.gcd(3, q + 1)


def build_psu3(q: int) -> CharTable:
    pp = prime_power(q)
    if pp is None:
        raise TableError(f"PSU3 needs a prime power q >= 2, got {q}")
    p, _k = pp
    Q1 = q + 1
    if Q1 % 3:
        g = build_pgu3(q)
        return CharTable(FamilyId(PSU3, q), g.group_order, g.classes, g.chars, name=f"PSU3({q})")

    N = q * q - q + 1
    c3 = Q1 // 3
    order = psu3_order(q)
    rs = _Resolver(q)

    # classes: det-exponent 0 mod 3, B split in three
    descs: list[_Cls] = []
    for d in _class_descriptors(q):
        if d.detexp % 3:
            continue
        if d.kind == "B":
            for f in range(3):
                descs.append(_Cls("B", f"B_{f}", d.order, 0, (f,)))
        else:
            descs.append(d)

    # rows: twist-orbit representatives of PGU3 rows, then the chi_n triple
    pgu_rows = {lab: fn for lab, _par, fn in _row_functions(q)}
    fmap, gmap = f_orbits(q), g_orbits(q)
    M = q * q - 1

    def h_rep(h: int) -> int:
        return min((h + k * c3) % Q1 for k in range(3))

    def t_rep(t: tuple[int, int, int]) -> tuple[int, int, int]:
        cands = []
        for k in range(3):
            cands.append(tuple(sorted(((t[0] + k * c3) % Q1, (t[1] + k * c3) % Q1, (t[2] + k * c3) % Q1))))
        return min(cands)

    def i_rep(i: int) -> int:
        return min(fmap.rep((i + k * (M // 3)) % M) for k in range(3))

    def j_rep(j: int) -> int:
        return min(gmap.rep((j + k * (N // 3)) % N) for k in range(3))

    picked: list[tuple[str, tuple, object]] = []
    picked.append(("1", (), pgu_rows["lin"]))
    picked.append(("q2q", (), pgu_rows["q2q"]))
    picked.append(("st", (), pgu_rows["st"]))
    h_range = [h for h in range(1, q + 1) if h % c3 != 0]
    for h in sorted({h_rep(h) for h in h_range}):
        picked.append((f"h1_{h}", (h,), pgu_rows[f"h1_{h}"]))
    for h in sorted({h_rep(h) for h in h_range}):
        picked.append((f"h2_{h}", (h,), pgu_rows[f"h2_{h}"]))
    special_t = tuple(sorted((0, c3, 2 * c3)))
    for t in sorted({t_rep(t) for t in t_orbits(q) if t_rep(t) != special_t}):
        picked.append((f"e({t[0]},{t[1]})", t, pgu_rows[f"e({t[0]},{t[1]})"]))
    for i in sorted({i_rep(i) for i in fmap}):
        picked.append((f"f_{i}", (i,), pgu_rows[f"f_{i}"]))
    for j in sorted({j_rep(j) for j in gmap}):
        picked.append((f"g_{j}", (j,), pgu_rows[f"g_{j}"]))

    one = rational(1)
    xi = lambda e: root_of_unity(3, e)

    def chi_n_row(n: int):
        def val(d: _Cls) -> Cyc:
            if d.kind == "I":
                return rational((q - 1) * N // 3)
            if d.kind == "A":
                return rational((2 * q - 1) // 3)
            if d.kind == "B":
                f = d.par[0]
                return rational((q if f == n else 0) - Q1 // 3)
            if d.kind == "C":
                return rational(q - 1)
            if d.kind == "D":
                return -one
            if d.kind == "E":
                x, y = d.par
                return -(xi(x - y) + xi(y - x))
            return rational(0)  # F, G

        return val

    for n in range(3):
        picked.append((f"n_{n}", (n,), chi_n_row(n)))

    if len(picked) != len(descs):
        raise TableError(f"PSU3({q}): {len(picked)} rows vs {len(descs)} classes")

    char_rows = [CharRow(lab, tuple(fn(d) for d in descs), par) for lab, par, fn in picked]
    sizes = sizes_from_column_norms(order, descs, char_rows, f"PSU3({q})")

    classes = []
    for d, sz in zip(descs, sizes):
        if d.kind == "B":
            pw = tuple(
                "I" if j == 0 else ("A" if p == 2 and j == 2 else d.label)
                for j in range(d.order)
            )
            classes.append(ConjClass(d.label, d.order, sz, pw))
        else:
            classes.append(ConjClass(d.label, d.order, sz, _power_map(d, rs)))

    return CharTable(FamilyId(PSU3, q), order, tuple(classes), tuple(char_rows), name=f"PSU3({q})")
