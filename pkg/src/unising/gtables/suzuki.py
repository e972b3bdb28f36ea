"""Character table of the Suzuki groups Sz(q), q = 2^(2m+1) >= 8.

With r = 2^(m+1) (so r^2 = 2q) the group order is q^2 (q^2+1)(q-1) and
q^2 + 1 = (q+r+1)(q-r+1).  Classes: the identity, one involution class,
two mutually inverse classes of order 4, and cyclic families from the
three tori of orders q-1 (folded by inversion), q+r+1 and q-r+1 (folded
by the order-4 action x -> x^q).  The exceptional pair w1/w2 carries the
Gaussian-integer entries +-(r/2)i on the order-4 classes; every other
entry is rational or a 2- or 4-term root-of-unity sum.
"""

from __future__ import annotations

import math

from ..cyclo import Cyc, rational, root_of_unity
from ..tables import (
    CharRow,
    CharTable,
    ConjClass,
    FamilyId,
    SUZUKI,
    TableError,
    canonical_quotient,
    sizes_from_column_norms,
)
from .arith import fold, prime_power


def suzuki_order(q: int) -> int:
    return q * q * (q * q + 1) * (q - 1)


def _admissible(q: int) -> int:
    pp = prime_power(q)
    if pp is None or pp[0] != 2 or pp[1] % 2 == 0 or q < 8:
        raise TableError(f"Sz needs q = 2^(2m+1) >= 8, got {q}")
    return pp[1]


def build_suzuki(q: int) -> CharTable:
    k = _admissible(q)
    r = 2 ** ((k + 1) // 2)
    wp, wm = q + r + 1, q - r + 1
    order = suzuki_order(q)

    pi_reps = list(range(1, (q - 2) // 2 + 1))
    sig_orb = canonical_quotient(range(1, wp), lambda b: [b * q % wp])
    tau_orb = canonical_quotient(range(1, wm), lambda c: [c * q % wm])

    descs: list[tuple[str, str, int, tuple]] = [("I", "I", 1, ())]
    descs.append(("s", "s", 2, ()))
    descs.append(("r1", "r1", 4, ()))
    descs.append(("r2", "r2", 4, ()))
    for a in pi_reps:
        descs.append(("pi", f"pi^{a}", (q - 1) // math.gcd(q - 1, a), (a,)))
    for b in sig_orb:
        descs.append(("sig", f"sig^{b}", wp // math.gcd(wp, b), (b,)))
    for c in tau_orb:
        descs.append(("tau", f"tau^{c}", wm // math.gcd(wm, c), (c,)))

    def power_map(kind: str, par: tuple, o: int) -> tuple[str, ...]:
        out = ["I"]
        for j in range(1, o):
            if kind == "s":
                out.append("s")
            elif kind == "r1":
                out.append(["r1", "s", "r2"][j - 1])
            elif kind == "r2":
                out.append(["r2", "s", "r1"][j - 1])
            elif kind == "pi":
                x = par[0] * j % (q - 1)
                out.append("I" if x == 0 else f"pi^{fold(x, q - 1)}")
            elif kind == "sig":
                x = par[0] * j % wp
                out.append("I" if x == 0 else f"sig^{sig_orb.rep(x)}")
            elif kind == "tau":
                x = par[0] * j % wm
                out.append("I" if x == 0 else f"tau^{tau_orb.rep(x)}")
        return tuple(out)

    one = rational(1)
    zero = rational(0)
    E = root_of_unity
    iota = E(4, 1)

    def torus_sum(modulus: int, idx: int, x: int) -> Cyc:
        acc: dict[int, int] = {}
        e = idx * x % modulus
        for _ in range(4):
            acc[e] = acc.get(e, 0) + 1
            e = e * q % modulus
        return Cyc(modulus, acc)

    rows: list[tuple[str, tuple, list[Cyc]]] = []

    def add_row(label: str, par: tuple, fn) -> None:
        rows.append((label, par, [fn(d) for d in descs]))

    add_row("1", (), lambda d: one)
    add_row(
        "st",
        (),
        lambda d: {
            "I": rational(q * q),
            "s": zero,
            "r1": zero,
            "r2": zero,
            "pi": one,
            "sig": -one,
            "tau": -one,
        }[d[0]],
    )
    for sgn, lab in ((1, "w1"), (-1, "w2")):
        half_r = rational(r // 2)

        def wfn(d, sgn=sgn, half_r=half_r):
            kind = d[0]
            if kind == "I":
                return rational(r * (q - 1) // 2)
            if kind == "s":
                return -half_r
            if kind == "r1":
                return half_r * iota * rational(sgn)
            if kind == "r2":
                return -half_r * iota * rational(sgn)
            if kind == "pi":
                return zero
            return one if kind == "sig" else -one

        add_row(lab, (sgn,), wfn)
    for i in pi_reps:

        def xfn(d, i=i):
            kind = d[0]
            if kind == "I":
                return rational(q * q + 1)
            if kind in ("s", "r1", "r2"):
                return one
            if kind == "pi":
                a = d[3][0]
                return E(q - 1, i * a) + E(q - 1, -i * a)
            return zero

        add_row(f"x_{i}", (i,), xfn)
    for n in sig_orb:

        def yfn(d, n=n):
            kind = d[0]
            if kind == "I":
                return rational((q - 1) * wm)
            if kind == "s":
                return rational(r - 1)
            if kind in ("r1", "r2"):
                return -one
            if kind == "sig":
                return -torus_sum(wp, n, d[3][0])
            return zero

        add_row(f"y_{n}", (n,), yfn)
    for n in tau_orb:

        def zfn(d, n=n):
            kind = d[0]
            if kind == "I":
                return rational((q - 1) * wp)
            if kind == "s":
                return rational(-r - 1)
            if kind in ("r1", "r2"):
                return -one
            if kind == "tau":
                return -torus_sum(wm, n, d[3][0])
            return zero

        add_row(f"z_{n}", (n,), zfn)

    if len(rows) != len(descs):
        raise TableError(f"Sz({q}): {len(rows)} rows vs {len(descs)} classes")

    char_rows = [CharRow(lab, tuple(vals), par) for lab, par, vals in rows]

    class _D:
        def __init__(self, label):
            self.label = label

    sizes = sizes_from_column_norms(order, [_D(d[1]) for d in descs], char_rows, f"Sz({q})")
    classes = [
        ConjClass(d[1], d[2], sz, power_map(d[0], d[3], d[2]))
        for d, sz in zip(descs, sizes)
    ]
    return CharTable(FamilyId(SUZUKI, q), order, tuple(classes), tuple(char_rows), name=f"Sz({q})")
