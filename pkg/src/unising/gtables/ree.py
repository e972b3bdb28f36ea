"""Character table of the small Ree groups 2G2(Q), Q = 3^(2m+1) >= 27.

Internally Q is the stored parameter (the square of the real field
parameter); with t = 3^(m+1) (so t^2 = 3Q) the group order is
Q^3 (Q^3+1)(Q-1) and Q^2 - Q + 1 = (Q-t+1)(Q+t+1).

Classes: nine mixed/unipotent-type classes 1, X, T, T', Y, YT, YT', J,
JT, JT' (T', YT', JT' are the inverse classes), the involution-torus
family (JR)^a of order dividing Q-1, and the three cyclic torus families
V (order v = Q-t+1, fused by the order-6 multiplier t-1), the order Q+1
torus written as S^d / J S^d (d mod u = (Q+1)/4, fused by mu = (t+1)/2
resp. by inversion), and W (order w = Q+t+1, fused by -(t+1)).

The columns for the four torus families are not printed in the source
table; they are pinned by the series structure: each of the four
families of generic-torus characters (r_j, v_n, s*_k, w_m) is supported
on its own torus with negated 2-, or 6-term character-orbit sums there,
the ten remaining rows take the constant values forced by the
decomposition of the trivial-character and quadratic-character twisted
series, and everything is verified by exact row and column orthogonality
(the column norms also yield every centralizer order).

Entries on the printed columns need only Z[zeta_3] (via i*sqrt(3) =
E(3)-E(3)^2 and the identity sqrt(3)*q = 3^(m+1)), plus the +-(Q+1)/4-th
roots of unity and zeta_9 for the torus columns.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..cyclo import Cyc, rational, root_of_unity
from ..tables import (
    CharRow,
    CharTable,
    ConjClass,
    FamilyId,
    REE2G2,
    TableError,
    canonical_quotient,
    sizes_from_column_norms,
)
from .arith import fold, prime_power


def ree_order(q2: int) -> int:
    return q2**3 * (q2**3 + 1) * (q2 - 1)


def _admissible(q2: int) -> int:
    pp = prime_power(q2)
    if pp is None or pp[0] != 3 or pp[1] % 2 == 0 or q2 < 27:
        raise TableError(f"2G2 needs q^2 = 3^(2m+1) >= 27, got {q2}")
    return pp[1]


def build_ree(q2: int) -> CharTable:
    k = _admissible(q2)
    Q = q2
    t = 3 ** ((k + 1) // 2)
    a3 = t // 3  # 3^m; the real parameter is sqrt(3)*a3*...: t = sqrt(3)*q
    v, w, u = Q - t + 1, Q + t + 1, (Q + 1) // 4
    order = ree_order(Q)

    jr_reps = list(range(1, (Q - 3) // 2 + 1))
    v_orb = canonical_quotient(range(1, v), lambda b: [b * (t - 1) % v])
    s_orb = canonical_quotient(range(1, u), lambda d: [d * ((t + 1) // 2) % u])
    js_orb = canonical_quotient(range(1, u), lambda d: [(-d) % u])
    w_orb = canonical_quotient(range(1, w), lambda e: [(-e * (t + 1)) % w])
    mu = (t + 1) // 2

    descs: list[tuple[str, str, int, tuple]] = []
    for lab, o in (("I", 1), ("X", 3), ("T", 3), ("T'", 3), ("Y", 9), ("YT", 9), ("YT'", 9),
                   ("J", 2), ("JT", 6), ("JT'", 6)):
        descs.append((lab, lab, o, ()))
    for a in jr_reps:
        descs.append(("JR", f"JR^{a}", (Q - 1) // math.gcd(Q - 1, a), (a,)))
    for b in v_orb:
        descs.append(("V", f"V^{b}", v // math.gcd(v, b), (b,)))
    for d in s_orb:
        descs.append(("S", f"S^{d}", u // math.gcd(u, d), (d,)))
    for d in js_orb:
        descs.append(("JS", f"JS^{d}", 2 * u // math.gcd(u, d), (d,)))
    for e in w_orb:
        descs.append(("W", f"W^{e}", w // math.gcd(w, e), (e,)))

    fixed_pw = {
        "I": ("I",),
        "X": ("I", "X", "X"),
        "T": ("I", "T", "T'"),
        "T'": ("I", "T'", "T"),
        "Y": ("I", "Y", "Y", "X", "Y", "Y", "X", "Y", "Y"),
        "YT": ("I", "YT", "YT'", "X", "YT", "YT'", "X", "YT", "YT'"),
        "YT'": ("I", "YT'", "YT", "X", "YT'", "YT", "X", "YT'", "YT"),
        "J": ("I", "J"),
        "JT": ("I", "JT", "T'", "J", "T", "JT'"),
        "JT'": ("I", "JT'", "T", "J", "T'", "JT"),
    }

    def power_map(kind: str, par: tuple, o: int) -> tuple[str, ...]:
        if kind in fixed_pw:
            return fixed_pw[kind]
        out = ["I"]
        for j in range(1, o):
            if kind == "JR":
                x = par[0] * j % (Q - 1)
                if x == 0:
                    out.append("I")
                elif x == (Q - 1) // 2:
                    out.append("J")
                else:
                    out.append(f"JR^{fold(x, Q - 1)}")
            elif kind == "V":
                x = par[0] * j % v
                out.append("I" if x == 0 else f"V^{v_orb.rep(x)}")
            elif kind == "S":
                x = par[0] * j % u
                out.append("I" if x == 0 else f"S^{s_orb.rep(x)}")
            elif kind == "JS":
                x = par[0] * j % u
                if j % 2 == 0:
                    out.append("I" if x == 0 else f"S^{s_orb.rep(x)}")
                else:
                    out.append("J" if x == 0 else f"JS^{js_orb.rep(x)}")
            elif kind == "W":
                x = par[0] * j % w
                out.append("I" if x == 0 else f"W^{w_orb.rep(x)}")
        return tuple(out)

    E = root_of_unity
    one = rational(1)
    zero = rational(0)
    isq3 = E(3, 1) - E(3, 2)  # i*sqrt(3), conductor 3
    half = Fraction(1, 2)

    def fr(x) -> Cyc:
        return rational(Fraction(x))

    def orbit_sum(modulus: int, mult: int, reps: int, idx: int, x: int, signs=None) -> Cyc:
        """Sum of sign_kappa * zeta^(idx * mult^kappa * x) over kappa < reps."""
        acc: dict[int, int] = {}
        e = idx * x % modulus
        for i in range(reps):
            s = 1 if signs is None else signs[i]
            acc[e] = acc.get(e, 0) + s
            e = e * mult % modulus
        return Cyc(modulus, acc)

    rows: list[tuple[str, tuple, list[Cyc]]] = []

    def add_row(label, par, fn):
        rows.append((label, par, [fn(d) for d in descs]))

    # the ten fixed rows: values on the ten printed columns, then constant
    # values per torus family: (JR, V, S, JS, W)
    def fixed_row(printed: dict, tor: dict):
        def fn(d):
            kind = d[0]
            if kind in printed:
                return printed[kind]
            return tor[kind]

        return fn

    add_row("1", (), lambda d: one)

    d2 = t * (Q - 1) * w // 6
    add_row(
        "e1",
        (),
        fixed_row(
            {
                "I": rational(d2),
                "X": fr(Fraction(-(3 * Q + t), 6)),
                "T": fr(-Fraction(t, 6)) + fr(Fraction(Q, 6)) * isq3,
                "T'": fr(-Fraction(t, 6)) - fr(Fraction(Q, 6)) * isq3,
                "Y": rational(a3),
                "YT": fr(-Fraction(t, 6)) * (one + isq3),
                "YT'": fr(-Fraction(t, 6)) * (one - isq3),
                "J": fr(Fraction(-(Q - 1), 2)),
                "JT": fr(half) - fr(Fraction(a3, 2)) * isq3,
                "JT'": fr(half) + fr(Fraction(a3, 2)) * isq3,
            },
            {"JR": zero, "V": -one, "S": one, "JS": one, "W": zero},
        ),
    )
    d3 = t * (Q - 1) * v // 6
    add_row(
        "e2",
        (),
        fixed_row(
            {
                "I": rational(d3),
                "X": fr(Fraction(3 * Q - t, 6)),
                "T": fr(-Fraction(t, 6)) + fr(Fraction(Q, 6)) * isq3,
                "T'": fr(-Fraction(t, 6)) - fr(Fraction(Q, 6)) * isq3,
                "Y": rational(a3),
                "YT": fr(-Fraction(t, 6)) * (one + isq3),
                "YT'": fr(-Fraction(t, 6)) * (one - isq3),
                "J": fr(Fraction(Q - 1, 2)),
                "JT": fr(-half) + fr(Fraction(a3, 2)) * isq3,
                "JT'": fr(-half) - fr(Fraction(a3, 2)) * isq3,
            },
            {"JR": zero, "V": zero, "S": -one, "JS": -one, "W": one},
        ),
    )
    # conjugate partners e1c, e2c
    for lab, src_idx in (("e1c", 1), ("e2c", 2)):
        vals = [val.conj() for val in rows[src_idx][2]]
        rows.append((lab, (), vals))

    d6 = t * (Q * Q - 1) // 3
    add_row(
        "e3",
        (),
        fixed_row(
            {
                "I": rational(d6),
                "X": rational(-a3),
                "T": rational(-a3) + fr(Fraction(Q, 3)) * isq3,
                "T'": rational(-a3) - fr(Fraction(Q, 3)) * isq3,
                "Y": rational(-a3),
                "YT": fr(Fraction(t, 6)) * (one + isq3),
                "YT'": fr(Fraction(t, 6)) * (one - isq3),
                "J": zero,
                "JT": zero,
                "JT'": zero,
            },
            {"JR": zero, "V": -one, "S": zero, "JS": zero, "W": one},
        ),
    )
    rows.append(("e3c", (), [val.conj() for val in rows[-1][2]]))

    add_row(
        "st",
        (),
        fixed_row(
            {
                "I": rational(Q**3),
                "X": zero, "T": zero, "T'": zero, "Y": zero, "YT": zero, "YT'": zero,
                "J": rational(Q),
                "JT": zero, "JT'": zero,
            },
            {"JR": one, "V": -one, "S": -one, "JS": -one, "W": -one},
        ),
    )

    def u1_fn(d):
        kind = d[0]
        table = {
            "I": rational(Q * Q - Q + 1),
            "X": rational(-(Q - 1)),
            "T": one, "T'": one, "Y": one, "YT": one, "YT'": one,
            "J": -one, "JT": -one, "JT'": -one,
            "V": zero, "S": rational(3), "JS": -one, "W": zero,
        }
        if kind == "JR":
            return one if d[3][0] % 2 == 0 else -one
        return table[kind]

    add_row("u1", (), u1_fn)

    def u2_fn(d):
        kind = d[0]
        table = {
            "I": rational(Q * (Q * Q - Q + 1)),
            "X": rational(Q),
            "T": zero, "T'": zero, "Y": zero, "YT": zero, "YT'": zero,
            "J": rational(-Q), "JT": zero, "JT'": zero,
            "V": zero, "S": rational(-3), "JS": one, "W": zero,
        }
        if kind == "JR":
            return one if d[3][0] % 2 == 0 else -one
        return table[kind]

    add_row("u2", (), u2_fn)

    for j in jr_reps:

        def rj(d, j=j):
            kind = d[0]
            if kind == "I":
                return rational(Q**3 + 1)
            if kind in ("X", "T", "T'", "Y", "YT", "YT'"):
                return one
            if kind == "J":
                return rational((Q + 1) * (-1) ** j)
            if kind in ("JT", "JT'"):
                return one if j % 2 == 0 else -one
            if kind == "JR":
                a = d[3][0]
                return E(Q - 1, j * a) + E(Q - 1, -j * a)
            return zero

        add_row(f"r_{j}", (j,), rj)

    for n in v_orb:

        def vn(d, n=n):
            kind = d[0]
            if kind == "I":
                return rational((Q * Q - 1) * w)
            if kind == "X":
                return rational(-w)
            if kind in ("T", "T'"):
                return rational(-(t + 1))
            if kind in ("Y", "YT", "YT'"):
                return -one
            if kind == "V":
                return -orbit_sum(v, t - 1, 6, n, d[3][0])
            return zero

        add_row(f"v_{n}", (n,), vn)

    def s_fixed(ell: int):
        jval = rational((1 + 2 * (-1) ** ell) * (Q - 1))
        jtval = rational(-(1 + 2 * (-1) ** ell))
        return {
            "I": rational((Q - 1) * (Q * Q - Q + 1)),
            "X": rational(2 * Q - 1),
            "T": -one, "T'": -one, "Y": -one, "YT": -one, "YT'": -one,
            "J": jval, "JT": jtval, "JT'": jtval,
            "JR": zero, "V": zero, "W": zero,
        }

    for kk in s_orb:
        tab = s_fixed(0)

        def s0(d, kk=kk, tab=tab):
            kind = d[0]
            if kind in ("S", "JS"):
                return -orbit_sum(u, mu, 6, kk, d[3][0])
            return tab[kind]

        add_row(f"s0_{kk}", (0, kk), s0)

    js_signs = (1, -1, -1, 1, -1, -1)  # +-k terms keep sign +, mu and mu^2 twists -
    for kk in js_orb:
        tab = s_fixed(1)

        def s1(d, kk=kk, tab=tab):
            kind = d[0]
            if kind == "S":
                return -orbit_sum(u, mu, 6, kk, d[3][0])
            if kind == "JS":
                return -orbit_sum(u, mu, 6, kk, d[3][0], signs=js_signs)
            return tab[kind]

        add_row(f"s1_{kk}", (1, kk), s1)

    for m in w_orb:

        def wm(d, m=m):
            kind = d[0]
            if kind == "I":
                return rational((Q * Q - 1) * v)
            if kind == "X":
                return rational(-v)
            if kind in ("T", "T'"):
                return rational(t - 1)
            if kind in ("Y", "YT", "YT'"):
                return -one
            if kind == "W":
                return -orbit_sum(w, (-(t + 1)) % w, 6, m, d[3][0])
            return zero

        add_row(f"w_{m}", (m,), wm)

    if len(rows) != len(descs):
        raise TableError(f"2G2({Q}): {len(rows)} rows vs {len(descs)} classes")

    char_rows = [CharRow(lab, tuple(vals), par) for lab, par, vals in rows]

    class _D:
        def __init__(self, label):
            self.label = label

    sizes = sizes_from_column_norms(order, [_D(d[1]) for d in descs], char_rows, f"2G2({Q})")
    classes = [
        ConjClass(d[1], d[2], sz, power_map(d[0], d[3], d[2]))
        for d, sz in zip(descs, sizes)
    ]
    return CharTable(FamilyId(REE2G2, Q), order, tuple(classes), tuple(char_rows), name=f"2G2({Q})")
