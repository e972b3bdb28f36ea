"""Character table of PSL2(q) for odd prime powers q.

Two shapes depending on q mod 4: the half-degree pair lives at degree
(q+1)/2 with sqrt(q) entries (q = 1 mod 4) or at degree (q-1)/2 with
sqrt(-q) entries (q = 3 mod 4).  The two unipotent classes Zc and Zd
are swapped by powering with a field non-square; for q = p^(even) every
nontrivial power of Zc stays in its own class.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..cyclo import Cyc, rational, root_of_unity, sqrt_q
from ..tables import CharRow, CharTable, ConjClass, FamilyId, PSL2, TableError
from .arith import fold, is_square_mod, prime_power


def build_psl2(q: int) -> CharTable:
    pp = prime_power(q)
    if pp is None or q % 2 == 0:
        raise TableError(
            f"PSL2 needs an odd prime power (even q is PGL2(q) = SL2(q)); got {q}"
        )
    if q < 3:
        raise TableError(f"PSL2 needs q >= 3, got {q}")
    p, k = pp
    order = q * (q - 1) * (q + 1) // 2
    A = (q - 1) // 2  # order of the split torus image
    B = (q + 1) // 2

    a_range = range(1, A // 2 + 1) if A % 2 == 0 else range(1, (A - 1) // 2 + 1)
    b_range = range(1, B // 2 + 1) if B % 2 == 0 else range(1, (B - 1) // 2 + 1)

    def a_label(x):
        return f"a^{fold(x, A)}"

    def b_label(x):
        return f"b^{fold(x, B)}"

    classes = [ConjClass("ZI", 1, 1, ("ZI",))]
    usize = (q * q - 1) // 2
    for lbl, other in (("Zc", "Zd"), ("Zd", "Zc")):
        pw = ["ZI"]
        for h in range(1, p):
            if k % 2 == 0 or is_square_mod(h, p):
                pw.append(lbl)
            else:
                pw.append(other)
        classes.append(ConjClass(lbl, p, usize, tuple(pw)))
    for ell in a_range:
        g = math.gcd(ell, A)
        o = A // g
        size = q * (q + 1) if 2 * ell != A else q * (q + 1) // 2
        pw = tuple("ZI" if ell * j % A == 0 else a_label(ell * j) for j in range(o))
        classes.append(ConjClass(a_label(ell), o, size, pw))
    for m in b_range:
        g = math.gcd(m, B)
        o = B // g
        size = q * (q - 1) if 2 * m != B else q * (q - 1) // 2
        pw = tuple("ZI" if m * j % B == 0 else b_label(m * j) for j in range(o))
        classes.append(ConjClass(b_label(m), o, size, pw))

    one = rational(1)
    half = rational(Fraction(1, 2))
    rt = sqrt_q(p, k)  # squares to q (q=1 mod 4) or to -q (q=3 mod 4)

    def row(label, ident, on_c, on_d, on_a, on_b, param=None):
        vals = [ident, on_c, on_d]
        vals.extend(on_a(ell) for ell in a_range)
        vals.extend(on_b(m) for m in b_range)
        return CharRow(label, tuple(vals), param)

    zero = rational(0)
    chars = [row("1", one, one, one, lambda l: one, lambda m: one)]
    chars.append(row("psi", rational(q), zero, zero, lambda l: one, lambda m: -one))
    n_chi = (q - 5) // 4 if q % 4 == 1 else (q - 3) // 4
    for i in range(1, n_chi + 1):
        chars.append(
            row(
                f"chi_{i}",
                rational(q + 1),
                one,
                one,
                lambda l, i=i: root_of_unity(A, i * l) + root_of_unity(A, -i * l),
                lambda m: zero,
                param=(i,),
            )
        )
    n_theta = (q - 1) // 4 if q % 4 == 1 else (q - 3) // 4
    for j in range(1, n_theta + 1):
        chars.append(
            row(
                f"theta_{j}",
                rational(q - 1),
                -one,
                -one,
                lambda l: zero,
                lambda m, j=j: -(root_of_unity(B, j * m) + root_of_unity(B, -j * m)),
                param=(j,),
            )
        )
    sgn = lambda t: rational(1 if t % 2 == 0 else -1)
    if q % 4 == 1:
        vc = (one + rt) * half
        vd = (one - rt) * half
        chars.append(row("xi_1", rational((q + 1) // 2), vc, vd, sgn, lambda m: zero))
        chars.append(row("xi_2", rational((q + 1) // 2), vd, vc, sgn, lambda m: zero))
    else:
        vc = (-one + rt) * half
        vd = (-one - rt) * half
        chars.append(
            row("eta_1", rational((q - 1) // 2), vc, vd, lambda l: zero, lambda m: -sgn(m))
        )
        chars.append(
            row("eta_2", rational((q - 1) // 2), vd, vc, lambda l: zero, lambda m: -sgn(m))
        )

    return CharTable(FamilyId(PSL2, q), order, tuple(classes), tuple(chars), name=f"PSL2({q})")
