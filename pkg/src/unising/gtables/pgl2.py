"""Character table of PGL2(q), for even q (where PGL2 = SL2) and odd q.

Classes: identity I, the unipotent class c, the split-torus family a^l
and the nonsplit family b^m, folded under inversion.  For odd q the two
order-2 classes are the endpoints of the a/b families and the generic
value formulas specialize correctly to them, so they are not special
cased.
"""

from __future__ import annotations

import math

from ..cyclo import Cyc, rational, root_of_unity
from ..tables import CharRow, CharTable, ConjClass, FamilyId, PGL2, TableError
from .arith import fold, prime_power


def build_pgl2(q: int) -> CharTable:
    pp = prime_power(q)
    if pp is None:
        raise TableError(f"PGL2 needs a prime power q >= 2, got {q}")
    p, _k = pp
    order = q * (q - 1) * (q + 1)

    a_range = range(1, (q - 1) // 2 + 1)  # empty upper half folded away
    b_range = range(1, (q + 1) // 2 + 1)
    if q % 2 == 0:
        a_range = range(1, (q - 2) // 2 + 1)
        b_range = range(1, q // 2 + 1)

    def a_label(x: int) -> str:
        return f"a^{fold(x, q - 1)}"

    def b_label(x: int) -> str:
        return f"b^{fold(x, q + 1)}"

    classes = [ConjClass("I", 1, 1, ("I",))]
    unip_order = 2 if q % 2 == 0 else p
    classes.append(ConjClass("c", unip_order, q * q - 1, ("I",) + ("c",) * (unip_order - 1)))
    for ell in a_range:
        g = math.gcd(ell, q - 1)
        o = (q - 1) // g
        size = q * (q + 1) if 2 * ell != q - 1 else q * (q + 1) // 2
        pw = tuple("I" if ell * j % (q - 1) == 0 else a_label(ell * j) for j in range(o))
        classes.append(ConjClass(a_label(ell), o, size, pw))
    for m in b_range:
        g = math.gcd(m, q + 1)
        o = (q + 1) // g
        size = q * (q - 1) if 2 * m != q + 1 else q * (q - 1) // 2
        pw = tuple("I" if m * j % (q + 1) == 0 else b_label(m * j) for j in range(o))
        classes.append(ConjClass(b_label(m), o, size, pw))

    one = rational(1)

    def row(label: str, ident: Cyc, unip: Cyc, on_a, on_b, param=None) -> CharRow:
        vals = [ident, unip]
        vals.extend(on_a(ell) for ell in a_range)
        vals.extend(on_b(m) for m in b_range)
        return CharRow(label, tuple(vals), param)

    chars = [row("1", one, one, lambda l: one, lambda m: one)]
    if q % 2:
        sgn = lambda t: rational(1 if t % 2 == 0 else -1)
        chars.append(row("lambda_1", one, one, sgn, sgn))
        chars.append(row("psi", rational(q), rational(0), lambda l: one, lambda m: -one, param=(0,)))
        chars.append(
            row("psi_1", rational(q), rational(0), sgn, lambda m: -sgn(m), param=(1,))
        )
    else:
        chars.append(row("psi", rational(q), rational(0), lambda l: one, lambda m: -one, param=(0,)))

    n_chi = (q - 2) // 2 if q % 2 == 0 else (q - 3) // 2
    for i in range(1, n_chi + 1):
        chars.append(
            row(
                f"chi_{i}",
                rational(q + 1),
                one,
                lambda l, i=i: root_of_unity(q - 1, i * l) + root_of_unity(q - 1, -i * l),
                lambda m: rational(0),
                param=(i,),
            )
        )
    n_theta = q // 2 if q % 2 == 0 else (q - 1) // 2
    for j in range(1, n_theta + 1):
        chars.append(
            row(
                f"theta_{j}",
                rational(q - 1),
                -one,
                lambda l: rational(0),
                lambda m, j=j: -(root_of_unity(q + 1, j * m) + root_of_unity(q + 1, -j * m)),
                param=(j,),
            )
        )

    return CharTable(FamilyId(PGL2, q), order, tuple(classes), tuple(chars), name=f"PGL2({q})")
