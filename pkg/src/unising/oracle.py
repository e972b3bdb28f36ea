"""Brute-force ground truth for small groups.

Finite fields GF(p^k) are built from fixed primitive polynomials
(Conway-style; primitivity of x is verified at construction, which also
proves irreducibility).  PGL2/PSL2 are enumerated by direct loops over
2x2 matrices, PGU3/PSU3 by closure from a handful of generators of the
unitary group preserving the antidiagonal Hermitian form, all modulo the
center via canonical coset representatives.  Conjugacy classes, element
orders and power maps are computed from actual matrix arithmetic with no
reference to the table builders, so agreement with a built table checks
the class data and the hardcoded power maps independently.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .cyclo import Cyc, rational
from .tables import CharTable
from .gtables.arith import prime_power

# primitive polynomials with primitive root x, low-to-high coefficients
_POLYS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


class OracleError(ValueError):
    pass


def _primitive_root(p: int) -> int:
    for g in range(2, p + 1):
        x, order = g % p, 1
        while x != 1:
            x = x * g % p
            order += 1
        if order == p - 1:
            return g
    raise OracleError(f"no primitive root mod {p}")


class GF:
    """GF(p^k) with elements encoded as ints (base-p coefficient vectors)
    and dense multiplication/addition tables."""

    def __init__(self, p: int, k: int):
        self.p, self.k = p, k
        self.q = p**k
        if k == 1:
            poly = ((-_primitive_root(p)) % p, 1)
        else:
            poly = _POLYS.get((p, k))
            if poly is None:
                raise OracleError(f"no stored primitive polynomial for GF({p}^{k})")
        self.poly = poly
        q = self.q
        self.add = [[self._vadd(a, b) for b in range(q)] for a in range(q)]
        self.mul = [[0] * q for _ in range(q)]
        for a in range(q):
            row = self.mul[a]
            for b in range(a, q):
                v = self._pmul(a, b)
                row[b] = v
                self.mul[b][a] = v
        self.neg = [self._vneg(a) for a in range(q)]
        # primitivity of x doubles as an irreducibility proof: a unit of
        # order q-1 forces the quotient ring to be a field
        self.gen = p % q if k > 1 else _primitive_root(p) % q
        order, x = 1, self.gen
        while x != 1:
            x = self.mul[x][self.gen]
            order += 1
        if order != q - 1:
            raise OracleError(f"GF({p}^{k}): stored polynomial is not primitive")
        self.inv = [0] * q
        x = self.gen
        for _ in range(q - 1):
            self.inv[x] = self.pow(x, q - 2)
            x = self.mul[x][self.gen]

    def _digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p**i) % p for i in range(self.k)]

    def _enc(self, ds) -> int:
        return sum(d % self.p * self.p**i for i, d in enumerate(ds))

    def _vadd(self, a: int, b: int) -> int:
        return self._enc(x + y for x, y in zip(self._digits(a), self._digits(b)))

    def _vneg(self, a: int) -> int:
        return self._enc(-x for x in self._digits(a))

    def _pmul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(k):
                    prod[i - k + j] = (prod[i - k + j] - c * self.poly[j]) % p
        return self._enc(prod[:k])

    def pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul[out][base]
            base = self.mul[base][base]
            e >>= 1
        return out


# -- matrix helpers ----------------------------------------------------


def mat_mul(A: tuple, B: tuple, F: GF, n: int) -> tuple:
    M, Ad = F.mul, F.add
    if n == 2:
        a, b, c, d = A
        e, f, g, h = B
        return (
            Ad[M[a][e]][M[b][g]], Ad[M[a][f]][M[b][h]],
            Ad[M[c][e]][M[d][g]], Ad[M[c][f]][M[d][h]],
        )
    a0, a1, a2, a3, a4, a5, a6, a7, a8 = A
    b0, b1, b2, b3, b4, b5, b6, b7, b8 = B
    return (
        Ad[Ad[M[a0][b0]][M[a1][b3]]][M[a2][b6]],
        Ad[Ad[M[a0][b1]][M[a1][b4]]][M[a2][b7]],
        Ad[Ad[M[a0][b2]][M[a1][b5]]][M[a2][b8]],
        Ad[Ad[M[a3][b0]][M[a4][b3]]][M[a5][b6]],
        Ad[Ad[M[a3][b1]][M[a4][b4]]][M[a5][b7]],
        Ad[Ad[M[a3][b2]][M[a4][b5]]][M[a5][b8]],
        Ad[Ad[M[a6][b0]][M[a7][b3]]][M[a8][b6]],
        Ad[Ad[M[a6][b1]][M[a7][b4]]][M[a8][b7]],
        Ad[Ad[M[a6][b2]][M[a7][b5]]][M[a8][b8]],
    )


def mat_det(A: tuple, F: GF, n: int) -> int:
    M, Ad, Ng = F.mul, F.add, F.neg
    if n == 2:
        return Ad[M[A[0]][A[3]]][Ng[M[A[1]][A[2]]]]
    a, b, c, d, e, f, g, h, i = A
    t1 = M[a][Ad[M[e][i]][Ng[M[f][h]]]]
    t2 = M[b][Ad[M[f][g]][Ng[M[d][i]]]]
    t3 = M[c][Ad[M[d][h]][Ng[M[e][g]]]]
    return Ad[Ad[t1][t2]][t3]


def mat_inv(A: tuple, F: GF, n: int) -> tuple:
    M, Ad, Ng = F.mul, F.add, F.neg
    di = F.inv[mat_det(A, F, n)]
    if n == 2:
        a, b, c, d = A
        return (M[di][d], M[di][Ng[b]], M[di][Ng[c]], M[di][a])
    a, b, c, d, e, f, g, h, i = A
    cof = (
        Ad[M[e][i]][Ng[M[f][h]]], Ad[M[c][h]][Ng[M[b][i]]], Ad[M[b][f]][Ng[M[c][e]]],
        Ad[M[f][g]][Ng[M[d][i]]], Ad[M[a][i]][Ng[M[c][g]]], Ad[M[c][d]][Ng[M[a][f]]],
        Ad[M[d][h]][Ng[M[e][g]]], Ad[M[b][g]][Ng[M[a][h]]], Ad[M[a][e]][Ng[M[b][d]]],
    )
    return tuple(M[di][x] for x in cof)


# -- enumerated groups -------------------------------------------------


@dataclass
class EnumeratedGroup:
    name: str
    order: int
    class_reps: list[tuple]
    class_orders: list[int]
    class_sizes: list[int]
    class_power: list[tuple[int, ...]]  # cid, j -> cid of rep^j
    class_of: dict[tuple, int]
    mul: object
    identity: tuple

    def element_class(self, g: tuple) -> int:
        return self.class_of[g]


DEFAULT_BOUND = 3_000_000


def enumerate_group(tag: str, q: int, max_order: int = DEFAULT_BOUND) -> EnumeratedGroup:
    tag = tag.upper()
    if tag == "PGL2":
        return _enum_l2(q, max_order, psl=False)
    if tag == "PSL2":
        return _enum_l2(q, max_order, psl=True)
    if tag == "PGU3":
        return _enum_u3(q, max_order, psu=False)
    if tag == "PSU3":
        return _enum_u3(q, max_order, psu=True)
    raise OracleError(f"enumeration not supported for family {tag}")


def _check_bound(order: int, max_order: int, name: str) -> None:
    if order > max_order:
        raise OracleError(
            f"{name} has order {order}, above the enumeration bound {max_order}; "
            f"rerun with a bound of at least {order}"
        )


def _enum_l2(q: int, max_order: int, *, psl: bool) -> EnumeratedGroup:
    pp = prime_power(q)
    if pp is None or (psl and q % 2 == 0):
        raise OracleError(f"bad q {q} for {'PSL2' if psl else 'PGL2'} enumeration")
    order = q * (q - 1) * (q + 1) // (2 if psl else 1)
    name = f"{'PSL2' if psl else 'PGL2'}({q})"
    _check_bound(order, max_order, name)
    F = GF(*pp)

    if psl:
        def canon(A: tuple) -> tuple:
            return min(A, tuple(F.neg[x] for x in A))
    else:
        def canon(A: tuple) -> tuple:
            for e in A:
                if e:
                    s = F.inv[e]
                    return tuple(F.mul[s][x] for x in A)
            raise OracleError("zero matrix")

    elems = set()
    want_det = (lambda d: d == 1) if psl else (lambda d: d != 0)
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    A = (a, b, c, d)
                    if want_det(mat_det(A, F, 2)):
                        elems.add(canon(A))
    mul = lambda A, B: canon(mat_mul(A, B, F, 2))
    inv = lambda A: canon(mat_inv(A, F, 2))
    return _finish(name, order, elems, mul, inv, canon((1, 0, 0, 1)), gens=None)


def _unitary_data(q: int):
    p, k = prime_power(q)
    F = GF(p, 2 * k)
    conj = [F.pow(x, q) for x in range(F.q)]
    norm_one = [x for x in range(1, F.q) if F.mul[x][conj[x]] == 1]
    return F, conj, norm_one


_J3 = (0, 0, 1, 0, 1, 0, 1, 0, 0)


def _is_unitary(A: tuple, F: GF, conj) -> bool:
    At = tuple(A[j * 3 + i] for i in range(3) for j in range(3))
    Ac = tuple(conj[x] for x in A)
    return mat_mul(mat_mul(At, _J3, F, 3), Ac, F, 3) == _J3


def _enum_u3(q: int, max_order: int, *, psu: bool) -> EnumeratedGroup:
    from .gtables.pgu3 import pgu3_order
    from .gtables.psu3 import psu3_order

    g3 = math.gcd(3, q + 1)
    order = psu3_order(q) if psu else pgu3_order(q)
    name = f"{'PSU3' if psu else 'PGU3'}({q})"
    _check_bound(order, max_order, name)
    F, conj, norm_one = _unitary_data(q)
    Q2 = F.q

    def canon(A: tuple) -> tuple:
        return min(tuple(F.mul[s][x] for x in A) for s in norm_one)

    if psu:
        def in_group(A: tuple) -> bool:
            return F.pow(mat_det(A, F, 3), (q + 1) // g3) == 1
    else:
        def in_group(A: tuple) -> bool:
            return True

    # a small generating set: torus elements, a few root elements, Weyl
    cands: list[tuple] = []
    for a in range(1, Q2):
        for b in norm_one:
            D = (a, 0, 0, 0, b, 0, 0, 0, F.inv[conj[a]])
            if _is_unitary(D, F, conj):
                cands.append(D)
    diag = [D for D in cands if in_group(D)]
    gens = diag[:1] + diag[-2:]
    unip = []
    for x in range(Q2):
        for y in range(Q2):
            for z in range(Q2):
                L = (1, 0, 0, x, 1, 0, y, z, 1)
                if _is_unitary(L, F, conj) and in_group(L):
                    unip.append(L)
    gens += unip[:2] + unip[-2:]
    upper = []
    for x in range(Q2):
        for y in range(Q2):
            for z in range(Q2):
                L = (1, x, y, 0, 1, z, 0, 0, 1)
                if _is_unitary(L, F, conj) and in_group(L):
                    upper.append(L)
    gens += upper[:2] + upper[-2:]
    for s in range(1, Q2):
        W = (0, 0, s, 0, 1, 0, F.inv[conj[s]], 0, 0)
        if _is_unitary(W, F, conj) and in_group(W):
            gens.append(W)
            break
    gens = sorted({canon(g) for g in gens})

    mul = lambda A, B: canon(mat_mul(A, B, F, 3))
    inv = lambda A: canon(mat_inv(A, F, 3))
    ident = canon((1, 0, 0, 0, 1, 0, 0, 0, 1))

    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
        if len(elems) > order:
            raise OracleError(f"{name}: closure exceeded the expected order")
    return _finish(name, order, elems, mul, inv, ident, gens=gens)


def _finish(name, order, elems, mul, inv, ident, gens) -> EnumeratedGroup:
    if len(elems) != order:
        raise OracleError(f"{name}: enumerated {len(elems)} elements, expected {order}")
    class_of: dict[tuple, int] = {}
    reps, orders, sizes = [], [], []
    if gens is None:
        all_pairs = [(g, inv(g)) for g in elems]
    else:
        gen_pairs = [(g, inv(g)) for g in gens]
    for x in sorted(elems):
        if x in class_of:
            continue
        cid = len(reps)
        if gens is None:
            orbit = {mul(mul(g, x), gi) for g, gi in all_pairs}
        else:
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g, gi in gen_pairs:
                    z = mul(mul(g, y), gi)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
        for y in orbit:
            class_of[y] = cid
        o, y = 1, x
        while y != ident:
            y = mul(y, x)
            o += 1
        reps.append(x)
        orders.append(o)
        sizes.append(len(orbit))
    if sum(sizes) != order:
        raise OracleError(f"{name}: classes do not partition the group")
    power = []
    for rep, o in zip(reps, orders):
        row, y = [], ident
        for _ in range(o):
            row.append(class_of[y])
            y = mul(y, rep)
        power.append(tuple(row))
    return EnumeratedGroup(name, order, reps, orders, sizes, power, class_of, mul, ident)


# -- structure comparison ---------------------------------------------


@dataclass
class StructureMatch:
    ok: bool
    matching: dict[str, int] = field(default_factory=dict)  # model label -> enum cid
    ambiguous: bool = False
    message: str = ""


def _refine(fp: list[int], power) -> list[int]:
    while True:
        nxt = [(fp[i], tuple(sorted(fp[j] for j in row))) for i, row in enumerate(power)]
        canon = {v: k for k, v in enumerate(sorted(set(nxt)))}
        nxt = [canon[v] for v in nxt]
        if nxt == fp:
            return fp
        fp = nxt


def compare_structure(table: CharTable, truth: EnumeratedGroup) -> StructureMatch:
    n = len(table.classes)
    if len(truth.class_reps) != n:
        return StructureMatch(False, message=(
            f"class count differs: table {n}, enumeration {len(truth.class_reps)}"))
    if table.group_order != truth.order:
        return StructureMatch(False, message="group order differs")
    msig = sorted((c.order, c.size) for c in table.classes)
    esig = sorted(zip(truth.class_orders, truth.class_sizes))
    if msig != esig:
        return StructureMatch(False, message="(order, size) multisets differ")

    lbl_to_i = {c.label: i for i, c in enumerate(table.classes)}
    m_power = [tuple(lbl_to_i[l] for l in c.power_to) for c in table.classes]
    base = {v: i for i, v in enumerate(sorted(set(msig)))}
    m_fp = _refine([base[(c.order, c.size)] for c in table.classes], m_power)
    e_fp = _refine([base[(o, s)] for o, s in zip(truth.class_orders, truth.class_sizes)],
                   truth.class_power)
    if Counter(m_fp) != Counter(e_fp):
        return StructureMatch(False, message="power-map fingerprints differ")

    # power-map-respecting bijection by propagation with backtracking
    cands = [[j for j in range(n) if e_fp[j] == m_fp[i]] for i in range(n)]
    assign: list[int | None] = [None] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        if assign[i] is not None:
            return place(i + 1)
        for j in cands[i]:
            if used[j]:
                continue
            ok = True
            trail = []
            stack = [(i, j)]
            while stack and ok:
                a, b = stack.pop()
                if assign[a] is not None:
                    if assign[a] != b:
                        ok = False
                    continue
                if used[b]:
                    ok = False
                    continue
                assign[a] = b
                used[b] = True
                trail.append((a, b))
                for ma, ea in zip(m_power[a], truth.class_power[b]):
                    stack.append((ma, ea))
            if ok and place(i + 1):
                return True
            for a, b in trail:
                assign[a] = None
                used[b] = False
        return False

    if not place(0):
        return StructureMatch(False, message="no power-map-compatible class matching exists")
    ambiguous = any(len(c) > 1 for c in cands)
    matching = {table.classes[i].label: assign[i] for i in range(n)}
    return StructureMatch(True, matching, ambiguous,
                          "ambiguous fingerprint blocks resolved by power maps" if ambiguous else "")


def frobenius_M(truth: EnumeratedGroup, values: dict[int, Cyc], cid: int) -> int:
    """[chi restricted to <g>, 1] from actual element powers of the class rep."""
    o = truth.class_orders[cid]
    acc = rational(0)
    for j in range(o):
        acc = acc + values[truth.class_power[cid][j]]
    r = acc.as_rational()
    if r is None or r.denominator != 1 or r < 0 or int(r) % o:
        raise OracleError(f"Frobenius sum at class {cid} is {acc}/{o}, not a nonnegative multiple")
    return int(r) // o


def perm_fixed_space(perm: list[int]) -> tuple[int, int]:
    """(number of cycles, fixed-space dimension of the standard constituent)."""
    n = len(perm)
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles, cycles - 1
