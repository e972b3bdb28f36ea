"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored in a canonical integral basis so that two equal field
elements always have identical stored forms.  The basis of Q(zeta_n) used
here is the set of zeta_n^e whose local exponent at every prime power
p^v || n has top p-adic digit different from p-1; the relation

    zeta^e = -(zeta^(e-d) + zeta^(e-2d) + ... + zeta^(e-(p-1)d)),
    d = p^(v-1) * (CRT idempotent for p),

rewrites any offending term into basis terms in one step.  This is the
classical tensor-of-prime-power-bases construction (the same family of
bases GAP uses), chosen because membership testing, reduction and
conductor minimization are all local and cheap.  After every operation
the conductor is reduced to the smallest n' | n carrying the value, so
rationals always have conductor 1 and equality is plain structural
equality.

Coefficients are Fractions, normalized to int whenever integral; no
floating point is used anywhere except the optional debug evaluator.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

Coeff = int | Fraction

__all__ = [
    "Cyc",
    "root_of_unity",
    "rational",
    "geometric_sum",
    "gauss_sqrt",
    "sqrt_q",
    "as_rational",
    "is_nonneg_integer",
    "render_cyc",
    "parse_cyc",
    "CycError",
]


class CycError(ValueError):
    """Domain error for cyclotomic constructors."""


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _factorize(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            v = 0
            while n % d == 0:
                n //= d
                v += 1
            out.append((d, v))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


class _Struct:
    """Cached per-conductor data: one entry per prime power of n."""

    __slots__ = ("n", "primes")

    def __init__(self, n: int):
        self.n = n
        primes = []
        for p, v in _factorize(n):
            pv = p**v
            cof = n // pv
            inv_cof = pow(cof, -1, pv)
            # CRT idempotent: 1 mod pv, 0 mod cof
            idem = cof * inv_cof % n
            primes.append((p, pv, p ** (v - 1), inv_cof, idem))
        self.primes = tuple(primes)


@lru_cache(maxsize=None)
def _struct(n: int) -> _Struct:
    return _Struct(n)


def _reduce_to_basis(n: int, raw: dict[int, Coeff]) -> dict[int, Coeff]:
    """Rewrite a raw exponent->coefficient map into the canonical basis."""
    if n == 1:
        c = _norm_coeff(sum(raw.values(), 0))
        return {0: c} if c else {}
    st = _struct(n)
    out: dict[int, Coeff] = {}
    stack = [(e % n, c) for e, c in raw.items() if c]
    while stack:
        e, c = stack.pop()
        bad = None
        for p, pv, pv1, inv_cof, idem in st.primes:
            loc = (e % pv) * inv_cof % pv
            if loc // pv1 == p - 1:
                bad = (p, pv1, idem)
                break
        if bad is None:
            acc = out.get(e, 0) + c
            if acc:
                out[e] = acc
            elif e in out:
                del out[e]
        else:
            p, pv1, idem = bad
            for t in range(1, p):
                stack.append(((e - t * pv1 * idem) % n, -c))
    return {e: _norm_coeff(c) for e, c in out.items() if c}


def _minimal_conductor(n: int, basis: dict[int, Coeff]) -> tuple[int, dict[int, Coeff]]:
    """Rewrite a basis form over the smallest cyclotomic field containing it."""
    if not basis:
        return 1, {}
    if n == 1:
        return 1, basis
    st = _struct(n)
    keep: list[tuple[int, int, int, int]] = []  # (p, mu, pv, inv_cof)
    d = 1
    for p, pv, _pv1, inv_cof, _idem in st.primes:
        best = None  # minimal p-valuation of the local coords
        for e in basis:
            loc = (e % pv) * inv_cof % pv
            if loc == 0:
                continue
            w = 0
            while loc % p == 0:
                loc //= p
                w += 1
            best = w if best is None else min(best, w)
            if best == 0:
                break
        mu = 0 if best is None else _valuation(pv, p) - best
        if mu > 0:
            keep.append((p, mu, pv, inv_cof))
            d *= p**mu
    if d == n:
        return n, basis
    if d == 1:
        return 1, {0: basis.get(0, 0)} if basis.get(0, 0) else {}
    out: dict[int, Coeff] = {}
    for e, c in basis.items():
        e2 = 0
        for p, mu, pv, inv_cof in keep:
            loc = (e % pv) * inv_cof % pv
            loc //= pv // p**mu
            e2 = (e2 + loc * (d // p**mu)) % d
        out[e2] = c
    return d, out


def _valuation(pv: int, p: int) -> int:
    v = 0
    while pv % p == 0:
        pv //= p
        v += 1
    return v


class Cyc:
    """An element of some Q(zeta_n), stored in canonical form.

    Immutable; supports +, -, *, ** and exact equality/hashing.
    """

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs: dict[int, Coeff], *, _canonical: bool = False):
        if not _canonical:
            coeffs = _reduce_to_basis(n, coeffs)
            n, coeffs = _minimal_conductor(n, coeffs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Cyc is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rational(r: Coeff) -> "Cyc":
        r = _norm_coeff(Fraction(r))
        return Cyc(1, {0: r} if r else {}, _canonical=True)

    # -- coercion helpers --------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyc | None":
        if isinstance(x, Cyc):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyc.from_rational(x)
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Cyc":
        o = Cyc._coerce(other)
        if o is None:
            return NotImplemented
        if self.n == o.n:
            merged = dict(self.c)
            for e, c in o.c.items():
                acc = merged.get(e, 0) + c
                if acc:
                    merged[e] = acc
                else:
                    del merged[e]
            n, merged = _minimal_conductor(self.n, {e: _norm_coeff(c) for e, c in merged.items()})
            return Cyc(n, merged, _canonical=True)
        m = _lcm_conductor(self.n, o.n)
        raw: dict[int, Coeff] = {}
        for src in (self, o):
            k = m // src.n
            for e, c in src.c.items():
                key = e * k % m
                raw[key] = raw.get(key, 0) + c
        return Cyc(m, raw)

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.n, {e: -c for e, c in self.c.items()}, _canonical=True)

    def __sub__(self, other) -> "Cyc":
        o = Cyc._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Cyc":
        return (-self) + other

    def __mul__(self, other) -> "Cyc":
        o = Cyc._coerce(other)
        if o is None:
            return NotImplemented
        if self.n == 1:
            if not self.c:
                return ZERO
            r = self.c[0]
            return Cyc(o.n, {e: _norm_coeff(c * r) for e, c in o.c.items()}, _canonical=True)
        if o.n == 1:
            return o * self
        m = _lcm_conductor(self.n, o.n)
        ka, kb = m // self.n, m // o.n
        raw: dict[int, Coeff] = {}
        for ea, ca in self.c.items():
            ea_ = ea * ka
            for eb, cb in o.c.items():
                key = (ea_ + eb * kb) % m
                raw[key] = raw.get(key, 0) + ca * cb
        return Cyc(m, raw)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Cyc":
        if k < 0:
            raise CycError("negative powers are not supported; use conj for inverses of roots")
        if len(self.c) == 1:
            ((e, c),) = self.c.items()
            return Cyc(self.n, {e * k % self.n: _norm_coeff(Fraction(c) ** k)})
        acc = ONE
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def galois(self, j: int) -> "Cyc":
        """Image under zeta_n -> zeta_n^j for gcd(j, n) = 1."""
        j %= self.n
        if math.gcd(j, self.n) != 1:
            raise CycError(f"galois exponent {j} not coprime to conductor {self.n}")
        if self.n == 1:
            return self
        return Cyc(self.n, {e * j % self.n: c for e, c in self.c.items()})

    def conj(self) -> "Cyc":
        """Complex conjugation (zeta -> zeta^-1)."""
        return self.galois(self.n - 1) if self.n > 1 else self

    # -- predicates / extraction --------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return self.n == 1

    def as_rational(self) -> Fraction | None:
        if self.n != 1:
            return None
        return Fraction(self.c.get(0, 0))

    def is_integer(self) -> bool:
        return self.n == 1 and isinstance(self.c.get(0, 0), int)

    def is_nonneg_integer(self) -> bool:
        v = self.c.get(0, 0)
        return self.n == 1 and isinstance(v, int) and v >= 0

    # -- dunder plumbing ----------------------------------------------

    def __eq__(self, other) -> bool:
        o = Cyc._coerce(other)
        if o is None:
            return NotImplemented
        return self.n == o.n and self.c == o.c

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, tuple(sorted((e, Fraction(c)) for e, c in self.c.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self.c)

    def __repr__(self) -> str:
        return f"Cyc({render_cyc(self)})"

    def __str__(self) -> str:
        return render_cyc(self)

    def approx(self) -> complex:
        """Floating approximation, for debugging only."""
        out = 0j
        for e, c in self.c.items():
            out += float(Fraction(c)) * complex(
                math.cos(2 * math.pi * e / self.n), math.sin(2 * math.pi * e / self.n)
            )
        return out


def _lcm_conductor(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


ZERO = Cyc(1, {}, _canonical=True)
ONE = Cyc(1, {0: 1}, _canonical=True)


def rational(r) -> Cyc:
    return Cyc.from_rational(Fraction(r))


def root_of_unity(n: int, k: int = 1) -> Cyc:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise CycError(f"root of unity needs a positive order, got {n}")
    return Cyc(n, {k % n: 1})


def geometric_sum(f: int, step: int) -> Cyc:
    """Sum of eps^t for t = 1..f-1 with eps = zeta_f^step.

    Equals -1 whenever eps != 1 and f-1 when eps = 1.
    """
    if f < 1:
        raise CycError(f"geometric_sum needs a positive order, got {f}")
    if step % f == 0:
        return rational(f - 1)
    acc: dict[int, Coeff] = {}
    for t in range(1, f):
        e = step * t % f
        acc[e] = acc.get(e, 0) + 1
    return Cyc(f, acc)


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def gauss_sqrt(p: int) -> Cyc:
    """Quadratic Gauss sum: sum over t of (t|p) * zeta_p^t.

    Squares to p when p = 1 mod 4 and to -p when p = 3 mod 4.
    """
    if not _is_odd_prime(p):
        raise CycError(f"gauss_sqrt needs an odd prime, got {p}")
    coeffs = {}
    for t in range(1, p):
        coeffs[t] = 1 if pow(t, (p - 1) // 2, p) == 1 else -1
    return Cyc(p, coeffs)


def sqrt_q(p: int, k: int) -> Cyc:
    """A square root of +-q for q = p^k: rational for k even, else
    p^((k-1)/2) times the Gauss sum (sign of the radicand follows p mod 4)."""
    if k < 1:
        raise CycError(f"sqrt_q needs a positive exponent, got {k}")
    if k % 2 == 0:
        return rational(p ** (k // 2))
    return rational(p ** ((k - 1) // 2)) * gauss_sqrt(p)


def as_rational(a: Cyc) -> Fraction | None:
    return a.as_rational()


def is_nonneg_integer(a: Cyc) -> bool:
    return a.is_nonneg_integer()


# -- GAP-compatible text form -----------------------------------------


def _render_coeff(c: Coeff) -> str:
    return str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


def render_cyc(x: Cyc) -> str:
    """Render in the E(n) surface syntax, e.g. ``-E(7)-E(7)^2+1/2``."""
    if not x.c:
        return "0"
    parts = []
    for e in sorted(x.c):
        c = x.c[e]
        if x.n == 1 or e == 0:
            term = _render_coeff(abs(c) if isinstance(c, int) else abs(c))
            neg = c < 0
        else:
            base = f"E({x.n})" if e == 1 else f"E({x.n})^{e}"
            a = abs(c) if isinstance(c, int) else abs(c)
            neg = c < 0
            term = base if a == 1 else f"{_render_coeff(a)}*{base}"
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append(("-" if neg else "+") + term)
    return "".join(parts)


_TERM_RE = re.compile(
    r"""^
    (?P<coef>\d+(?:/\d+)?)?          # optional leading rational
    (?P<star>\*)?                    # optional *
    (?:E\((?P<n>\d+)\)(?:\^(?P<k>\d+))?)?   # optional E(n)^k
    $""",
    re.VERBOSE,
)


def parse_cyc(text: str) -> Cyc:
    """Parse the E(n) surface syntax back into a canonical value."""
    s = text.replace(" ", "")
    if not s:
        raise CycError("empty cyclotomic literal")
    if s == "0":
        return ZERO
    # split into signed terms
    terms: list[tuple[int, str]] = []
    i = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start = i
    depth = 0
    while i <= len(s):
        if i == len(s) or (s[i] in "+-" and depth == 0):
            terms.append((sign, s[start:i]))
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
                start = i + 1
        elif s[i] == "(":
            depth += 1
        elif s[i] == ")":
            depth -= 1
        i += 1
    total = ZERO
    for sg, term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("n") is None):
            raise CycError(f"bad cyclotomic term {term!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("star") and m.group("n") is None:
            raise CycError(f"bad cyclotomic term {term!r} in {text!r}")
        val = rational(sg * coef)
        if m.group("n") is not None:
            n = int(m.group("n"))
            k = int(m.group("k")) if m.group("k") else 1
            val = val * root_of_unity(n, k)
        total = total + val
    return total
