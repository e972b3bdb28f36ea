"""Small number-theory helpers shared by the table builders."""

from __future__ import annotations

import math


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p^k, or None if q is not a prime power > 1."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            return (q, 1)
        if q % p:
            continue
        k, m = 0, q
        while m % p == 0:
            m //= p
            k += 1
        return (p, k) if m == 1 else None
    return None


def is_square_mod(h: int, p: int) -> bool:
    """Whether h (coprime to p) is a square modulo the odd prime p."""
    return pow(h % p, (p - 1) // 2, p) == 1


def fold(x: int, n: int) -> int:
    """Canonical representative of {x, -x} mod n, in 0..n//2."""
    x %= n
    return min(x, n - x)


def lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)
