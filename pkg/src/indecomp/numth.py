"""Elementary number theory for orders up to the 512 cap."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}; n must be >= 1."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def multiplicative_order(r: int, m: int) -> int:
    """Order of r in (Z/m)^x; raises if r is not a unit mod m."""
    import math

    r %= m
    if m < 2 or math.gcd(r, m) != 1:
        raise ValueError(f"{r} is not a unit modulo {m}")
    k = 1
    x = r
    while x != 1:
        x = x * r % m
        k += 1
    return k
