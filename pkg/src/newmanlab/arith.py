"""Small number-theoretic helpers: prime factorisation and pi-parts.

A "prime set" is modelled as a plain frozenset of primes; as_prime_set
validates membership.  Orders in this package stay well under 10**6, so
trial division is entirely adequate.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable

from .errors import InputError

PrimeSet = frozenset[int]


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Sorted distinct prime divisors of n (empty for n = 1)."""
    if n < 1:
        raise InputError(f"expected a positive integer, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def pi_of(n: int) -> PrimeSet:
    """The set of primes dividing n."""
    return frozenset(prime_factors(n))


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def pi_part(n: int, pi: Iterable[int]) -> int:
    """Largest divisor of n whose prime divisors all lie in pi."""
    part = 1
    for p in as_prime_set(pi):
        part *= p_part(n, p)
    return part


def is_prime_power(n: int) -> bool:
    """True when n = p**k for a prime p and k >= 1."""
    return n > 1 and len(prime_factors(n)) == 1


def as_prime_set(pi: Iterable[int]) -> PrimeSet:
    """Validate and normalise an iterable of primes."""
    ps = frozenset(pi)
    for p in ps:
        if not isinstance(p, int) or not is_prime(p):
            raise InputError(f"{p!r} is not a prime")
    return ps


def coprime_part(n: int, pi: Iterable[int]) -> int:
    """Largest divisor of n coprime to every prime in pi."""
    for p in as_prime_set(pi):
        while n % p == 0:
            n //= p
    return n


def prime_power_exponent(n: int, p: int) -> int:
    """The exponent a with p**a = n, for n a power of the prime p."""
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    if n != 1:
        raise InputError(f"{n} remains after dividing out {p}")
    return a


__all__ = [
    "PrimeSet",
    "as_prime_set",
    "coprime_part",
    "gcd",
    "is_prime",
    "is_prime_power",
    "p_part",
    "pi_of",
    "pi_part",
    "prime_factors",
    "prime_power_exponent",
]
