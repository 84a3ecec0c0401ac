"""Arbitrary-precision integer and rational utilities.

Primality testing, complete integer factorization with an explicit budget,
Legendre symbols, CRT, rational reconstruction, and a few modular helpers
(Tonelli-Shanks square roots, prime iteration) used throughout the library.

All randomized routines draw from explicit seeds so runs are reproducible.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BudgetExceeded, NonCoprimeModuli

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Largest n for which the fixed witness set above is known to be exact.
_DETERMINISTIC_MR_BOUND = 3_317_044_064_679_887_385_961_981

_RANDOM_MR_ROUNDS = 40


def _mr_composite_witness(n: int, a: int) -> bool:
    """True when a proves n composite by the strong Fermat test."""
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int, seed: int = 0) -> bool:
    """Miller-Rabin primality test.

    Deterministic (fixed witness set) below ~3.3e24.  Above that, the fixed
    witnesses are followed by 40 seeded pseudo-random bases, for an error
    probability below 2**-80.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    for a in _SMALL_PRIMES:
        if _mr_composite_witness(n, a):
            return False
    if n < _DETERMINISTIC_MR_BOUND:
        return True
    rng = random.Random(seed ^ (n & 0xFFFFFFFF))
    for _ in range(_RANDOM_MR_ROUNDS):
        a = rng.randrange(2, n - 1)
        if _mr_composite_witness(n, a):
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, by sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i in range(2, bound + 1) if sieve[i]]


def iter_primes(start: int = 2, bound: int | None = None):
    """Yield primes >= start in increasing order, optionally up to bound."""
    n = max(2, start)
    if n == 2:
        if bound is None or bound >= 2:
            yield 2
        n = 3
    if n % 2 == 0:
        n += 1
    while bound is None or n <= bound:
        if is_probable_prime(n):
            yield n
        n += 2


@dataclass(frozen=True)
class FactorBudget:
    """Caps for factor_integer: trial-division bound and Pollard rho effort."""

    trial_bound: int = 10_000
    rho_iteration_cap: int = 1 << 24
    rho_restarts: int = 24


@dataclass
class FactoredInt:
    """Complete factorization sign * prod(p**e)."""

    sign: int
    factors: dict[int, int] = field(default_factory=dict)

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors.items():
            v *= p**e
        return v

    def primes(self) -> list[int]:
        return sorted(self.factors)


def _pollard_brent(n: int, budget: FactorBudget) -> int:
    """A non-trivial factor of odd composite n, or raise BudgetExceeded.

    Brent's cycle-finding variant with batched gcds.  Restarts with a new
    polynomial increment c = 1, 2, ... are deterministic.
    """
    if n % 2 == 0:
        return 2
    spent = 0
    for c in range(1, budget.rho_restarts + 1):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                batch = min(128, r - k)
                for _ in range(batch):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += batch
            r *= 2
            spent += r
            if spent > budget.rho_iteration_cap:
                raise BudgetExceeded(f"pollard rho budget exhausted on {n}")
        if g == n:
            # Backtrack one step at a time from the batched run.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise BudgetExceeded(f"pollard rho restarts exhausted on {n}")


def factor_integer(n: int, budget: FactorBudget | None = None) -> FactoredInt:
    """Exact complete factorization of n != 0.

    Trial division up to budget.trial_bound, then Miller-Rabin plus Pollard
    rho (Brent) recursively.  Raises BudgetExceeded when a composite cofactor
    resists splitting within the configured effort.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    if budget is None:
        budget = FactorBudget()
    sign = 1 if n > 0 else -1
    n = abs(n)
    factors: dict[int, int] = {}
    for p in primes_up_to(min(budget.trial_bound, math.isqrt(n) + 1)):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        if n == 1:
            break
    if n > 1 and n <= budget.trial_bound * budget.trial_bound:
        # Cofactor below the square of the trial bound must be prime.
        factors[n] = factors.get(n, 0) + 1
        n = 1
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_brent(m, budget)
        stack.append(d)
        stack.append(m // d)
    return FactoredInt(sign, dict(sorted(factors.items())))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def inverse_mod(a: int, m: int) -> int:
    g, x, _ = xgcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} not invertible mod {m}")
    return x % m


def crt(residues: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine congruences x = r_i (mod m_i) with pairwise coprime moduli.

    Returns (r, M) with 0 <= r < M = prod(m_i).
    """
    r, m = 0, 1
    for r_i, m_i in residues:
        g, u, v = xgcd(m, m_i)
        if g != 1:
            raise NonCoprimeModuli(f"moduli {m} and {m_i} share factor {g}")
        r = (r * v * m_i + r_i * u * m) % (m * m_i)
        m *= m_i
    return r % m, m


def rational_reconstruction(r: int, m: int) -> Fraction | None:
    """Recover a fraction n/d from its residue r mod m.

    Returns n/d with |n| <= floor(sqrt(m/2)), 0 < d <= floor(sqrt(m/2)),
    gcd(d, m) = 1 and n = r*d (mod m), or None when no such pair exists.
    Half-extended Euclid on (m, r).
    """
    if not 0 <= r < m:
        raise ValueError("need 0 <= r < m")
    bound = math.isqrt(m // 2)
    r0, r1 = m, r
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    n, d = r1, t1
    if d < 0:
        n, d = -n, -d
    if d == 0 or d > bound or math.gcd(d, m) != 1:
        return None
    if (n - r * d) % m != 0:
        return None
    g = math.gcd(abs(n), d)
    if g > 1:
        n //= g
        d //= g
    return Fraction(n, d)


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of a modulo prime p, or None if a is a non-residue.

    Tonelli-Shanks; returns the smaller of the two roots.
    """
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        x = pow(a, (p + 1) // 4, p)
        return min(x, p - x)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, x = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, x = t * c % p, x * b % p
    return min(x, p - x)


def icbrt(n: int) -> int:
    """Floor of the real cube root of n >= 0."""
    if n < 0:
        raise ValueError("icbrt of negative")
    if n == 0:
        return 0
    x = int(round(n ** (1.0 / 3)))
    x = max(x, 1)
    while x**3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x
