"""Polynomial arithmetic over Z/m and factorization over F_p.

Polynomials here are plain lists of ints in [0, m), ascending by degree,
trailing zeros stripped ([] is zero).  The same helpers serve two moduli:
a prime p for factorization work, and a prime power p**k for Hensel-lifted
arithmetic.  Division requires a monic (or unit leading coefficient)
divisor, which is all the callers ever need.

Public operations: squarefree test, distinct-degree factor degrees, full
factorization (distinct-degree + Cantor-Zassenhaus), root extraction, and
quadratic Hensel lifting of a coprime factor.
"""

from __future__ import annotations

import random

from .arith import inverse_mod
from .errors import LeadingCoefficientVanishes, NotCoprimeCofactor, NotSquarefree, RetryLimitExceeded
from .poly import Poly

_CZ_RETRY_CAP = 64


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def from_poly(f: Poly, m: int) -> list[int]:
    return trim([int(c) % m for c in f.coeffs])


def deg(a: list[int]) -> int:
    return len(a) - 1


def add(a, b, m):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)])


def sub(a, b, m):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)])


def mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return trim([c % m for c in out])


def scale(a, k, m):
    k %= m
    return trim([c * k % m for c in a])


def pdivmod(a, b, m):
    """Division with remainder; b's leading coefficient must be a unit mod m."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv = 1 if b[-1] == 1 else inverse_mod(b[-1], m)
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], trim(rem)
    q = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % m
        if c == 0:
            continue
        t = c * inv % m
        q[i - db] = t
        for j, bc in enumerate(b):
            rem[i - db + j] = (rem[i - db + j] - t * bc) % m
    return trim(q), trim(rem)


def pmod(a, b, m):
    return pdivmod(a, b, m)[1]


def mulmod(a, b, f, m):
    return pmod(mul(a, b, m), f, m)


def powmod(a, e, f, m):
    result = [1]
    base = pmod(a, f, m)
    while e:
        if e & 1:
            result = mulmod(result, base, f, m)
        e >>= 1
        if e:
            base = mulmod(base, base, f, m)
    return result


def monic(a, p):
    if not a:
        return a
    if a[-1] == 1:
        return list(a)
    inv = inverse_mod(a[-1], p)
    return [c * inv % p for c in a]


def gcd(a, b, p):
    """Monic gcd over F_p."""
    a, b = list(a), list(b)
    while b:
        a, b = b, pmod(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """(g, s, t) over F_p with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if r0 and r0[-1] != 1:
        inv = inverse_mod(r0[-1], p)
        r0 = scale(r0, inv, p)
        s0 = scale(s0, inv, p)
        t0 = scale(t0, inv, p)
    return r0, s0, t0


def derivative(a, m):
    return trim([i * c % m for i, c in enumerate(a)][1:])


def evaluate(a, x, m):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % m
    return acc


def center_lift(a, m) -> list[int]:
    """Coefficients lifted to the symmetric range (-m/2, m/2]."""
    half = m // 2
    return [c - m if c > half else c for c in a]


# -- factorization and lifting --------------------------------------------------


def squarefree_mod_p(f: Poly, p: int) -> bool:
    """True iff gcd(f mod p, f' mod p) = 1."""
    if int(f.lc) % p == 0:
        raise LeadingCoefficientVanishes(f"leading coefficient vanishes mod {p}")
    fb = from_poly(f, p)
    g = gcd(fb, derivative(fb, p), p)
    return deg(g) == 0


def _ddf_stages(fb, p):
    """Yield (d, product of irreducible factors of degree d), d increasing."""
    v = list(fb)
    x = [0, 1]
    w = list(x)
    d = 0
    while deg(v) >= 2 * (d + 1):
        d += 1
        w = powmod(w, p, v, p)
        g = gcd(sub(w, x, p), v, p)
        if deg(g) > 0:
            yield d, g
            v = pdivmod(v, g, p)[0]
            w = pmod(w, v, p)
    if deg(v) > 0:
        yield deg(v), v


def ddf_degrees(f: Poly, p: int) -> dict[int, int]:
    """Multiset of irreducible factor degrees of f mod p (degree -> count).

    Distinct-degree factorization only; no equal-degree splitting.
    """
    if not squarefree_mod_p(f, p):
        raise NotSquarefree(f"f mod {p} is not squarefree")
    fb = monic(from_poly(f, p), p)
    out: dict[int, int] = {}
    for d, g in _ddf_stages(fb, p):
        out[d] = out.get(d, 0) + deg(g) // d
    return out


def _split_equal_degree(g, d, p, rng: random.Random):
    """All monic irreducible factors of g, where every factor has degree d."""
    if deg(g) == d:
        return [g]
    if deg(g) == 0:
        return []
    for _ in range(_CZ_RETRY_CAP):
        if p == 2:
            u = [rng.randrange(2) for _ in range(deg(g))] + [1]
            t = []
            acc = list(u)
            for _ in range(d):
                t = add(t, acc, p)
                acc = mulmod(acc, acc, g, p)
            w = gcd(t, g, p)
        else:
            u = [rng.randrange(p) for _ in range(deg(g))] + [1]
            t = powmod(u, (p**d - 1) // 2, g, p)
            w = gcd(sub(t, [1], p), g, p)
        if 0 < deg(w) < deg(g):
            rest = pdivmod(g, w, p)[0]
            return _split_equal_degree(w, d, p, rng) + _split_equal_degree(rest, d, p, rng)
    raise RetryLimitExceeded(f"equal-degree splitting stalled mod {p}")


def factor_mod_p(f: Poly, p: int, rng: random.Random) -> list[list[int]]:
    """Complete factorization of squarefree f mod p into monic irreducibles.

    Deterministic given the rng state; output sorted by degree then
    coefficients.
    """
    if not squarefree_mod_p(f, p):
        raise NotSquarefree(f"f mod {p} is not squarefree")
    fb = monic(from_poly(f, p), p)
    factors = []
    for d, g in _ddf_stages(fb, p):
        factors.extend(_split_equal_degree(g, d, p, rng))
    factors.sort(key=lambda a: (len(a), tuple(reversed(a))))
    return factors


def roots_mod_p(h: Poly, p: int) -> set[int]:
    """All roots of h in F_p."""
    hb = from_poly(h, p)
    if not hb:
        raise ValueError(f"polynomial vanishes identically mod {p}")
    if deg(hb) == 0:
        return set()
    if p < 1000:
        return {r for r in range(p) if evaluate(hb, r, p) == 0}
    hb = monic(hb, p)
    w = sub(powmod([0, 1], p, hb, p), [0, 1], p)
    g = gcd(w, hb, p)
    return set(_linear_roots(g, p))


def _linear_roots(g, p):
    """Roots of a product of distinct monic linear factors, odd p."""
    if deg(g) <= 0:
        return []
    if deg(g) == 1:
        return [(-g[0]) % p]
    shift = 0
    while True:
        t = powmod([shift, 1], (p - 1) // 2, g, p)
        w = gcd(sub(t, [1], p), g, p)
        if 0 < deg(w) < deg(g):
            rest = pdivmod(g, w, p)[0]
            return _linear_roots(w, p) + _linear_roots(rest, p)
        shift += 1


class HenselLift:
    """Resumable quadratic Hensel lifting of one monic factor of f.

    Starting data is a factorization f = f1 * f2 mod p with gcd(f1, f2) = 1.
    lift_to(k) advances the pair (plus Bezout cofactors) to modulus p**k by
    precision doubling, truncating the final step.
    """

    def __init__(self, f: Poly, f1: list[int], p: int):
        fb = from_poly(f, p)
        if int(f.lc) % p == 0:
            raise LeadingCoefficientVanishes(f"leading coefficient vanishes mod {p}")
        fb = monic(fb, p)
        f1 = [c % p for c in f1]
        if not f1 or f1[-1] != 1:
            raise ValueError("f1 must be monic")
        q, r = pdivmod(fb, f1, p)
        if r:
            raise ValueError("f1 does not divide f mod p")
        g, a, b = xgcd(f1, q, p)
        if deg(g) != 0:
            raise NotCoprimeCofactor(f"factor and cofactor share {g} mod {p}")
        self.f = f
        self.p = p
        self.k = 1
        self.f1 = f1
        self.f2 = q
        self.a = a
        self.b = b

    def lift_to(self, k: int) -> list[int]:
        f_full = None
        while self.k < k:
            k2 = min(2 * self.k, k)
            m = self.p**k2
            if f_full is None:
                f_full = [int(c) for c in self.f.coeffs]
            fm = trim([c % m for c in f_full])
            e = sub(fm, mul(self.f1, self.f2, m), m)
            qq, r = pdivmod(mul(self.b, e, m), self.f1, m)
            f1n = add(self.f1, r, m)
            f2n = add(self.f2, add(mul(self.a, e, m), mul(qq, self.f2, m), m), m)
            berr = sub(add(mul(self.a, f1n, m), mul(self.b, f2n, m), m), [1], m)
            cc, d = pdivmod(mul(self.b, berr, m), f1n, m)
            bn = sub(self.b, d, m)
            an = sub(self.a, add(mul(self.a, berr, m), mul(cc, f2n, m), m), m)
            self.f1, self.f2, self.a, self.b, self.k = f1n, f2n, an, bn, k2
        return self.f1


def hensel_lift_factor(f: Poly, f1: list[int], p: int, k: int) -> list[int]:
    """Monic F1 mod p**k with F1 = f1 (mod p) and F1 | f (mod p**k)."""
    return HenselLift(f, f1, p).lift_to(k)
