"""Candidate ramified primes of degree-e cyclic subfields, without factoring
the discriminant of the defining polynomial.

The shortcut: compute the unique monic candidate g with deg g = deg(f)/e
whose e-th power matches the top coefficients of f, and take the gcd D of
the numerators of the nonzero coefficients of f - g**e.  Any prime that is
tamely (totally) ramified in a degree-e cyclic subfield forces f mod p to
be an e-th power, hence divides every such numerator.  D is typically tiny
compared to disc(f), so factoring it is cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import FactorBudget, factor_integer
from .errors import InputIsPower, NotSquarefree
from .poly import Poly, eth_root_coeffs, is_squarefree_q


@dataclass(frozen=True)
class CandidateSet:
    """Possibly ramified places of a degree-e cyclic subfield.

    tame_primes come from the numerator gcd; wild_primes are the divisors of
    e (plus 2 for e = 2, where 2 is both wild and the even prime); the -1
    slot tracks the real place and exists only for e = 2.  gcd_value is kept
    for diagnostics since no a priori bound on it is known.
    """

    e: int
    tame_primes: tuple[int, ...]
    wild_primes: tuple[int, ...]
    include_minus_one: bool
    gcd_value: int

    def all_finite_primes(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.tame_primes) | set(self.wild_primes)))


def candidate_ramified_primes(f: Poly, e: int, budget: FactorBudget | None = None) -> CandidateSet:
    """Superset of the ramified primes of any degree-e cyclic subfield of
    Q[X]/(f), for e in {2, 3}.

    f must be monic and integral; squarefreeness over Q is verified,
    irreducibility is the caller's responsibility.
    """
    if e not in (2, 3):
        raise ValueError("only e = 2 and e = 3 are supported")
    if not (f.is_monic() and f.is_integral()):
        raise ValueError("f must be monic and integral")
    if f.degree % e != 0:
        raise ValueError(f"degree {f.degree} is not divisible by {e}")
    if not is_squarefree_q(f):
        raise NotSquarefree("defining polynomial has repeated roots")
    g = eth_root_coeffs(f, e)
    diff = f - g**e
    if not diff:
        raise InputIsPower(f"f is exactly a {e}-th power, hence reducible")
    d = 0
    for c in diff.coeffs:
        if c == 0:
            continue
        num = c.numerator if isinstance(c, Fraction) else c
        d = math.gcd(d, abs(num))
    if d == 0:
        raise InputIsPower("difference vanished unexpectedly")
    tame = []
    if d > 1:
        for p in factor_integer(d, budget).primes():
            if e % p != 0:
                tame.append(p)
    wild = (2,) if e == 2 else (3,)
    return CandidateSet(
        e=e,
        tame_primes=tuple(sorted(tame)),
        wild_primes=wild,
        include_minus_one=(e == 2),
        gcd_value=d,
    )
