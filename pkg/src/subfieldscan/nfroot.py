"""Exact root finding for small-degree polynomials over a number field.

Decides whether a monic integral h of degree 2 or 3 has a root in
L = Q[X]/(f) and, in the positive case, produces an independently
verifiable certificate.  Positive answers are always sound: the returned
scaled root y = f'(theta) * x satisfies a division-free integer polynomial
congruence that verify_certificate rechecks from scratch.  Negative
answers are "not found up to the precision cap" and are NOT proofs of
absence; the scan layer upgrades them with Frobenius witnesses when it can.

Two strategies share the same modular setup (a prime p where f mod p is
squarefree and h mod p splits into distinct roots):

* combinatorial: Hensel-lift the CRT idempotents of the factorization of
  f mod p, lift the scalar roots of h, and enumerate the assignments of
  roots to components (the first component's root choice is fixed, which
  is complete because roots of h in L biject with the scalar roots in any
  fixed completion).
* lattice: lift a single factor of maximal degree, read off the scaled
  root modulo (p**k, F1), and reconstruct its global coefficient vector
  with LLL plus Babai rounding on the divisibility lattice.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import modp
from .arith import inverse_mod, iter_primes
from .config import ScanConfig
from .errors import NoPrimeFound
from .lattice import babai_nearest, lll_reduce
from .poly import Poly, is_squarefree_q, xgcd_q

PROVED = "proved"
NOT_FOUND = "not_found"
COMBO_OVERFLOW = "combo_overflow"


class NumberField:
    """Q[X]/(f) for a monic integral squarefree f; theta is the class of X."""

    def __init__(self, f: Poly):
        if not (f.is_monic() and f.is_integral()):
            raise ValueError("defining polynomial must be monic and integral")
        if f.degree < 2:
            raise ValueError("degree must be at least 2")
        if not is_squarefree_q(f):
            raise ValueError("defining polynomial has repeated roots")
        self.f = f
        self.n = f.degree
        self.fprime = f.derivative()
        self._fprime_inv = None

    def fprime_inv(self) -> Poly:
        """(f')^(-1) mod f over Q, computed once on demand."""
        if self._fprime_inv is None:
            g, _, t = xgcd_q(self.f, self.fprime)
            if g.degree != 0:
                raise ValueError("f' is not invertible mod f")
            self._fprime_inv = t % self.f
        return self._fprime_inv

    def to_rational_root(self, y: Poly) -> Poly:
        return (y * self.fprime_inv()) % self.f


@dataclass(frozen=True)
class RootCertificate:
    """Scaled root y(theta) = f'(theta) * x with h(x) = 0; length-n vector."""

    scaled_root: tuple[int, ...]
    h: Poly


@dataclass(frozen=True)
class PrimeData:
    p: int
    factors: tuple[tuple[int, ...], ...]   # monic irreducible factors of f mod p
    roots: tuple[int, ...]                 # the deg(h) distinct roots of h mod p

    @property
    def r(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class RootSearch:
    status: str
    certificate: RootCertificate | None = None
    strategy: str | None = None


def select_prime(field: NumberField, h: Poly, rng: random.Random,
                 prime_bound: int = 50_000) -> PrimeData:
    """An odd prime where f mod p is squarefree and h mod p splits into
    deg(h) distinct roots, minimizing the number of factors of f mod p
    among the first 25 qualifying primes."""
    qualifying = []
    for p in iter_primes(3, prime_bound):
        if int(field.f.lc) % p == 0:
            continue
        try:
            if not modp.squarefree_mod_p(field.f, p):
                continue
        except Exception:
            continue
        roots = modp.roots_mod_p(h, p)
        if len(roots) != h.degree:
            continue
        degs = modp.ddf_degrees(field.f, p)
        r = sum(degs.values())
        qualifying.append((r, p, tuple(sorted(roots))))
        if len(qualifying) >= 25:
            break
    if not qualifying:
        raise NoPrimeFound(f"no usable prime below {prime_bound}")
    r, p, roots = min(qualifying, key=lambda t: (t[0], t[1]))
    factors = tuple(tuple(fac) for fac in modp.factor_mod_p(field.f, p, rng))
    return PrimeData(p, factors, roots)


# -- certificate checking -------------------------------------------------------


def _certificate_residual(field: NumberField, h: Poly, y: Poly) -> Poly:
    """sum_j h_j * y**j * f'**(deg h - j) mod f, over Z; zero iff y proves
    a root (it is f'**deg(h) * h(y / f') cleared of denominators)."""
    m = h.degree
    fp = field.fprime
    acc = Poly([1])
    for j in range(m - 1, -1, -1):
        acc = (acc * y) % field.f
        if h[j] != 0:
            acc = acc + (fp ** (m - j) * h[j]) % field.f
    return acc % field.f


def verify_certificate(field: NumberField, h: Poly, cert: RootCertificate) -> bool:
    """Exact integer re-check of the division-free root identity."""
    if len(cert.scaled_root) > field.n:
        return False
    y = Poly(cert.scaled_root)
    if not y.is_integral():
        return False
    return not _certificate_residual(field, h, y)


# -- shared lifting helpers -----------------------------------------------------


class _ScalarRootLift:
    """Newton lift of a simple root of h from F_p into Z/p^k."""

    def __init__(self, h: Poly, s0: int, p: int):
        self.h = h
        self.hprime = h.derivative()
        self.p = p
        self.k = 1
        self.s = s0 % p
        self.u = inverse_mod(int(self.hprime.evaluate(s0)) % p, p)

    def lift_to(self, k: int) -> int:
        while self.k < k:
            k2 = min(2 * self.k, k)
            m = self.p**k2
            s = (self.s - int(self.h.evaluate(self.s)) * self.u) % m
            u = self.u * (2 - int(self.hprime.evaluate(s)) * self.u) % m
            self.s, self.u, self.k = s, u, k2
        return self.s


class _IdempotentLift:
    """CRT idempotents of the factorization of f mod p, lifted to p^k."""

    def __init__(self, field: NumberField, factors, p: int):
        self.field = field
        self.p = p
        self.k = 1
        f_p = modp.monic(modp.from_poly(field.f, p), p)
        idems = []
        for fac in factors:
            fac = list(fac)
            cof = modp.pdivmod(f_p, fac, p)[0]
            g, s, _ = modp.xgcd(cof, fac, p)
            if modp.deg(g) != 0:
                raise ValueError("factors are not pairwise coprime")
            idems.append(modp.mulmod(cof, s, f_p, p))
        self.idems = idems

    def lift_to(self, k: int) -> list[list[int]]:
        while self.k < k:
            k2 = min(2 * self.k, k)
            m = self.p**k2
            f_m = modp.from_poly(self.field.f, m)
            new = []
            for e in self.idems:
                e2 = modp.mulmod(e, e, f_m, m)
                e3 = modp.mulmod(e2, e, f_m, m)
                new.append(modp.sub(modp.scale(e2, 3, m), modp.scale(e3, 2, m), m))
            self.idems, self.k = new, k2
        return self.idems


def _attempt_certificate(field: NumberField, h: Poly, x_vec: list[int], m: int) -> RootCertificate | None:
    """Scale x by f', center-lift, and run the exact check.

    Skips the exact check when the centered coefficients are too close to
    the modulus to plausibly be the true values at this precision.
    """
    f_m = modp.from_poly(field.f, m)
    fp_m = modp.from_poly(field.fprime, m)
    y = modp.mulmod(fp_m, x_vec, f_m, m)
    yc = modp.center_lift(y, m)
    if any(abs(c) > m // 16 for c in yc):
        return None
    cert = RootCertificate(tuple(yc + [0] * (field.n - len(yc)))[: field.n], h)
    if verify_certificate(field, h, cert):
        return cert
    return None


def _attempt_certificate_rr(field: NumberField, h: Poly, x_vec: list[int], m: int) -> RootCertificate | None:
    """Fallback reconstruction: recover the rational coefficients of the
    unscaled root coefficient-wise, then verify exactly over Q."""
    from .arith import rational_reconstruction
    from fractions import Fraction

    coeffs = []
    for c in x_vec + [0] * (field.n - len(x_vec)):
        r = rational_reconstruction(c % m, m)
        if r is None:
            return None
        coeffs.append(r)
    x = Poly(coeffs)
    hx = Poly()
    for hc in reversed(h.coeffs):
        hx = (hx * x) % field.f
        if hc != 0:
            hx = hx + Poly([Fraction(hc)])
    if hx:
        return None
    y = (x * field.fprime) % field.f
    if not y.is_integral():
        return None
    cert = RootCertificate(tuple(int(c) for c in y.coeffs) + (0,) * (field.n - len(y.coeffs)), h)
    return cert if verify_certificate(field, h, cert) else None


# -- strategy A: CRT over modular factors ---------------------------------------


def root_combinatorial(field: NumberField, h: Poly, pdata: PrimeData,
                       combo_limit: int, schedule: list[int],
                       rr_fallback: bool = False) -> RootSearch:
    """Enumerate assignments of the roots of h mod p to the completions of
    L at p, lift each to the schedule precisions, and return the first
    assignment whose reconstructed scaled root passes the exact check."""
    r = pdata.r
    n_assign = h.degree ** (r - 1)
    if n_assign > combo_limit:
        return RootSearch(COMBO_OVERFLOW, strategy="combinatorial")
    p = pdata.p
    attempt = _attempt_certificate_rr if rr_fallback else _attempt_certificate
    idem = _IdempotentLift(field, pdata.factors, p)
    lifts = [_ScalarRootLift(h, s, p) for s in pdata.roots]
    for k in schedule:
        m = p**k
        idems = idem.lift_to(k)
        roots_k = [lift.lift_to(k) for lift in lifts]
        for combo in itertools.product(range(h.degree), repeat=r - 1):
            assign = (0,) + combo
            x = []
            for s_idx, e in zip(assign, idems):
                x = modp.add(x, modp.scale(e, roots_k[s_idx], m), m)
            cert = attempt(field, h, x, m)
            if cert is not None:
                return RootSearch(PROVED, cert, strategy="combinatorial")
    return RootSearch(NOT_FOUND, strategy="combinatorial")


# -- strategy B: one completion plus lattice reconstruction ----------------------


def root_lattice(field: NumberField, h: Poly, pdata: PrimeData,
                 schedule: list[int]) -> RootSearch:
    """Lift one maximal-degree factor F1 and one root of h, then recover the
    global scaled root from its image mod (p**k, F1) by LLL and Babai
    rounding on the lattice of polynomials divisible by F1 mod p**k."""
    p = pdata.p
    n = field.n
    d1 = max(len(fac) for fac in pdata.factors) - 1
    f1 = next(list(fac) for fac in pdata.factors if len(fac) - 1 == d1)
    lifter = modp.HenselLift(field.f, f1, p)
    root_lift = _ScalarRootLift(h, pdata.roots[0], p)
    for k in schedule:
        m = p**k
        big_f1 = lifter.lift_to(k)
        s = root_lift.lift_to(k)
        fp_loc = modp.pmod(modp.from_poly(field.fprime, m), big_f1, m)
        t = modp.scale(fp_loc, s, m)
        t_ext = list(t) + [0] * (n - len(t))
        basis = []
        for i in range(d1):
            row = [0] * n
            row[i] = m
            basis.append(row)
        for j in range(n - d1):
            row = [0] * n
            for idx, c in enumerate(big_f1):
                row[j + idx] = c
            basis.append(row)
        reduced = lll_reduce(basis)
        v = babai_nearest(reduced, t_ext)
        y = [a - b for a, b in zip(t_ext, v)]
        cert = RootCertificate(tuple(y), h)
        if verify_certificate(field, h, cert):
            return RootSearch(PROVED, cert, strategy="lattice")
    return RootSearch(NOT_FOUND, strategy="lattice")


# -- entry point -----------------------------------------------------------------


def find_root(field: NumberField, h: Poly, config: ScanConfig,
              rng: random.Random) -> RootSearch:
    """Strategy dispatch: combinatorial when the assignment count fits the
    combo limit, lattice otherwise (or as forced by the config)."""
    if not (h.is_monic() and h.is_integral() and h.degree in (2, 3)):
        raise ValueError("h must be monic integral of degree 2 or 3")
    pdata = select_prime(field, h, rng, config.select_prime_bound)
    schedule = config.precision_schedule(pdata.p, field.n)
    strategy = config.strategy
    if strategy == "auto":
        strategy = "combinatorial" if h.degree ** (pdata.r - 1) <= config.combo_limit else "lattice"
    if strategy == "combinatorial":
        result = root_combinatorial(field, h, pdata, config.combo_limit, schedule,
                                    config.use_rational_reconstruction)
        if result.status == COMBO_OVERFLOW and config.strategy == "auto":
            return root_lattice(field, h, pdata, schedule)
        return result
    if strategy == "lattice":
        return root_lattice(field, h, pdata, schedule)
    raise ValueError(f"unknown strategy {strategy!r}")
