import random

import pytest

from subfieldscan.config import ScanConfig
from subfieldscan.errors import NoPrimeFound
from subfieldscan.modp import ddf_degrees, roots_mod_p, squarefree_mod_p
from subfieldscan.nfroot import (COMBO_OVERFLOW, NOT_FOUND, PROVED, NumberField,
                                 PrimeData, RootCertificate, find_root,
                                 root_combinatorial, root_lattice, select_prime,
                                 verify_certificate)
from subfieldscan.poly import Poly
from subfieldscan.testkit import multiquadratic_minpoly

ZETA8 = Poly.from_desc([1, 0, 0, 0, 1])
Y2M2 = Poly.from_desc([1, 0, -2])


def cfg(**kw):
    return ScanConfig(**kw)


def normalized(field, cert):
    return field.to_rational_root(Poly(cert.scaled_root))


def test_select_prime_conditions():
    field = NumberField(ZETA8)
    rng = random.Random(0)
    pd = select_prime(field, Y2M2, rng)
    assert pd.p % 2 == 1
    assert squarefree_mod_p(field.f, pd.p)
    assert len(pd.roots) == 2
    for s in pd.roots:
        assert (s * s - 2) % pd.p == 0
    # 3 must have been rejected (2 is a non-residue mod 3)
    assert pd.p != 3 and pd.p != 2
    # the chosen prime minimizes the factor count among qualifying primes;
    # 7 qualifies with r = 2, 17 qualifies with r = 4
    assert pd.p == 7 and pd.r == 2
    assert sum(ddf_degrees(field.f, 17).values()) == 4
    assert len(roots_mod_p(Y2M2, 17)) == 2


def test_select_prime_pool_exhaustion():
    field = NumberField(ZETA8)
    with pytest.raises(NoPrimeFound):
        select_prime(field, Y2M2, random.Random(0), prime_bound=6)


def test_theta_itself():
    field = NumberField(Poly.from_desc([1, 0, -2]))
    res = find_root(field, Y2M2, cfg(), random.Random(0))
    assert res.status == PROVED
    x = normalized(field, res.certificate)
    assert x in (Poly([0, 1]), Poly([0, -1]))


def test_zeta8_sqrt2():
    field = NumberField(ZETA8)
    res = find_root(field, Y2M2, cfg(), random.Random(0))
    assert res.status == PROVED
    x = normalized(field, res.certificate)
    expect = Poly([0, 1, 0, -1])  # theta - theta^3
    assert x in (expect, -expect)


def test_zeta8_sqrt3_absent():
    field = NumberField(ZETA8)
    res = find_root(field, Poly.from_desc([1, 0, -3]), cfg(), random.Random(0))
    assert res.status == NOT_FOUND


def test_strategies_agree():
    field = NumberField(ZETA8)
    for h in (Y2M2, Poly.from_desc([1, 0, 2]), Poly.from_desc([1, 0, 1])):
        ra = find_root(field, h, cfg(strategy="combinatorial"), random.Random(0))
        rb = find_root(field, h, cfg(strategy="lattice"), random.Random(0))
        assert ra.status == rb.status == PROVED
        xa = normalized(field, ra.certificate)
        xb = normalized(field, rb.certificate)
        assert xa in (xb, -xb)


def test_strategies_on_degree8():
    f = multiquadratic_minpoly((2, 3, 5))
    field = NumberField(f)
    h = Poly.from_desc([1, 0, -30])
    ra = find_root(field, h, cfg(strategy="combinatorial"), random.Random(0))
    rb = find_root(field, h, cfg(strategy="lattice"), random.Random(0))
    assert ra.status == rb.status == PROVED
    xa, xb = normalized(field, ra.certificate), normalized(field, rb.certificate)
    assert xa in (xb, -xb)
    r7 = find_root(field, Poly.from_desc([1, 0, -7]), cfg(), random.Random(0))
    assert r7.status == NOT_FOUND


def test_combo_overflow_and_auto_fallback():
    f = multiquadratic_minpoly((2, 3, 5))
    field = NumberField(f)
    rng = random.Random(0)
    pd = select_prime(field, Y2M2, rng)
    schedule = cfg().precision_schedule(pd.p, field.n)
    res = root_combinatorial(field, Y2M2, pd, combo_limit=1, schedule=schedule)
    assert res.status == COMBO_OVERFLOW
    auto = find_root(field, Y2M2, cfg(combo_limit=1), random.Random(0))
    assert auto.status == PROVED and auto.strategy == "lattice"


def test_cubic_root():
    from subfieldscan.poly import compositum_minpoly

    f = compositum_minpoly(Poly.from_desc([1, 0, -21, -35]), Poly.from_desc([1, 0, -5]))
    field = NumberField(f)
    res = find_root(field, Poly.from_desc([1, 0, -21, -35]), cfg(), random.Random(0))
    assert res.status == PROVED
    res2 = find_root(field, Poly.from_desc([1, 0, -3, 1]), cfg(), random.Random(0))
    assert res2.status == NOT_FOUND


def test_verify_certificate_tampering():
    field = NumberField(ZETA8)
    res = find_root(field, Y2M2, cfg(), random.Random(0))
    cert = res.certificate
    assert verify_certificate(field, Y2M2, cert)
    for i in range(len(cert.scaled_root)):
        bad = list(cert.scaled_root)
        bad[i] += 1
        assert not verify_certificate(field, Y2M2, RootCertificate(tuple(bad), Y2M2))
    # certificate checked against the wrong polynomial
    assert not verify_certificate(field, Poly.from_desc([1, 0, -3]), cert)


def test_rational_reconstruction_fallback():
    field = NumberField(ZETA8)
    res = find_root(field, Y2M2, cfg(use_rational_reconstruction=True), random.Random(0))
    std = find_root(field, Y2M2, cfg(), random.Random(0))
    assert res.status == PROVED
    assert res.certificate.scaled_root == std.certificate.scaled_root


def test_newton_lift_invariant():
    from subfieldscan.nfroot import _ScalarRootLift

    h = Poly.from_desc([1, 0, -2])
    lift = _ScalarRootLift(h, 6, 17)
    for k in (2, 4, 8, 16):
        s = lift.lift_to(k)
        assert (s * s - 2) % 17**k == 0
