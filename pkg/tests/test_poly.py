import random
from fractions import Fraction

import pytest

from subfieldscan.errors import DegreeNotDivisible, NotSquarefree
from subfieldscan.poly import (Poly, compositum_minpoly, disc_poly, eth_root_coeffs,
                               eth_root_newton, gcd_q, is_squarefree_q,
                               normalize_input, poly_from_power_sums, power_sums,
                               resultant, resultant_int, xgcd_q)
from subfieldscan.testkit import sylvester_resultant

X = Poly([0, 1])


def rand_poly(rng, deg, bound=8, monic=False):
    cs = [rng.randint(-bound, bound) for _ in range(deg)]
    cs.append(1 if monic else rng.choice([c for c in range(-bound, bound + 1) if c]))
    return Poly(cs)


def test_arithmetic_basics():
    a = Poly.from_desc([1, 2, 3])
    b = Poly.from_desc([1, -1])
    assert (a * b).coeffs == Poly.from_desc([1, 1, 1, -3]).coeffs
    q, r = a.divmod(b)
    assert q * b + r == a
    assert a.evaluate(2) == 11
    assert a.derivative() == Poly.from_desc([2, 2])


def test_karatsuba_matches_schoolbook():
    rng = random.Random(11)
    a = Poly([rng.randint(-99, 99) for _ in range(150)] + [1])
    b = Poly([rng.randint(-99, 99) for _ in range(130)] + [1])
    prod = a * b
    # direct convolution
    out = [0] * (a.degree + b.degree + 1)
    for i, ai in enumerate(a.coeffs):
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    assert prod == Poly(out)


def test_eth_root_coeffs_examples():
    assert eth_root_coeffs(Poly.from_desc([1, 6, 11, 6, 1]), 2) == Poly.from_desc([1, 3, 1])
    assert eth_root_coeffs(Poly.from_desc([1, 0, 0, 0, 1]), 2) == Poly.from_desc([1, 0, 0])
    assert eth_root_coeffs(Poly.from_desc([1, 3, 3, 1]), 3) == Poly.from_desc([1, 1])
    with pytest.raises(DegreeNotDivisible):
        eth_root_coeffs(Poly.from_desc([1, 0, 0, -2]), 2)


def test_power_sums_examples():
    assert power_sums(Poly.from_desc([1, -3, 2]), 2) == [3, 5]
    assert power_sums(Poly([0, 0, 0, 1]), 3) == [0, 0, 0]
    assert power_sums(Poly.from_desc([1, 0, 1]), 2) == [0, -2]


def test_poly_from_power_sums_examples():
    assert poly_from_power_sums([3, 5]) == Poly.from_desc([1, -3, 2])
    assert poly_from_power_sums([0]) == X
    assert poly_from_power_sums([0, -2]) == Poly.from_desc([1, 0, 1])


def test_newton_roundtrip():
    rng = random.Random(2)
    for _ in range(120):
        n = rng.randint(1, 20)
        f = rand_poly(rng, n, monic=True)
        assert poly_from_power_sums(power_sums(f, n)) == f


def test_eth_root_agreement_and_recovery():
    rng = random.Random(3)
    for _ in range(250):
        e = rng.choice([2, 3, 5])
        n = rng.randint(1, 12 // e) if e > 2 else rng.randint(1, 6)
        g = rand_poly(rng, n, monic=True)
        f = g**e
        assert eth_root_coeffs(f, e) == g
        assert eth_root_newton(f, e) == g


def test_eth_root_newton_equals_coeffs_on_non_powers():
    rng = random.Random(4)
    for _ in range(100):
        e = rng.choice([2, 3])
        n = rng.randint(1, 4)
        f = rand_poly(rng, e * n, monic=True)
        assert eth_root_coeffs(f, e) == eth_root_newton(f, e)


def test_resultant_examples():
    assert resultant(Poly.from_desc([1, 0, -2]), Poly.from_desc([1, 0, -3])) == 1
    g = Poly.from_desc([2, -1, 7])
    a = 4
    assert resultant(Poly.from_desc([1, -a]), g) == g.evaluate(a)
    assert resultant(Poly.from_desc([1, 0, -2]), Poly.from_desc([1, 0, -2])) == 0


def test_resultant_properties():
    rng = random.Random(5)
    for _ in range(60):
        f = rand_poly(rng, rng.randint(1, 4))
        g = rand_poly(rng, rng.randint(1, 4))
        h = rand_poly(rng, rng.randint(1, 3))
        sign = -1 if (f.degree * g.degree) % 2 else 1
        assert resultant(f, g) == sign * resultant(g, f)
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)
        assert resultant(f, g) == sylvester_resultant(f, g)


def test_disc_poly():
    assert disc_poly(Poly.from_desc([1, 0, -2])) == 8
    assert disc_poly(Poly.from_desc([1, 0, -3, 1])) == 81
    assert disc_poly(Poly([0, 0, 1])) == 0


def test_compositum_examples():
    r = compositum_minpoly(Poly.from_desc([1, 0, -2]), Poly.from_desc([1, 0, -3]))
    assert r == Poly.from_desc([1, 0, -10, 0, 1])
    h = Poly.from_desc([1, 4, -7, 2])
    shifted = compositum_minpoly(Poly.from_desc([1, -1]), h)
    # roots are beta + 1 for roots beta of h, i.e. h(X - 1)
    lin = Poly([-1, 1])
    expect = Poly()
    for k in range(h.degree + 1):
        if h[k]:
            expect = expect + lin**k * h[k]
    assert shifted == expect
    with pytest.raises(NotSquarefree):
        compositum_minpoly(Poly.from_desc([1, 0, -2]), Poly.from_desc([1, 0, -2]), shift=1)


def test_normalize_examples():
    f, lam = normalize_input(Poly.from_desc([1, 0, Fraction(-1, 4)]))
    assert f == Poly.from_desc([1, 0, -1]) and lam == 2
    f, lam = normalize_input(Poly.from_desc([1, 0, -7]))
    assert f == Poly.from_desc([1, 0, -7]) and lam == 1
    f, lam = normalize_input(Poly.from_desc([2, 0, -4]))
    assert f == Poly.from_desc([1, 0, -2]) and lam == 1


def test_normalize_root_scaling():
    rng = random.Random(6)
    for _ in range(50):
        n = rng.randint(2, 6)
        raw = Poly([Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(n)]
                   + [Fraction(rng.randint(1, 5))])
        f, lam = normalize_input(raw)
        assert f.is_monic() and f.is_integral()
        # f(lam * x) = lam^n * raw(x) / lc  for every root-free sample point
        for x in (Fraction(1, 3), Fraction(-2, 5), 2):
            lhs = f.evaluate(lam * x)
            rhs = lam**f.degree * raw.evaluate(x) / raw.lc
            assert lhs == rhs


def test_gcd_and_squarefree():
    f = Poly.from_desc([1, 0, -2])
    assert gcd_q(f * f, f.derivative() * f) == f.monic()
    assert is_squarefree_q(f)
    assert not is_squarefree_q(f * f)
    g, s, t = xgcd_q(f, f.derivative())
    assert g.degree == 0 or g == Poly([1])
    assert s * f + t * f.derivative() == g
