import random

import mpmath
import pytest

from subfieldscan.eisenstein import split_prime
from subfieldscan.errors import ZeroExponentVector
from subfieldscan.kummer3 import build_generator, cubic_place_basis, enumerate_cubic_candidates
from subfieldscan.poly import Poly, disc_poly
from subfieldscan.ramify import CandidateSet
from subfieldscan.sieve import solve_f3_kernel


def test_conductor7_generator():
    pi = split_prime(7)
    cand = build_generator((0, 1), [(7, pi)])
    assert (cand.a.x, cand.a.y) == (14, -7)
    assert cand.c == 7 and cand.t == 35 and cand.v == -7
    assert cand.minpoly == Poly.from_desc([1, 0, -21, -35])
    assert disc_poly(cand.minpoly) == 3969


def test_unit_axis_generator():
    cand = build_generator((1,), [])
    assert cand.minpoly == Poly.from_desc([1, 0, -3, 1])
    assert cand.c == 1 and cand.t == -1
    assert disc_poly(cand.minpoly) == 81


def test_zero_vector_rejected():
    with pytest.raises(ZeroExponentVector):
        build_generator((0, 0), [(7, split_prime(7))])


def test_candidate_invariants():
    rng = random.Random(0)
    split_primes = [(p, split_prime(p)) for p in (7, 13, 19, 31, 37, 43)]
    for _ in range(100):
        chosen = rng.sample(split_primes, k=rng.randint(1, 3))
        exps = [rng.randint(0, 2)] + [rng.randint(0, 2) for _ in chosen]
        if not any(exps):
            exps[0] = 1
        cand = build_generator(tuple(exps), chosen)
        assert cand.a.norm() == cand.c**3
        assert disc_poly(cand.minpoly) == (9 * cand.v) ** 2


def test_emitted_polynomial_has_the_symmetric_root():
    # u + c/u with u a complex cube root of a must satisfy the cubic
    mpmath.mp.dps = 60
    rng = random.Random(1)
    split_primes = [(p, split_prime(p)) for p in (7, 13, 19, 31)]
    omega = mpmath.mpc(-0.5, mpmath.sqrt(3) / 2)
    for _ in range(100):
        chosen = rng.sample(split_primes, k=rng.randint(1, 2))
        exps = [rng.randint(0, 2)] + [rng.randint(0, 2) for _ in chosen]
        if not any(exps):
            exps[0] = 1
        cand = build_generator(tuple(exps), chosen)
        a = cand.a.x + cand.a.y * omega
        u = mpmath.power(a, mpmath.mpf(1) / 3)
        beta = u + cand.c / u
        residual = abs(beta**3 - 3 * cand.c * beta - cand.t)
        assert residual < mpmath.mpf(10) ** (-30)


def test_enumerate_examples():
    cs = CandidateSet(3, (7,), (3,), False, 7)
    reps = solve_f3_kernel([], 2)
    cands = enumerate_cubic_candidates(cs, reps)
    assert len(cands) == 4
    assert len({c.key() for c in cands}) == 4

    cs = CandidateSet(3, (), (3,), False, 1)
    cands = enumerate_cubic_candidates(cs, solve_f3_kernel([], 1))
    assert len(cands) == 1
    assert cands[0].minpoly == Poly.from_desc([1, 0, -3, 1])

    cs = CandidateSet(3, (5,), (3,), False, 5)
    basis, primes = cubic_place_basis(cs)
    assert basis.primes == ()  # 5 = 2 mod 3 discarded
    cands = enumerate_cubic_candidates(cs, solve_f3_kernel([], 1))
    assert len(cands) == 1


def test_distinct_classes_give_distinct_fields():
    # cross root tests: no candidate's cubic has a root in another's field
    import random

    from subfieldscan.config import ScanConfig
    from subfieldscan.nfroot import NOT_FOUND, PROVED, NumberField, find_root

    cs = CandidateSet(3, (7,), (3,), False, 7)
    cands = enumerate_cubic_candidates(cs, solve_f3_kernel([], 2))
    cfg = ScanConfig()
    for i, ci in enumerate(cands):
        field = NumberField(ci.minpoly)
        for j, cj in enumerate(cands):
            res = find_root(field, cj.minpoly, cfg, random.Random(i * 10 + j))
            assert res.status == (PROVED if i == j else NOT_FOUND)
