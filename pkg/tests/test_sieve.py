import itertools
import random

import pytest

from subfieldscan.eisenstein import EisensteinInt, OMEGA, cubic_residue_class, split_prime
from subfieldscan.errors import PrimeInBasis
from subfieldscan.sieve import (CubicClass, PlaceBasis, QuadClass, Row, canonical_f3,
                                classify_prime_cubic, classify_prime_quadratic,
                                cubic_basis_generators, cubic_constraint,
                                quad_constraint, solve_f2, solve_f3_kernel,
                                vector_satisfies)


def brute_force_f2(rows, width):
    sols = []
    for vec in itertools.product((0, 1), repeat=width):
        if all(vector_satisfies(r, vec, 2) for r in rows):
            sols.append(vec)
    return set(sols)


def test_classify_quadratic_examples():
    assert classify_prime_quadratic({1: 1, 3: 1}, 4) == QuadClass.SPLIT
    assert classify_prime_quadratic({2: 2}, 4) == QuadClass.NO_INFO
    assert classify_prime_quadratic({4: 3}, 12) == QuadClass.INERT


def test_classify_quadratic_subset_sum_matches_bruteforce():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.choice([4, 6, 8, 10, 12])
        degs = {}
        left = n
        while left:
            d = rng.randint(1, left)
            degs[d] = degs.get(d, 0) + 1
            left -= d
        cls = classify_prime_quadratic(degs, n)
        items = [d for d, c in degs.items() for _ in range(c)]
        reachable = set()
        for mask in range(1 << len(items)):
            reachable.add(sum(items[i] for i in range(len(items)) if (mask >> i) & 1))
        if any(d % 2 for d in degs):
            assert cls == QuadClass.SPLIT
        elif n // 2 in reachable:
            assert cls == QuadClass.NO_INFO
        else:
            assert cls == QuadClass.INERT


def test_quad_constraint_examples():
    basis = PlaceBasis(2, (2,))
    row = quad_constraint(5, QuadClass.INERT, basis)
    assert row.coeffs == (0, 1) and row.rhs == 1
    row = quad_constraint(3, QuadClass.INERT, basis)
    assert row.coeffs == (1, 1) and row.rhs == 1
    assert quad_constraint(17, QuadClass.SPLIT, basis) is None
    with pytest.raises(PrimeInBasis):
        quad_constraint(2, QuadClass.SPLIT, basis)
    with pytest.raises(ValueError):
        quad_constraint(7, QuadClass.NO_INFO, basis)


def test_solve_f2_examples():
    sol = solve_f2([Row((0, 1), 1, 5), Row((1, 1), 1, 3)], 2)
    assert not sol.inconsistent
    assert sol.particular == (0, 1) and sol.kernel == []
    sol = solve_f2([], 2)
    assert len(sol.kernel) == 2
    assert len(set(sol.enumerate())) == 4
    sol = solve_f2([Row((1, 0), 0, 3), Row((1, 0), 1, 5)], 2)
    assert sol.inconsistent


def test_solve_f2_matches_bruteforce():
    rng = random.Random(1)
    for _ in range(150):
        width = rng.randint(1, 6)
        rows = [Row(tuple(rng.randint(0, 1) for _ in range(width)), rng.randint(0, 1), 0)
                for _ in range(rng.randint(0, 5))]
        sol = solve_f2(rows, width)
        brute = brute_force_f2(rows, width)
        if sol.inconsistent:
            assert brute == set()
        else:
            assert set(sol.enumerate()) == brute


def test_zero_vector_never_solves_inert_system():
    rng = random.Random(2)
    for _ in range(100):
        width = rng.randint(1, 5)
        rows = [Row(tuple(rng.randint(0, 1) for _ in range(width)), 1, 0)]
        sol = solve_f2(rows, width)
        if not sol.inconsistent:
            assert tuple([0] * width) not in set(sol.enumerate())


def test_classify_cubic_examples():
    assert classify_prime_cubic({1: 1, 3: 1}) == CubicClass.SPLITS_ALL
    assert classify_prime_cubic({3: 3}) == CubicClass.NO_INFO
    assert classify_prime_cubic({6: 1, 3: 1}) == CubicClass.NO_INFO


def test_cubic_constraint_slot_values():
    assert cubic_residue_class(OMEGA, 7) == 2
    b7 = split_prime(7)
    gen = b7 * b7.conj() * b7.conj()
    assert cubic_residue_class(EisensteinInt(2, 0), 5) == 0
    basis = PlaceBasis(3, (7,))
    gens = cubic_basis_generators(basis)
    assert gens[0] == OMEGA and gens[1] == gen
    row = cubic_constraint(13, basis, gens)
    if row is not None:
        assert len(row.coeffs) == 2 and row.rhs == 0


def test_solve_f3_kernel_examples():
    reps = solve_f3_kernel([], 2)
    assert reps == [(1, 0), (0, 1), (1, 1), (1, 2)]
    reps = solve_f3_kernel([Row((1, 0), 0, 7), Row((0, 1), 0, 13)], 2)
    assert reps == []
    reps = solve_f3_kernel([Row((1, 2), 0, 7)], 2)
    # kernel of x + 2y = 0 is spanned by (1, 1)
    assert reps == [(1, 1)]


def test_solve_f3_kernel_matches_bruteforce():
    rng = random.Random(3)
    for _ in range(150):
        width = rng.randint(1, 4)
        rows = [Row(tuple(rng.randint(0, 2) for _ in range(width)), 0, 0)
                for _ in range(rng.randint(0, 3))]
        reps = solve_f3_kernel(rows, width)
        brute = set()
        for vec in itertools.product((0, 1, 2), repeat=width):
            if any(vec) and all(vector_satisfies(r, vec, 3) for r in rows):
                brute.add(canonical_f3(vec))
        assert set(reps) == brute
        assert len(reps) == len(set(reps))
