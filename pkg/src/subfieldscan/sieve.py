"""Frobenius cycle-type constraints on subfield candidates.

An unramified prime whose factor-degree pattern mod p is known constrains
every quadratic (or cyclic cubic) subfield at once: each usable prime
yields one linear equation over F2 (resp. F3) in the exponent vector of
the candidate discriminant (resp. Kummer class) over a fixed place basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .arith import legendre
from .eisenstein import EisensteinInt, OMEGA, cubic_residue_class, split_prime
from .errors import PrimeInBasis


class QuadClass(Enum):
    SPLIT = "split"          # splits in every quadratic subfield
    INERT = "inert"          # inert in every quadratic subfield
    NO_INFO = "no_info"


class CubicClass(Enum):
    SPLITS_ALL = "splits_in_all_cubic"
    NO_INFO = "no_info"


@dataclass(frozen=True)
class PlaceBasis:
    """Ordered slots for exponent vectors.

    e = 2: slot 0 is the sign place (-1), slots 1.. are primes (2 always
    present).  e = 3: slot 0 is the cube-root-of-unity axis, slots 1.. are
    primes p = 1 (mod 3) with a fixed split prime element each.
    """

    e: int
    primes: tuple[int, ...]

    @property
    def width(self) -> int:
        return len(self.primes) + 1

    def delta_of_vector(self, vec) -> int:
        """e = 2 only: the squarefree discriminant for an exponent vector."""
        d = -1 if vec[0] else 1
        for bit, p in zip(vec[1:], self.primes):
            if bit:
                d *= p
        return d

    def vector_of_delta(self, delta: int):
        """Inverse of delta_of_vector; None if delta is not representable."""
        vec = [0] * self.width
        if delta < 0:
            vec[0] = 1
            delta = -delta
        for i, p in enumerate(self.primes):
            if delta % p == 0:
                vec[i + 1] = 1
                delta //= p
        return tuple(vec) if delta == 1 else None


@dataclass(frozen=True)
class Row:
    coeffs: tuple[int, ...]
    rhs: int
    prime: int


@dataclass
class SolutionSpace:
    inconsistent: bool
    particular: tuple[int, ...] | None
    kernel: list[tuple[int, ...]]

    def enumerate(self):
        """All solution vectors (F2 systems)."""
        if self.inconsistent:
            return
        base = list(self.particular)
        dim = len(self.kernel)
        for mask in range(1 << dim):
            v = list(base)
            for i in range(dim):
                if (mask >> i) & 1:
                    v = [(a + b) % 2 for a, b in zip(v, self.kernel[i])]
            yield tuple(v)


def classify_prime_quadratic(degrees: dict[int, int], n: int) -> QuadClass:
    """Split / inert classification from the factor-degree multiset mod p.

    An odd factor degree forces p to split in every quadratic subfield.  If
    no sub-multiset of the degrees sums to n/2, p cannot split in any, so it
    is inert in every quadratic subfield.  Otherwise no information.
    """
    if n % 2 != 0:
        raise ValueError("degree must be even")
    if any(d % 2 == 1 for d in degrees):
        return QuadClass.SPLIT
    half = n // 2
    reachable = 1
    mask = (1 << (half + 1)) - 1
    for d, count in degrees.items():
        for _ in range(count):
            reachable |= (reachable << d) & mask
    if (reachable >> half) & 1:
        return QuadClass.NO_INFO
    return QuadClass.INERT


def quad_constraint(p: int, cls: QuadClass, basis: PlaceBasis) -> Row | None:
    """The F2 row contributed by an odd prime with known classification.

    Coefficient for slot m is (1 - legendre(m, p)) / 2; right-hand side is
    0 for split, 1 for inert.  Trivial rows (all zero, rhs 0) return None.
    """
    if cls == QuadClass.NO_INFO:
        raise ValueError("no constraint from an unclassified prime")
    if p in basis.primes:
        raise PrimeInBasis(f"{p} is in the place basis")
    coeffs = [(1 - legendre(-1, p)) // 2]
    for q in basis.primes:
        coeffs.append((1 - legendre(q, p)) // 2)
    rhs = 0 if cls == QuadClass.SPLIT else 1
    if rhs == 0 and not any(coeffs):
        return None
    return Row(tuple(coeffs), rhs, p)


def solve_f2(rows: list[Row], width: int) -> SolutionSpace:
    """Gaussian elimination over F2: particular solution plus kernel basis."""
    aug = [list(r.coeffs) + [r.rhs] for r in rows]
    pivots = {}
    for row in aug:
        cur = list(row)
        for col, rr in pivots.items():
            if cur[col]:
                cur = [(a + b) % 2 for a, b in zip(cur, rr)]
        lead = next((i for i in range(width) if cur[i]), None)
        if lead is None:
            if cur[width]:
                return SolutionSpace(True, None, [])
            continue
        pivots[lead] = cur
    # back-substitute to reduced echelon form
    for col in sorted(pivots, reverse=True):
        rr = pivots[col]
        for col2, other in pivots.items():
            if col2 != col and other[col]:
                pivots[col2] = [(a + b) % 2 for a, b in zip(other, rr)]
    particular = [0] * width
    for col, rr in pivots.items():
        particular[col] = rr[width]
    kernel = []
    free_cols = [c for c in range(width) if c not in pivots]
    for fc in free_cols:
        v = [0] * width
        v[fc] = 1
        for col, rr in pivots.items():
            if rr[fc]:
                v[col] = rr[fc]
        kernel.append(tuple(v))
    return SolutionSpace(False, tuple(particular), kernel)


def classify_prime_cubic(degrees: dict[int, int]) -> CubicClass:
    """A factor degree not divisible by 3 forces splitting in every cyclic
    cubic subfield; otherwise nothing can be concluded."""
    if any(d % 3 != 0 for d in degrees):
        return CubicClass.SPLITS_ALL
    return CubicClass.NO_INFO


def cubic_basis_generators(basis: PlaceBasis) -> list[EisensteinInt]:
    """Slot generators: the unit axis, then pi * conj(pi)**2 per split prime."""
    gens = [OMEGA]
    for p in basis.primes:
        pi = split_prime(p)
        gens.append(pi * pi.conj() * pi.conj())
    return gens


def cubic_constraint(q: int, basis: PlaceBasis, generators=None) -> Row | None:
    """Homogeneous F3 row at a prime q that splits in all cubic subfields."""
    gens = generators if generators is not None else cubic_basis_generators(basis)
    coeffs = tuple(cubic_residue_class(g, q) for g in gens)
    if not any(coeffs):
        return None
    return Row(coeffs, 0, q)


def _f3_reduce(vec, pivots):
    v = list(vec)
    for col, row in pivots.items():
        if v[col]:
            factor = v[col] * pow(row[col], -1, 3) % 3
            v = [(a - factor * b) % 3 for a, b in zip(v, row)]
    return v


def solve_f3_kernel(rows: list[Row], width: int) -> list[tuple[int, ...]]:
    """Kernel representatives of a homogeneous F3 system, one per pair
    {v, 2v}, enumerated deterministically: (3**dim - 1) / 2 vectors."""
    pivots = {}
    for r in rows:
        cur = _f3_reduce(r.coeffs, pivots)
        lead = next((i for i in range(width) if cur[i]), None)
        if lead is not None:
            inv = pow(cur[lead], -1, 3)
            pivots[lead] = [c * inv % 3 for c in cur]
    # reduced echelon: clear pivot columns from the other rows
    for col in sorted(pivots, reverse=True):
        rr = pivots[col]
        for col2 in pivots:
            if col2 != col and pivots[col2][col]:
                factor = pivots[col2][col]
                pivots[col2] = [(a - factor * b) % 3 for a, b in zip(pivots[col2], rr)]
    free_cols = [c for c in range(width) if c not in pivots]
    kernel = []
    for fc in free_cols:
        v = [0] * width
        v[fc] = 1
        for col, row in pivots.items():
            v[col] = (-row[fc]) % 3
        kernel.append(tuple(v))
    reps = []
    seen = set()
    dim = len(kernel)
    for mask in range(1, 3**dim):
        coeffs = []
        mm = mask
        for _ in range(dim):
            coeffs.append(mm % 3)
            mm //= 3
        v = [0] * width
        for c, kv in zip(coeffs, kernel):
            if c:
                v = [(a + c * b) % 3 for a, b in zip(v, kv)]
        vt = canonical_f3(v)
        if vt in seen:
            continue
        seen.add(vt)
        reps.append(vt)
    return reps


def canonical_f3(vec) -> tuple[int, ...]:
    """The representative of {v, 2v} whose first nonzero coordinate is 1."""
    lead = next((a for a in vec if a), None)
    if lead == 2:
        return tuple((2 * a) % 3 for a in vec)
    return tuple(vec)


def vector_satisfies(row: Row, vec, modulus: int) -> bool:
    return sum(c * v for c, v in zip(row.coeffs, vec)) % modulus == row.rhs % modulus
