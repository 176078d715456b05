"""Exact combinatorial and dimension-bound formulas.

Everything returns Python integers; strict inequalities involving fractional
powers are decided by cross-multiplied integer powers (binom(m,j) > m^(j/2)
is tested as binom^2 > m^j).  ``pow_gt`` compares b1^e1 against b2^e2 without
materialising astronomically large towers.
"""

from __future__ import annotations

import math


class DomainError(ValueError):
    pass


class HypothesisViolated(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


def binom(m: int, j: int) -> int:
    if not 0 <= j <= m:
        raise DomainError(f"binom({m},{j}) outside 0 <= j <= m")
    return math.comb(m, j)


def multinomial(m: int, a: int, b: int) -> int:
    """m! / (a! b! (m-a-b)!)."""
    if a < 0 or b < 0 or a + b > m:
        raise DomainError(f"multinomial({m},{a},{b}) needs a,b >= 0 and a+b <= m")
    return math.comb(m, a) * math.comb(m - a, b)


def check_bc_app_part1(m: int, j: int) -> bool:
    """binom(m,j) > m^(j/2) under 1 <= j <= sqrt(m), m >= 2.

    m = 1 (where both sides equal 1) is outside the hypothesis here.
    """
    if m < 2 or j < 1 or j * j > m:
        raise HypothesisViolated(f"(m,j)=({m},{j}) violates 1 <= j <= sqrt(m), m >= 2")
    return binom(m, j) ** 2 > m**j


def check_bc_app_part2(m: int, a: int, b: int) -> bool:
    """multinomial(m,a,b) >= binom(m, floor(m/2)) under a,b < (m+1)/2 and
    m/2 < a+b <= m."""
    if not (2 * a < m + 1 and 2 * b < m + 1 and m < 2 * (a + b) and a + b <= m):
        raise HypothesisViolated(f"(m,a,b)=({m},{a},{b}) violates the hypotheses")
    return multinomial(m, a, b) >= binom(m, m // 2)


def check_bc_app(m: int, j: int, a: int, b: int) -> tuple[bool, bool]:
    return check_bc_app_part1(m, j), check_bc_app_part2(m, a, b)


def check_bc_lower(rank: int) -> bool:
    """(rank+1) * binom(rank, floor(rank/2)) > 2^rank, rank >= 2."""
    if rank < 2:
        raise DomainError(f"rank {rank} < 2")
    return (rank + 1) * binom(rank, rank // 2) > (1 << rank)


def easy_lower(family: str, rank: int, e: int) -> int:
    """Generic orbit lower bound: binom(rank+1, e) for A, 2^e binom(rank, e)
    for B/C/D, valid for e <= (rank+1)/2 resp. e <= rank-3."""
    if e < 0:
        raise PreconditionViolated("e < 0")
    if family == "A":
        if 2 * e > rank + 1:
            raise PreconditionViolated(f"e = {e} not <= (rank+1)/2")
        return binom(rank + 1, e)
    if family in ("B", "C", "D"):
        if e > rank - 3:
            raise PreconditionViolated(f"e = {e} not <= rank-3")
        return (1 << e) * binom(rank, e)
    raise DomainError(f"unknown family {family!r}")


def easy_upper(dim_w: int, e: int) -> int:
    if dim_w < 1 or e < 0:
        raise PreconditionViolated("need dim_w >= 1 and e >= 0")
    return dim_w**e


def lowerbd1(rank: int, e: int) -> int:
    """A-type bound binom(rank+1, floor(rank/2)) in the regime e > (rank+1)/2."""
    if 2 * e <= rank + 1:
        raise PreconditionViolated(f"e = {e} not > (rank+1)/2")
    return binom(rank + 1, rank // 2)


def lowerbd2(rank: int, e: int, r_nonzero: bool) -> int:
    """B/C/D lower bound: 2^(rank-1) when the right half is supported or e is
    large; else binom(rank, e), upgraded by 2^e from rank 7 on."""
    if rank < 3:
        raise PreconditionViolated(f"rank {rank} < 3")
    if r_nonzero:
        return 1 << (rank - 1)
    if 2 * e > rank + 1:
        return 1 << (rank - 1)
    if rank >= 7:
        return (1 << e) * binom(rank, e)
    return binom(rank, e)


def newupper(dim_s: int, e: int, index_h_pchi: int) -> int:
    """(dim S)^e * [H : P_chi]; requires dim S > e."""
    if dim_s <= e:
        raise PreconditionViolated(f"dim S = {dim_s} not > e = {e}")
    if index_h_pchi < 1:
        raise PreconditionViolated("index must be positive")
    return dim_s**e * index_h_pchi


def nr_sandwich(dim_s: int, e: int, l_index: int, h_p_index: int) -> tuple[int, int]:
    """Bounds for an e-fold twisted tensor product:
    (dim_s * l_index)^e <= dim V <= dim_s^e * h_p_index * l_index."""
    if e < 2:
        raise PreconditionViolated(f"e = {e} < 2")
    lower = (dim_s * l_index) ** e
    upper = dim_s**e * h_p_index * l_index
    return lower, upper


def nr_sandwich_contradicts(e: int, l_index: int, h_p_index: int) -> bool:
    """True when the sandwich is empty, i.e. l_index^(e-1) > h_p_index."""
    if e < 2:
        raise PreconditionViolated(f"e = {e} < 2")
    return l_index ** (e - 1) > h_p_index


def q2_character_identity(q: int, q2_order: int) -> bool:
    """Character-degree count for the 2-space-stabilizer radical: |Q2|/q
    linear characters plus q^3 - q^2 of degree sqrt([Q2 : Z(Q2)]), with
    [Q2 : Z(Q2)] = Q2_order / q^3.  Verifies the squared-degree sum equals
    the group order."""
    if q < 2 or q & (q - 1):
        raise DomainError(f"q = {q} is not a power of 2")
    if q2_order % q**3:
        raise DomainError(f"q^3 does not divide |Q2| = {q2_order}")
    index = q2_order // q**3
    root = math.isqrt(index)
    if root * root != index:
        raise DomainError(f"[Q2:Z(Q2)] = {index} is not a perfect square")
    return q2_order // q + (q**3 - q**2) * index == q2_order


def propfinal_check(q: int, r: int) -> bool:
    """Tensor-square contradiction for even q >= 4, r >= 3: the comparison
    q^(4r-6) (q-1)^6 against c (q^2r - 1)(q^(2r-2) - 1) must come out >=,
    with c = 4 generically and c = 2 at q = 4 (halved upper bound)."""
    if q % 2 or q < 4 or q & (q - 1):
        raise DomainError(f"q = {q} must be an even prime power >= 4")
    if r < 3:
        raise DomainError(f"r = {r} < 3")
    lhs = q ** (4 * r - 6) * (q - 1) ** 6
    rhs = (q ** (2 * r) - 1) * (q ** (2 * r - 2) - 1)
    factor = 2 if q == 4 else 4
    return lhs >= factor * rhs


def pow_gt(b1: int, e1: int, b2: int, e2: int) -> bool:
    """Exact test b1^e1 > b2^e2 for b1, b2 >= 1 and huge exponents.

    Bit-length envelopes decide all wide gaps; the residual band is narrow
    enough to evaluate the powers directly.
    """
    if b1 < 1 or b2 < 1 or e1 < 0 or e2 < 0:
        raise DomainError("bases must be >= 1 and exponents >= 0")
    if b2 == 1 or e2 == 0:
        return not (b1 == 1 or e1 == 0)
    if b1 == 1 or e1 == 0:
        return False
    bl1, bl2 = b1.bit_length(), b2.bit_length()
    # b^e >= 2^(e*(bl-1)) and b^e < 2^(e*bl)
    if e1 * (bl1 - 1) >= e2 * bl2:
        return True
    if e2 * (bl2 - 1) >= e1 * bl1:
        return False
    # here e1*bl1 < e2*bl2 + e1 and e2*bl2 < e1*bl1 + e2: both products are
    # within max(e1, e2) bits of each other, so direct evaluation is cheap
    # whenever the smaller exponent keeps the numbers bounded
    if min(e1 * bl1, e2 * bl2) > 10_000_000:
        raise DomainError("inconclusive bit-length band with oversized operands")
    return b1**e1 > b2**e2
