"""Dominant-weight arithmetic for classical root systems.

Weights are nonnegative integer vectors in the fundamental-weight basis.
The module provides the depth statistic ``e``, the half-diagram markers
``l``/``r``, the dominance-order test, and the four constructive
subdominant-weight reductions used by the verifier:

* ``lemma_old1_step``  -- subtract the top simple root from a weight whose
  top coefficient is at least 2,
* ``lemma_wt1_step``   -- push a top coefficient 1 one node to the right by
  subtracting a chain of simple roots,
* ``lemma_wt2_chain``  -- iterate wt1 up to a target node,
* ``lemma_wt3_fundamental`` -- reduce a weight with r = 0 and small e all
  the way down to the fundamental weight at node e.

Every reduction preserves e and dominance; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .roots import RootDatum, cartan_matrix

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


class NotDominant(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    """A dominant weight: coefficients (a_1..a_l) over the fundamental basis."""

    datum: RootDatum
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.datum.rank:
            raise ValueError(f"expected {self.datum.rank} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise NotDominant(f"negative coefficient in {self.coeffs}")

    def coeff(self, i: int) -> int:
        """1-based coefficient accessor."""
        return self.coeffs[i - 1]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return f"{self.datum}[{','.join(map(str, self.coeffs))}]"


def fundamental(datum: RootDatum, i: int) -> Weight:
    if not 1 <= i <= datum.rank:
        raise ValueError(f"fundamental index {i} out of range for {datum}")
    return Weight(datum, tuple(1 if j == i else 0 for j in range(1, datum.rank + 1)))


@dataclass(frozen=True)
class WeightStats:
    e: int
    l: int
    r: int
    d0: int | None  # max supported node, None for the zero weight


def stats(w: Weight) -> WeightStats:
    """e, l, r and the top supported node of a dominant weight.

    e weights node i by i (B/C/D) or by min(i, l+1-i) (A).  l is the largest
    supported node c <= (rank+1)/2; r is 0 when nothing is supported strictly
    right of the middle, else the largest c < (rank+1)/2 with a_{l+1-c} != 0.
    """
    n = w.datum.rank
    a = w.coeffs
    if w.datum.family == "A":
        e = sum(min(i, n + 1 - i) * a[i - 1] for i in range(1, n + 1))
    else:
        e = sum(i * a[i - 1] for i in range(1, n + 1))
    half = Fraction(n + 1, 2)
    lval = max((c for c in range(1, n + 1) if c <= half and a[c - 1]), default=0)
    if any(a[c - 1] for c in range(1, n + 1) if c > half):
        rval = max((c for c in range(1, n + 1) if c < half and a[n - c]), default=0)
    else:
        rval = 0
    d0 = max((i for i in range(1, n + 1) if a[i - 1]), default=None)
    return WeightStats(e=e, l=lval, r=rval, d0=d0)


def is_restricted(w: Weight, c: int) -> bool:
    """True when c == 0 (no constraint) or every coefficient is < c (c prime)."""
    if c == 0:
        return True
    if c < 2 or (c not in _SMALL_PRIMES and any(c % p == 0 for p in _SMALL_PRIMES if p * p <= c)):
        raise ValueError(f"characteristic parameter {c} is not 0 or a prime")
    return all(ai < c for ai in w.coeffs)


def subtract_root_chain(w: Weight, roots: list[int] | tuple[int, ...]) -> Weight:
    """w minus the sum of the listed simple roots; raises NotDominant if the
    result leaves the dominant cone."""
    n = w.datum.rank
    cm = cartan_matrix(w.datum)
    out = list(w.coeffs)
    for j in roots:
        if not 1 <= j <= n:
            raise ValueError(f"root index {j} out of range for {w.datum}")
        row = cm[j - 1]
        for i in range(n):
            out[i] -= row[i]
    if any(c < 0 for c in out):
        raise NotDominant(f"{w} minus alpha{list(roots)} is not dominant: {out}")
    return Weight(w.datum, tuple(out))


def _require(cond: bool, clause: str) -> None:
    if not cond:
        raise PreconditionViolated(clause)


def lemma_old1_step(w: Weight) -> Weight:
    """Subtract alpha_{d0} from w where d0 is the top supported node and
    a_{d0} >= 2.  Requires d0 < rank/2 (A), d0 <= rank-2 (B/C), d0 <= rank-3 (D).
    """
    st = stats(w)
    n = w.datum.rank
    _require(st.d0 is not None, "weight is zero")
    d0 = st.d0
    _require(w.coeff(d0) > 1, f"a_{d0} = {w.coeff(d0)} is not > 1")
    fam = w.datum.family
    if fam == "A":
        _require(2 * d0 < n, f"d0 = {d0} not < rank/2")
    elif fam in ("B", "C"):
        _require(d0 <= n - 2, f"d0 = {d0} not <= rank-2")
    else:
        _require(d0 <= n - 3, f"d0 = {d0} not <= rank-3")
    out = subtract_root_chain(w, [d0])
    # closed form: a_{d0-1}+1, a_{d0}-2, a_{d0+1}+1 (lambda_0 read as 0)
    assert out.coeff(d0) == w.coeff(d0) - 2
    assert out.coeff(d0 + 1) == w.coeff(d0 + 1) + 1
    assert d0 == 1 or out.coeff(d0 - 1) == w.coeff(d0 - 1) + 1
    assert stats(out).e == st.e
    return out


def _shape_top(w: Weight) -> int:
    """Top node d of a weight of shape sum_{i<d} a_i l_i + l_d; raises when
    the top coefficient is not exactly 1."""
    st = stats(w)
    _require(st.d0 is not None, "weight is zero")
    _require(w.coeff(st.d0) == 1, f"top coefficient a_{st.d0} = {w.coeff(st.d0)} != 1")
    return st.d0


def lemma_wt1_step(w: Weight, d: int) -> Weight:
    """Move the top node of w from d to d+1 by subtracting
    alpha_{d0} + ... + alpha_d, d0 the next supported node below d."""
    n = w.datum.rank
    _require(_shape_top(w) == d, f"top node of {w} is not {d}")
    _require(any(w.coeff(i) for i in range(1, d)), f"{w} equals the fundamental weight at {d}")
    if w.datum.family == "A":
        _require(2 * d < n, f"d = {d} not < rank/2")
    else:
        _require(d < n - 2, f"d = {d} not < rank-2")
    d0 = max(i for i in range(1, d) if w.coeff(i))
    out = subtract_root_chain(w, list(range(d0, d + 1)))
    assert out.coeff(d + 1) == w.coeff(d + 1) + 1 and out.coeff(d) == 0
    assert stats(out).e == stats(w).e
    return out


def lemma_wt2_chain(w: Weight, m: int) -> Weight:
    """Iterate lemma_wt1_step until the top node reaches m.

    Requires d <= m <= m0 where m0 = min(e, floor(rank/2)) for A and
    min(e, rank-3) otherwise.  m = d returns w unchanged.
    """
    n = w.datum.rank
    st = stats(w)
    d = _shape_top(w)
    if w.datum.family == "A":
        _require(2 * d < n, f"d = {d} not < rank/2")
        m0 = min(st.e, n // 2)
    else:
        _require(d < n - 2, f"d = {d} not < rank-2")
        m0 = min(st.e, n - 3)
    _require(d <= m, f"target m = {m} below top node {d}")
    _require(m <= m0, f"target m = {m} exceeds m0 = {m0}")
    _require(any(w.coeff(i) for i in range(1, d)), f"{w} equals the fundamental weight at {d}")
    out = w
    for t in range(d, m):
        out = lemma_wt1_step(out, t)
    assert stats(out).e == st.e
    return out


def lemma_wt3_fundamental(w: Weight) -> Weight:
    """Reduce w (r = 0, e small) to the fundamental weight at node e.

    Follows the constructive proof: one old1 step when the top coefficient
    exceeds 1, then wt2 chains, with the two A-type limiting cases (e equal
    to (rank+1)/2 for odd rank, rank/2 for even) handled by one extra chain
    subtraction.  The result is checked to be subdominant to w.
    """
    st = stats(w)
    n = w.datum.rank
    fam = w.datum.family
    _require(st.r == 0, f"r = {st.r} != 0")
    if fam == "A":
        _require(2 * st.e < n + 2, f"e = {st.e} not < (rank+2)/2")
    else:
        _require(st.e < n - 2, f"e = {st.e} not < rank-2")
    _require(not w.is_zero(), "weight is zero")
    e = st.e

    mu = w
    if mu.coeff(stats(mu).d0) > 1:
        if fam == "A" and n < 4:
            # only 2*lambda_1 is possible here; one root subtraction finishes
            _require(mu.coeffs == tuple([2] + [0] * (n - 1)), f"unexpected small-rank weight {mu}")
            out = subtract_root_chain(mu, [1])
            assert out == fundamental(w.datum, e)
            return out
        mu = lemma_old1_step(mu)

    d = _shape_top(mu)
    if mu == fundamental(w.datum, d):
        assert d == e
        return mu

    if fam == "A":
        m_cap = min(e, n // 2)
    else:
        m_cap = e
    mu = lemma_wt2_chain(mu, m_cap)

    if mu != fundamental(w.datum, e):
        # A-type limiting case: odd rank, e = (rank+1)/2; one more step moves
        # the top node from (rank-1)/2 to the middle.
        _require(fam == "A" and n % 2 == 1 and e == (n + 1) // 2,
                 f"reduction stalled at {mu}")
        mu = lemma_wt1_step(mu, (n - 1) // 2)
    assert mu == fundamental(w.datum, e)
    assert stats(mu).e == e
    assert is_subdominant(mu, w)
    return mu


@lru_cache(maxsize=None)
def _cartan_inverse_t(d: RootDatum) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of the transposed Cartan matrix (columns = roots in the
    weight basis)."""
    n = d.rank
    cm = cartan_matrix(d)
    aug = [[Fraction(cm[j][i]) for j in range(n)] + [Fraction(int(k == i)) for k in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def root_coordinates(lo: Weight, hi: Weight) -> tuple[Fraction, ...]:
    """Exact coordinates c with hi - lo = sum c_j alpha_j."""
    if lo.datum != hi.datum:
        raise ValueError("weights live on different data")
    inv = _cartan_inverse_t(lo.datum)
    diff = [h - l for h, l in zip(hi.coeffs, lo.coeffs)]
    n = lo.datum.rank
    return tuple(sum(inv[j][i] * diff[i] for i in range(n)) for j in range(n))


def is_subdominant(lo: Weight, hi: Weight) -> bool:
    """True when hi - lo is a nonnegative integer combination of simple roots."""
    coords = root_coordinates(lo, hi)
    return all(c.denominator == 1 and c >= 0 for c in coords)
