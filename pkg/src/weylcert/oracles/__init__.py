"""Brute-force ground truth: Weyl-orbit enumeration by closure under simple
reflections, and exhaustive point counting for the standard forms on small
finite vector spaces.

These oracles are deliberately dumb: the orbit walker applies reflections
until closure, and the point counter evaluates the form on every vector.
Hot loops run on the selected kernel backend (see ``backend``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..roots import cartan_matrix
from ..weights import Weight
from .backend import backend_name, kernels
from .fields import SmallField, field, frobenius_table

FORM_KINDS = ("trivial", "alternating", "quadratic_odd", "quadratic_plus",
              "quadratic_minus", "hermitian")

_ENUM_GUARD = 10**8
_ORBIT_RANK_GUARD = 8
_PACK_OFFSET = 64


class RankTooLarge(ValueError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class FormSpec:
    kind: str
    n: int
    q: int

    def __post_init__(self) -> None:
        if self.kind not in FORM_KINDS:
            raise ValueError(f"unknown form kind {self.kind!r}")
        if self.n < 1 or self.q < 2:
            raise ValueError("need n >= 1 and q >= 2")
        if self.kind in ("alternating", "quadratic_plus", "quadratic_minus") and self.n % 2:
            raise ValueError(f"{self.kind} needs even dimension, got {self.n}")
        if self.kind == "quadratic_odd" and self.n % 2 == 0:
            raise ValueError(f"quadratic_odd needs odd dimension, got {self.n}")
        if self.kind == "quadratic_minus" and self.n < 2:
            raise ValueError("quadratic_minus needs dimension >= 2")

    @property
    def alphabet(self) -> int:
        """Field order the coordinates range over (q^2 for hermitian)."""
        return self.q * self.q if self.kind == "hermitian" else self.q

    @property
    def space_divisor(self) -> int:
        """Vectors per 1-space."""
        return self.alphabet - 1


@dataclass(frozen=True)
class PointCounts:
    singular_vectors: int
    singular_1spaces: int
    nonsingular_buckets: tuple[int, ...]  # sorted descending

    @property
    def nonsingular_vectors(self) -> int:
        return sum(self.nonsingular_buckets)


def anisotropic_pair(q: int) -> tuple[int, int, int]:
    """Coefficients (a, b, c) of the first binary quadric a x^2 + b xy + c y^2
    with only the trivial zero, in lowest-coefficient-first search order."""
    fld = field(q)
    for a in range(q):
        for b in range(q):
            for c in range(q):
                if _pair_is_anisotropic(fld, a, b, c):
                    return a, b, c
    raise RuntimeError(f"no anisotropic binary quadric over F_{q}")


def _pair_is_anisotropic(fld: SmallField, a: int, b: int, c: int) -> bool:
    for x in range(fld.q):
        for y in range(fld.q):
            if (x, y) == (0, 0):
                continue
            v = _pair_value(fld, a, b, c, x, y)
            if v == 0:
                return False
    return True


def _pair_value(fld: SmallField, a: int, b: int, c: int, x: int, y: int) -> int:
    ax2 = fld.mul[a, fld.mul[x, x]]
    bxy = fld.mul[b, fld.mul[x, y]]
    cy2 = fld.mul[c, fld.mul[y, y]]
    return int(fld.add[fld.add[ax2, bxy], cy2])


@lru_cache(maxsize=None)
def _form_blocks(spec: FormSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(blocks, block_tables, add_table) driving both kernel backends."""
    av = spec.alphabet
    fld = field(av)
    tables: list[np.ndarray] = []
    blocks: list[tuple[int, int, int]] = []

    def add_table_2d(t: np.ndarray) -> int:
        tables.append(t.astype(np.int64))
        return len(tables) - 1

    if spec.kind in ("trivial", "alternating"):
        pass  # the form vanishes on every vector
    elif spec.kind == "hermitian":
        conj = frobenius_table(spec.q)
        nrm = np.array([int(fld.mul[x, conj[x]]) for x in range(av)], dtype=np.int64)
        tid = add_table_2d(np.repeat(nrm[:, None], 1, axis=1))
        for i in range(spec.n):
            blocks.append((i, -1, tid))
    else:
        mul_tid = add_table_2d(np.asarray(fld.mul))
        pairs = spec.n // 2
        if spec.kind == "quadratic_odd":
            sq = np.array([int(fld.mul[x, x]) for x in range(av)], dtype=np.int64)
            sq_tid = add_table_2d(sq[:, None])
            blocks.append((spec.n - 1, -1, sq_tid))
        elif spec.kind == "quadratic_minus":
            a, b, c = anisotropic_pair(spec.q)
            g = np.zeros((av, av), dtype=np.int64)
            for x in range(av):
                for y in range(av):
                    g[x, y] = _pair_value(fld, a, b, c, x, y)
            g_tid = add_table_2d(g)
            blocks.append((spec.n - 2, spec.n - 1, g_tid))
            pairs -= 1
        for k in range(pairs):
            blocks.append((2 * k, 2 * k + 1, mul_tid))

    if not tables:
        tables.append(np.zeros((av, av), dtype=np.int64))
    width = max(t.shape[1] for t in tables)
    stacked = np.zeros((len(tables), av, width), dtype=np.int64)
    for t_i, t in enumerate(tables):
        stacked[t_i, :, : t.shape[1]] = t
    blocks_arr = np.array(blocks, dtype=np.int64).reshape(-1, 3)
    return blocks_arr, stacked, np.asarray(fld.add, dtype=np.int64)


def standard_form(spec: FormSpec):
    """Evaluator mapping a coordinate tuple to the form value (a field
    element id); nondegeneracy is asserted for small dimensions."""
    blocks, tables, add = _form_blocks(spec)

    def evaluate(vec) -> int:
        if len(vec) != spec.n:
            raise ValueError(f"expected {spec.n} coordinates")
        acc = 0
        for i, j, tid in blocks:
            term = tables[tid, vec[i], 0] if j < 0 else tables[tid, vec[i], vec[j]]
            acc = add[acc, term]
        return int(acc)

    _assert_nondegenerate(spec)
    return evaluate


def _raw_evaluator(spec: FormSpec):
    blocks, tables, add = _form_blocks(spec)

    def evaluate(vec) -> int:
        acc = 0
        for i, j, tid in blocks:
            term = tables[tid, vec[i], 0] if j < 0 else tables[tid, vec[i], vec[j]]
            acc = add[acc, term]
        return int(acc)

    return evaluate


@lru_cache(maxsize=None)
def _assert_nondegenerate(spec: FormSpec) -> bool:
    # the hermitian Gram of the standard form is the identity matrix; the
    # polarisation below only applies to the bilinear kinds
    if spec.kind in ("trivial", "hermitian") or spec.n > 6 or spec.alphabet > 16:
        return True
    evaluate = _raw_evaluator(spec)
    fld = field(spec.alphabet)
    n, av = spec.n, spec.alphabet
    if spec.kind == "alternating":
        gram = [[0] * n for _ in range(n)]
        m = n // 2
        neg1 = fld.neg(1)
        for i in range(m):
            gram[i][m + i] = 1
            gram[m + i][i] = neg1
    else:
        # polarisation B(e_i, e_j) = Q(e_i + e_j) - Q(e_i) - Q(e_j)
        def basis(i):
            v = [0] * n
            v[i] = 1
            return v

        gram = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                vij = basis(i)
                vij[j] = int(fld.add[vij[j], 1])
                bij = fld.add[evaluate(vij),
                              fld.neg(int(fld.add[evaluate(basis(i)), evaluate(basis(j))]))]
                gram[i][j] = int(bij)
    rad = _null_space_dim(fld, gram)
    if spec.kind == "quadratic_odd" and fld.p == 2:
        # char-2 odd dimension: the bilinear radical is one nonsingular line
        if rad != 1:
            raise AssertionError(f"{spec}: expected a 1-dim bilinear radical, got {rad}")
        if av**n <= 200_000:
            for code in range(av**n):
                vec = [(code // av**k) % av for k in range(n)]
                if any(vec) and evaluate(vec) == 0 and _in_radical(fld, gram, vec):
                    raise AssertionError(f"{spec}: singular vector in the radical")
    elif rad != 0:
        raise AssertionError(f"{spec}: radical has dimension {rad}")
    return True


def _in_radical(fld: SmallField, gram, vec) -> bool:
    n = len(vec)
    for j in range(n):
        acc = 0
        for i in range(n):
            acc = int(fld.add[acc, fld.mul[vec[i], gram[i][j]]])
        if acc:
            return False
    return True


def _null_space_dim(fld: SmallField, gram) -> int:
    n = len(gram)
    m = [row[:] for row in gram]
    inv = {}
    for x in range(1, fld.q):
        for y in range(1, fld.q):
            if fld.mul[x, y] == 1:
                inv[x] = y
                break
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pin = inv[m[rank][col]]
        m[rank] = [int(fld.mul[pin, x]) for x in m[rank]]
        for r in range(n):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [int(fld.add[x, fld.neg(int(fld.mul[f, y]))]) for x, y in zip(m[r], m[rank])]
        rank += 1
    return n - rank


def count_points(spec: FormSpec) -> PointCounts:
    """Exhaustive value census of the standard form of the given kind."""
    av = spec.alphabet
    if av**spec.n > _ENUM_GUARD:
        raise TooLarge(f"{av}^{spec.n} exceeds the enumeration guard {_ENUM_GUARD}")
    standard_form(spec)  # nondegeneracy side checks at small sizes
    blocks, tables, add = _form_blocks(spec)
    hist = kernels().histogram_values(spec.n, av, blocks, tables, add)
    assert int(hist.sum()) == av**spec.n
    singular_vec = int(hist[0]) - 1  # drop the zero vector
    div = spec.space_divisor
    assert singular_vec % div == 0, "1-space count must be integral"
    buckets = _bucket_nonsingular(spec, hist)
    return PointCounts(
        singular_vectors=singular_vec,
        singular_1spaces=singular_vec // div,
        nonsingular_buckets=buckets,
    )


def _bucket_nonsingular(spec: FormSpec, hist: np.ndarray) -> tuple[int, ...]:
    av = spec.alphabet
    nonzero = {v: int(hist[v]) for v in range(1, av) if hist[v]}
    if not nonzero:
        return ()
    if spec.kind == "hermitian":
        # values land in the fixed subfield; classes are fused by the torus
        buckets = sorted(nonzero.values(), reverse=True)
        return tuple(buckets)
    fld = field(av)
    if fld.p == 2:
        return (sum(nonzero.values()),)
    sq = fld.squares()
    b_sq = sum(c for v, c in nonzero.items() if v in sq)
    b_ns = sum(c for v, c in nonzero.items() if v not in sq)
    return tuple(sorted((b for b in (b_sq, b_ns) if b), reverse=True))


def orbit_bfs(w: Weight) -> int:
    """Orbit size of a dominant weight under closure by simple reflections."""
    rank = w.datum.rank
    if rank > _ORBIT_RANK_GUARD:
        raise RankTooLarge(f"rank {rank} exceeds the enumeration guard {_ORBIT_RANK_GUARD}")
    cart = np.array(cartan_matrix(w.datum), dtype=np.int64)
    key = 0
    for k, c in enumerate(w.coeffs):
        packed = c + _PACK_OFFSET
        if not 0 <= packed <= 0x7F:
            raise TooLarge("coefficient outside the 7-bit packing range")
        key |= packed << (7 * k)
    try:
        return int(kernels().orbit_size(key, cart, _PACK_OFFSET))
    except OverflowError:
        raise TooLarge("orbit coordinates exceed the 7-bit packing range") from None


__all__ = [
    "FormSpec", "PointCounts", "anisotropic_pair", "backend_name",
    "count_points", "orbit_bfs", "standard_form", "RankTooLarge", "TooLarge",
]
