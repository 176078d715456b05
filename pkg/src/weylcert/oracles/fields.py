"""Small finite fields as lookup tables.

Elements of F_{p^f} are integers 0..q-1 whose base-p digits are the
coefficients of the polynomial-basis representation.  Addition and
multiplication are materialised as q x q tables (guarded to q <= 4096), which
both enumeration backends consume directly.  The defining polynomial is the
lexicographically first monic irreducible of degree f, so field construction
is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_MAX_ORDER = 4096


class FieldTooLarge(ValueError):
    pass


def factor_prime_power(q: int) -> tuple[int, int]:
    """(p, f) with q = p^f, or raise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    f = 0
    m = q
    while m % p == 0:
        m //= p
        f += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, f


def _digits(x: int, p: int, f: int) -> list[int]:
    out = []
    for _ in range(f):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds: list[int], p: int) -> int:
    out = 0
    for d in reversed(ds):
        out = out * p + d
    return out


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic of degree f, given by its f low coefficients
    f = len(mod)
    prod = [0] * (2 * f - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(2 * f - 2, f - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j in range(f):
                prod[k - f + j] = (prod[k - f + j] - c * mod[j]) % p
    return prod[:f]


def _find_irreducible(p: int, f: int) -> list[int]:
    """Low coefficients of the first monic irreducible of degree f over F_p
    (lowest coefficient vector first); degree 1 returns [0] for x itself."""
    if f == 1:
        return [0]
    for code in range(p**f):
        mod = _digits(code, p, f)
        # x^f + sum mod[j] x^j must have no root and no smaller-degree factor;
        # brute force: irreducible iff no element of any F_{p^d}, d<f ... for
        # the tiny sizes here, test by checking it has no factor via absence
        # of roots in F_p and trial division by all monic polys of degree<=f/2
        if _is_irreducible(mod, p, f):
            return mod
    raise RuntimeError("no irreducible polynomial found")


def _is_irreducible(mod: list[int], p: int, f: int) -> bool:
    full = mod + [1]
    for dg in range(1, f // 2 + 1):
        for code in range(p**dg):
            div = _digits(code, p, dg) + [1]
            if _poly_divides(div, full, p):
                return False
    return True


def _poly_divides(div: list[int], poly: list[int], p: int) -> bool:
    rem = list(poly)
    dd = len(div) - 1
    inv_lead = 1  # div is monic
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] * inv_lead % p
        if c:
            for j in range(dd + 1):
                rem[k - dd + j] = (rem[k - dd + j] - c * div[j]) % p
    return not any(rem[:dd])


@dataclass(frozen=True)
class SmallField:
    q: int
    p: int
    f: int
    add: np.ndarray  # (q, q) int16
    mul: np.ndarray  # (q, q) int16
    generator: int

    def neg(self, x: int) -> int:
        return int(np.where(self.add[x] == 0)[0][0])

    def pow(self, x: int, e: int) -> int:
        out, base = 1, x
        while e:
            if e & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            e >>= 1
        return out

    def squares(self) -> frozenset[int]:
        """Nonzero square values."""
        return frozenset(int(self.mul[x, x]) for x in range(1, self.q))


@lru_cache(maxsize=None)
def field(q: int) -> SmallField:
    if q > _MAX_ORDER:
        raise FieldTooLarge(f"field order {q} exceeds the table guard {_MAX_ORDER}")
    p, f = factor_prime_power(q)
    mod = _find_irreducible(p, f)
    add = np.zeros((q, q), dtype=np.int16)
    mul = np.zeros((q, q), dtype=np.int16)
    digs = [_digits(x, p, f) for x in range(q)]
    for x in range(q):
        for y in range(q):
            add[x, y] = _undigits([(a + b) % p for a, b in zip(digs[x], digs[y])], p)
            mul[x, y] = _undigits(_poly_mulmod(digs[x], digs[y], mod, p), p)
    fld = SmallField(q=q, p=p, f=f, add=add, mul=mul, generator=0)
    gen = _find_generator(fld)
    fld = SmallField(q=q, p=p, f=f, add=add, mul=mul, generator=gen)
    _validate(fld)
    return fld


def _find_generator(fld: SmallField) -> int:
    for g in range(2, fld.q):
        x, order = g, 1
        while x != 1:
            x = int(fld.mul[x, g])
            order += 1
        if order == fld.q - 1:
            return g
    if fld.q == 2:
        return 1
    raise RuntimeError("no multiplicative generator found")


def _validate(fld: SmallField) -> None:
    # the unit group has order q-1 under the chosen generator
    seen = set()
    x = 1
    for _ in range(fld.q - 1):
        seen.add(x)
        x = int(fld.mul[x, fld.generator])
    if len(seen) != fld.q - 1 or x != 1:
        raise RuntimeError(f"field F_{fld.q} failed the unit-group check")


def frobenius_table(q: int) -> np.ndarray:
    """x -> x^q on F_{q^2}, as a lookup table (hermitian conjugation)."""
    fld = field(q * q)
    out = np.zeros(q * q, dtype=np.int16)
    for x in range(q * q):
        out[x] = fld.pow(x, q)
    return out
