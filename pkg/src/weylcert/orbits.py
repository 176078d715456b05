"""Closed-form Weyl-orbit lengths via the zero-support stabilizer.

The stabilizer of a dominant weight is the parabolic Weyl group generated by
the reflections at nodes where the coefficient vanishes, so the orbit length
is the index |W| / |W_0|, computed symbolically from the sub-diagram
decomposition (no enumeration; valid at any rank).
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import SubDiagram, decompose_subdiagram, subdiagram_weyl_order, weyl_order
from .weights import Weight


@dataclass(frozen=True)
class OrbitResult:
    length: int
    stabilizer_components: SubDiagram


def orbit_length(w: Weight) -> OrbitResult:
    """Number of distinct Weyl images of a dominant weight."""
    zero_nodes = frozenset(i for i in range(1, w.datum.rank + 1) if not w.coeff(i))
    sd = decompose_subdiagram(w.datum, zero_nodes)
    total = weyl_order(w.datum)
    stab = subdiagram_weyl_order(sd)
    assert total % stab == 0
    return OrbitResult(length=total // stab, stabilizer_components=sd)
