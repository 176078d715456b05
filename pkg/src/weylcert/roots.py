"""Classical root systems A/B/C/D: Cartan matrices, Weyl group orders,
sub-diagram decomposition.

Convention: ``cartan_matrix(d)[i][j] = <alpha_i, alpha_j^v>`` (0-indexed
internally, nodes numbered 1..rank in the API), so row ``i`` expresses the
simple root ``alpha_{i+1}`` in the fundamental-weight basis.  For family B
the last simple root is short, giving ``A[rank-2][rank-1] = -2``; family C
is the transpose.  D forks at the node ``rank-2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

FAMILIES = ("A", "B", "C", "D")

# smallest rank at which each family is accepted; D3 is allowed but flagged
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class InvalidDatum(ValueError):
    pass


@dataclass(frozen=True)
class RootDatum:
    """A classical family tag together with its rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidDatum(f"unknown family {self.family!r}")
        if self.rank < _MIN_RANK[self.family]:
            raise InvalidDatum(f"{self.family}{self.rank}: rank below {_MIN_RANK[self.family]}")

    @property
    def is_d3(self) -> bool:
        return self.family == "D" and self.rank == 3

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class SubDiagram:
    """Connected components of a node subset, each tagged (family, rank)."""

    node_set: frozenset[int]
    components: tuple[tuple[str, int], ...]


@lru_cache(maxsize=None)
def cartan_matrix(d: RootDatum) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entry [i][j] = <alpha_i, alpha_j^v> (0-indexed)."""
    n = d.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    if d.family == "D":
        for i in range(n - 2):
            a[i][i + 1] = a[i + 1][i] = -1
        # fork: both end nodes attach to node n-2
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
    else:
        for i in range(n - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if d.family == "B" and n >= 2:
            a[n - 2][n - 1] = -2  # last root short
        elif d.family == "C" and n >= 2:
            a[n - 1][n - 2] = -2  # last root long
    return tuple(tuple(row) for row in a)


def simple_root_in_weight_basis(d: RootDatum, j: int) -> tuple[int, ...]:
    """alpha_j written in the fundamental-weight basis (j is 1-based)."""
    if not 1 <= j <= d.rank:
        raise InvalidDatum(f"root index {j} out of range for {d}")
    return cartan_matrix(d)[j - 1]


def weyl_order(d: RootDatum) -> int:
    """|W| for the full diagram: (l+1)! for A, 2^l l! for B/C, 2^(l-1) l! for D."""
    n = d.rank
    if d.family == "A":
        return math.factorial(n + 1)
    if d.family in ("B", "C"):
        return (1 << n) * math.factorial(n)
    return (1 << (n - 1)) * math.factorial(n)


def _adjacency(d: RootDatum) -> dict[int, set[int]]:
    a = cartan_matrix(d)
    n = d.rank
    adj: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for i in range(n):
        for j in range(n):
            if i != j and a[i][j] != 0:
                adj[i + 1].add(j + 1)
    return adj


def decompose_subdiagram(d: RootDatum, nodes: frozenset[int] | set[int]) -> SubDiagram:
    """Split a node subset into connected sub-diagram components.

    The component containing node ``rank`` inherits the B/C tag; a D
    component must contain the fork node ``rank-2`` and both branch ends.
    Everything else is type A of its size.
    """
    nodes = frozenset(nodes)
    for v in nodes:
        if not 1 <= v <= d.rank:
            raise InvalidDatum(f"node {v} out of range for {d}")
    adj = _adjacency(d)
    seen: set[int] = set()
    comps: list[tuple[str, int]] = []
    for start in sorted(nodes):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in nodes and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append((_component_family(d, comp), len(comp)))
    return SubDiagram(node_set=nodes, components=tuple(sorted(comps)))


def _component_family(d: RootDatum, comp: set[int]) -> str:
    n = d.rank
    if d.family in ("B", "C") and n in comp:
        return d.family
    if d.family == "D" and (n - 1) in comp and n in comp:
        # connectivity forces n-2 in comp as well
        return "D"
    return "A"


def component_weyl_order(family: str, rank: int) -> int:
    """|W| for a component; tolerates ranks below the standalone minimum
    (B1, C1, D2 never arise from decompose_subdiagram, D3 does)."""
    if family == "A":
        return math.factorial(rank + 1)
    if family in ("B", "C"):
        return (1 << rank) * math.factorial(rank)
    return (1 << (rank - 1)) * math.factorial(rank)


def subdiagram_weyl_order(sd: SubDiagram) -> int:
    out = 1
    for fam, rk in sd.components:
        out *= component_weyl_order(fam, rk)
    return out
