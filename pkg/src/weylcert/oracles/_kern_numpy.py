"""Vectorised numpy fallbacks for the two enumeration kernels."""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 20


def histogram_values(n_coords: int, alphabet: int, blocks: np.ndarray,
                     block_tables: np.ndarray, add_table: np.ndarray) -> np.ndarray:
    """Histogram of form values over all alphabet^n_coords vectors.

    blocks: (k, 3) int64 rows (i, j, table_index), j = -1 meaning the block is
    unary in coordinate i.  block_tables: (t, alphabet, alphabet); unary blocks
    read column 0.
    """
    total = alphabet**n_coords
    hist = np.zeros(alphabet, dtype=np.int64)
    powers = [alphabet**k for k in range(n_coords)]
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        coords = [(idx // powers[k]) % alphabet for k in range(n_coords)]
        acc = np.zeros(len(idx), dtype=np.int64)
        for bi in range(blocks.shape[0]):
            i, j, tid = blocks[bi]
            if j < 0:
                term = block_tables[tid, coords[i], 0]
            else:
                term = block_tables[tid, coords[i], coords[j]]
            acc = add_table[acc, term]
        hist += np.bincount(acc, minlength=alphabet)
    return hist


def orbit_size(start_key: int, cartan: np.ndarray, offset: int) -> int:
    """Closure size of a packed weight vector under the simple reflections.

    Keys pack each coordinate plus ``offset`` into 8 bits.  cartan is the
    (rank, rank) matrix whose row i expresses alpha_i over the fundamental
    weights; the reflection at i subtracts coeff_i times that row.
    """
    rank = cartan.shape[0]
    shifts = (7 * np.arange(rank, dtype=np.int64))[None, :]
    visited = np.array([start_key], dtype=np.int64)
    frontier = visited
    while frontier.size:
        coords = ((frontier[:, None] >> shifts) & 0x7F) - offset
        cands = []
        for i in range(rank):
            new = coords - coords[:, i : i + 1] * cartan[i][None, :]
            packed_coords = new + offset
            if packed_coords.min() < 0 or packed_coords.max() > 0x7F:
                raise OverflowError("orbit coordinate left the packing range")
            cands.append((packed_coords << shifts).sum(axis=1))
        cand = np.unique(np.concatenate(cands))
        pos = np.searchsorted(visited, cand)
        pos = np.clip(pos, 0, visited.size - 1)
        fresh = cand[visited[pos] != cand]
        visited = np.sort(np.concatenate([visited, fresh]))
        frontier = fresh
    return int(visited.size)
