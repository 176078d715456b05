"""Numba fast paths for the two enumeration kernels.

Same contracts as _kern_numpy; compiled lazily on first use.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _hist_kernel(n_coords, alphabet, blocks, block_tables, add_table):
    total = np.int64(1)
    for _ in range(n_coords):
        total *= alphabet
    hist = np.zeros(alphabet, dtype=np.int64)
    digits = np.zeros(n_coords, dtype=np.int64)
    nblocks = blocks.shape[0]
    for _ in range(total):
        acc = np.int64(0)
        for b in range(nblocks):
            i = blocks[b, 0]
            j = blocks[b, 1]
            tid = blocks[b, 2]
            if j < 0:
                term = block_tables[tid, digits[i], 0]
            else:
                term = block_tables[tid, digits[i], digits[j]]
            acc = add_table[acc, term]
        hist[acc] += 1
        for k in range(n_coords):
            digits[k] += 1
            if digits[k] < alphabet:
                break
            digits[k] = 0
    return hist


@njit(cache=True)
def _orbit_kernel(start_key, cartan, offset):
    rank = cartan.shape[0]
    visited = {start_key: np.uint8(1)}
    queue = np.empty(1024, dtype=np.int64)
    queue[0] = start_key
    head = 0
    tail = 1
    coords = np.zeros(rank, dtype=np.int64)
    while head < tail:
        key = queue[head]
        head += 1
        for k in range(rank):
            coords[k] = ((key >> (7 * k)) & 0x7F) - offset
        for i in range(rank):
            ci = coords[i]
            if ci == 0:
                continue
            new_key = np.int64(0)
            ok = True
            for k in range(rank):
                v = coords[k] - ci * cartan[i, k] + offset
                if v < 0 or v > 0x7F:
                    ok = False
                    break
                new_key |= np.int64(v) << (7 * k)
            if not ok:
                return np.int64(-1)
            if new_key not in visited:
                visited[new_key] = np.uint8(1)
                if tail == queue.shape[0]:
                    bigger = np.empty(queue.shape[0] * 2, dtype=np.int64)
                    bigger[: queue.shape[0]] = queue
                    queue = bigger
                queue[tail] = new_key
                tail += 1
    return np.int64(len(visited))


def histogram_values(n_coords: int, alphabet: int, blocks: np.ndarray,
                     block_tables: np.ndarray, add_table: np.ndarray) -> np.ndarray:
    return _hist_kernel(
        np.int64(n_coords),
        np.int64(alphabet),
        blocks.astype(np.int64),
        block_tables.astype(np.int64),
        add_table.astype(np.int64),
    )


def orbit_size(start_key: int, cartan: np.ndarray, offset: int) -> int:
    out = int(_orbit_kernel(np.int64(start_key), cartan.astype(np.int64), np.int64(offset)))
    if out < 0:
        raise OverflowError("orbit coordinate left the packing range")
    return out
