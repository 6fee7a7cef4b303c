"""Brute-force oracles, independent of the engine's elimination code."""

from __future__ import annotations

import itertools

import numpy as np


def all_matrices(p: int, rows: int, cols: int):
    for entries in itertools.product(range(p), repeat=rows * cols):
        yield np.array(entries, dtype=np.int64).reshape(rows, cols)


def all_vectors(p: int, n: int) -> np.ndarray:
    """Every vector of F_p^n as the rows of a (p^n, n) array."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)


def span_size(m: np.ndarray, p: int) -> int:
    """Number of distinct vectors m @ v over F_p."""
    images = (all_vectors(p, m.shape[1]) @ m.T) % p
    return len({tuple(r) for r in images})


def brute_rank(m: np.ndarray, p: int) -> int:
    size = span_size(m, p)
    r = 0
    while p ** r < size:
        r += 1
    return r


def kernel_count(m: np.ndarray, p: int) -> int:
    images = (all_vectors(p, m.shape[1]) @ m.T) % p
    return int((images == 0).all(axis=1).sum()) if m.shape[0] else p ** m.shape[1]


def solvable(m: np.ndarray, b: np.ndarray, p: int) -> bool:
    images = (all_vectors(p, m.shape[1]) @ m.T) % p
    return bool(((images == b % p).all(axis=1)).any())


def paths_of_length_le(arrows, vertices, n):
    """Every path of length <= n in a quiver given as (name, src, tgt) triples."""
    out = [(v, v, ()) for v in vertices]
    layer = list(out)
    for _ in range(n):
        layer = [(s, a[2], ps + (a[0],)) for (s, t, ps) in layer for a in arrows if a[1] == t]
        out += layer
    return out


def enumerate_rad2_representations(arrows, vertices, p: int, max_total: int):
    """All representations of a quiver over F_p with rad^2 = 0 and total dim <= max_total.

    Yields ``(dims, {arrow: np.ndarray})`` with arrow matrices of shape
    (dim target, dim source).
    """
    vi = {v: i for i, v in enumerate(vertices)}
    for dims in itertools.product(range(max_total + 1), repeat=len(vertices)):
        if sum(dims) > max_total:
            continue
        shapes = [(dims[vi[t]], dims[vi[s]]) for _, s, t in arrows]
        choices = [list(all_matrices(p, *sh)) for sh in shapes]
        for mats in itertools.product(*choices):
            action = {a[0]: m for a, m in zip(arrows, mats)}
            ok = True
            for a in arrows:
                for b in arrows:
                    if a[2] == b[1] and ((action[b[0]] @ action[a[0]]) % p).any():
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                yield dims, action


def brute_hom_count(M, N, p: int) -> int:
    """Count vertexwise matrix families commuting with all arrows (over F_p)."""
    q = M.ring.quiver
    vi = q.vertex_index
    shapes = [(n, m) for m, n in zip(M.dims, N.dims)]
    Ma = [np.array(a.to_rows(), dtype=np.int64).reshape(a.shape) for a in M.action]
    Na = [np.array(a.to_rows(), dtype=np.int64).reshape(a.shape) for a in N.action]
    count = 0
    for fam in itertools.product(*(list(all_matrices(p, *sh)) for sh in shapes)):
        if all(
            not ((Na[k] @ fam[vi[arr.source]] - fam[vi[arr.target]] @ Ma[k]) % p).any()
            for k, arr in enumerate(q.arrows)
        ):
            count += 1
    return count
