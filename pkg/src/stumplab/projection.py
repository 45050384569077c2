"""2-D embedding of per-stump subtree memberships, layout alignment across
edits, and point trajectories.

Every training sample is a binary vector with one bit per stump (0 = Left
subtree, 1 = Right), so samples classified identically by all stumps
coincide. The default embedding is classical MDS on the squared-distance
matrix given by Hamming distances (for binary vectors the squared
Euclidean distance IS the Hamming distance), which is deterministic --
layouts are reproducible bit-for-bit. A seeded stochastic
neighbor-embedding refinement is available as an alternative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boosting import SurrogateModel, route_right
from .errors import IndexOutOfRange


@dataclass
class MembershipMatrix:
    bits: np.ndarray   # n_samples x n_stumps, uint8, stump order = boosting order


@dataclass
class Layout:
    coords: np.ndarray          # n_samples x 2
    method: str                 # "mds" | "neighbor-embedding"
    alignment_ref: str | None = None


def membership_vectors(model: SurrogateModel, X_train) -> MembershipMatrix:
    X_train = np.asarray(X_train, dtype=float)
    cols = [route_right(s, X_train).astype(np.uint8) for s in model.stumps]
    bits = np.column_stack(cols) if cols else np.zeros((X_train.shape[0], 0), np.uint8)
    return MembershipMatrix(bits=bits)


def _as_bits(matrix) -> np.ndarray:
    bits = matrix.bits if isinstance(matrix, MembershipMatrix) else np.asarray(matrix)
    return bits.astype(np.uint8)


def hamming_matrix(bits: np.ndarray) -> np.ndarray:
    diff = bits[:, None, :] != bits[None, :, :]
    return diff.sum(axis=2).astype(float)


def _canonical_signs(coords: np.ndarray) -> np.ndarray:
    # make the first nonzero coordinate of each axis positive
    for k in range(coords.shape[1]):
        col = coords[:, k]
        nz = np.flatnonzero(np.abs(col) > 1e-12)
        if nz.size and col[nz[0]] < 0:
            coords[:, k] = -col
    return coords


def _mds(bits: np.ndarray) -> np.ndarray:
    n = bits.shape[0]
    D2 = hamming_matrix(bits)
    J = np.eye(n) - np.full((n, n), 1.0 / n)
    B = -0.5 * J @ D2 @ J
    evals, evecs = np.linalg.eigh(B)
    coords = np.zeros((n, 2))
    top = np.argsort(evals)[::-1][:2]
    for k, i in enumerate(top):
        # non-positive spectrum degenerates to a zero axis
        if evals[i] > 1e-12:
            coords[:, k] = evecs[:, i] * np.sqrt(evals[i])
    coords -= coords.mean(axis=0)
    return _canonical_signs(coords)


def _neighbor_embedding(bits: np.ndarray, seed: int, n_neighbors: int = 10,
                        epochs: int = 120, lr: float = 0.08) -> np.ndarray:
    """Seeded SGD refinement of the MDS layout: attract nearest neighbors in
    membership space, repel random pairs."""
    n = bits.shape[0]
    rng = np.random.default_rng(seed)
    coords = _mds(bits) + rng.normal(0.0, 1e-3, size=(n, 2))
    D = hamming_matrix(bits)
    k = min(n_neighbors, n - 1)
    nn = np.argsort(D, axis=1, kind="stable")[:, 1:k + 1]
    for _ in range(epochs):
        for i in rng.permutation(n):
            j = nn[i, rng.integers(k)]
            delta = coords[j] - coords[i]
            coords[i] += lr * 0.5 * delta
            r = rng.integers(n)
            if r != i:
                away = coords[i] - coords[r]
                dist2 = float(away @ away) + 1e-6
                coords[i] += lr * 0.1 * away / dist2
    coords -= coords.mean(axis=0)
    return coords


def project(matrix, method: str = "mds", seed: int = 0) -> Layout:
    """Embed membership rows into 2-D; ``mds`` is deterministic and the
    default, ``neighbor-embedding`` is stochastic but seeded."""
    bits = _as_bits(matrix)
    if bits.shape[0] < 2:
        raise ValueError("need at least 2 samples to project")
    if method == "mds":
        return Layout(coords=_mds(bits), method="mds")
    if method == "neighbor-embedding":
        return Layout(coords=_neighbor_embedding(bits, seed), method="neighbor-embedding")
    raise ValueError(f"unknown projection method {method!r}")


def align(prev: Layout, next_layout: Layout) -> Layout:
    """Orthogonal Procrustes: rotate/reflect (never scale) ``next_layout``
    onto ``prev``; the residual can only shrink."""
    A = np.asarray(next_layout.coords, dtype=float)
    B = np.asarray(prev.coords, dtype=float)
    if A.shape != B.shape:
        raise ValueError("layouts must have the same shape")
    M = A.T @ B
    U, _, Vt = np.linalg.svd(M)
    R = U @ Vt
    return Layout(coords=A @ R, method=next_layout.method, alignment_ref="procrustes")


def trajectories(prev: Layout, aligned_next: Layout, prev_bits, next_bits) -> list[dict]:
    """Per-sample movement segments; ``changed`` flags samples whose
    membership row differs between the two states."""
    pb = _as_bits(prev_bits)
    nb = _as_bits(next_bits)
    changed = np.any(pb != nb, axis=1)
    out = []
    for i in range(prev.coords.shape[0]):
        out.append({
            "index": i,
            "start": [float(prev.coords[i, 0]), float(prev.coords[i, 1])],
            "end": [float(aligned_next.coords[i, 0]), float(aligned_next.coords[i, 1])],
            "changed": bool(changed[i]),
        })
    return out


def local_side_labels(model: SurrogateModel, stump_index: int, X_train) -> list[str]:
    if not 0 <= stump_index < len(model.stumps):
        raise IndexOutOfRange("stump_index", stump_index, len(model.stumps))
    right = route_right(model.stumps[stump_index], np.asarray(X_train, dtype=float))
    return ["Right" if v else "Left" for v in right]


def refresh_session_layout(session, method: str = "mds", seed: int = 0):
    """(Re)project a session's current memberships, aligning to the
    session's previous layout when one exists.

    Returns ``(layout, trajectories_or_None)`` and stores the new state on
    the session.
    """
    bits = session.memberships
    fresh = project(MembershipMatrix(bits), method=method, seed=seed)
    if session.layout_state is None:
        session.layout_state = (fresh, bits.copy())
        return fresh, None
    prev_layout, prev_bits = session.layout_state
    aligned = align(prev_layout, fresh)
    trails = trajectories(prev_layout, aligned, prev_bits, bits)
    session.layout_state = (aligned, bits.copy())
    return aligned, trails
