"""Seeded k-means over utterance category distributions.

Plain Lloyd iterations with k-means++ seeding, deterministic for a fixed
point order, k and seed. Empty clusters are reseeded to the point farthest
from its assigned centroid. Inertia is checked to be non-increasing after
every assignment pass; a violation is a bug, not a data problem.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InternalError, NoUtterances, TooFewPoints


@dataclass
class ClusterModel:
    k: int
    centroids: np.ndarray  # (k, dim)
    seed: int
    inertia: float
    n_iter: int = 0

    @property
    def dim(self) -> int:
        return self.centroids.shape[1]


def _as_matrix(points) -> np.ndarray:
    try:
        arr = np.asarray(list(points), dtype=float)
    except ValueError as exc:
        raise DimensionMismatch(f"points do not share one dimension: {exc}") from exc
    if arr.ndim != 2:
        raise DimensionMismatch(f"expected a list of vectors, got array of ndim {arr.ndim}")
    return arr


def _sq_distances(x: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """Squared Euclidean distances, (n_points, k)."""
    d2 = (
        (x * x).sum(axis=1)[:, None]
        + (centroids * centroids).sum(axis=1)[None, :]
        - 2.0 * (x @ centroids.T)
    )
    return np.maximum(d2, 0.0)


def _plus_plus_init(x: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = len(x)
    centroids = np.empty((k, x.shape[1]))
    centroids[0] = x[rng.integers(n)]
    d2 = ((x - centroids[0]) ** 2).sum(axis=1)
    for j in range(1, k):
        total = d2.sum()
        if total > 0.0:
            idx = rng.choice(n, p=d2 / total)
        else:
            idx = rng.integers(n)  # all points coincide with a chosen centroid
        centroids[j] = x[idx]
        d2 = np.minimum(d2, ((x - centroids[j]) ** 2).sum(axis=1))
    return centroids


def fit_clusters(points, k: int, seed: int, max_iter: int = 100) -> ClusterModel:
    """Cluster category-distribution vectors into k groups.

    Runs Lloyd iterations from a k-means++ start until the assignment stops
    changing or max_iter passes. Raises TooFewPoints when there are fewer
    points than clusters.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    x = _as_matrix(points)
    if len(x) < k:
        raise TooFewPoints(f"{len(x)} points cannot form {k} clusters")

    rng = np.random.default_rng(seed)
    centroids = _plus_plus_init(x, k, rng)
    labels = None
    inertia = np.inf
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        d2 = _sq_distances(x, centroids)
        new_labels = d2.argmin(axis=1)
        new_inertia = float(d2[np.arange(len(x)), new_labels].sum())
        if new_inertia > inertia * (1.0 + 1e-9) + 1e-12:
            raise InternalError(
                f"k-means inertia increased: {inertia} -> {new_inertia} at iteration {n_iter}"
            )
        inertia = new_inertia
        if labels is not None and np.array_equal(labels, new_labels):
            break
        labels = new_labels
        for j in range(k):
            members = x[labels == j]
            if len(members):
                centroids[j] = members.mean(axis=0)
        empty = [j for j in range(k) if not (labels == j).any()]
        if empty:
            # move each empty centroid onto the point currently worst-served
            dist_to_own = ((x - centroids[labels]) ** 2).sum(axis=1)
            order = np.argsort(-dist_to_own, kind="stable")
            taken: set[int] = set()
            for j in empty:
                pick = next(int(i) for i in order if int(i) not in taken)
                taken.add(pick)
                centroids[j] = x[pick]
    return ClusterModel(k=k, centroids=centroids, seed=seed, inertia=inertia, n_iter=n_iter)


def assign(point, model: ClusterModel) -> int:
    """Index of the nearest centroid; ties go to the lowest index."""
    p = np.asarray(point, dtype=float)
    if p.shape != (model.dim,):
        raise DimensionMismatch(f"point dim {p.shape} does not match centroid dim {model.dim}")
    return int(_sq_distances(p[None, :], model.centroids)[0].argmin())


def assign_many(points, model: ClusterModel) -> np.ndarray:
    x = _as_matrix(points)
    if x.shape[1] != model.dim:
        raise DimensionMismatch(f"point dim {x.shape[1]} does not match centroid dim {model.dim}")
    return _sq_distances(x, model.centroids).argmin(axis=1)


def cluster_histogram(points, model: ClusterModel) -> np.ndarray:
    """Normalized histogram of cluster assignments over a movie's utterances."""
    pts = list(points)
    if not pts:
        raise NoUtterances("no utterance points to assign")
    labels = assign_many(pts, model)
    counts = np.bincount(labels, minlength=model.k).astype(float)
    return counts / counts.sum()
