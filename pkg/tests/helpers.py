"""Shared builders for randomized test suites (all seeded, all deterministic)."""

from __future__ import annotations

import numpy as np

from quiverrep import Arrow, Quiver, Representation, direct_sum
from quiverrep.numerics import random_complex


def two_subspace_rep(theta: float) -> Representation:
    q = Quiver(("1", "2", "3"), (Arrow("a1", "1", "3"), Arrow("a2", "2", "3")))
    return Representation(
        q, {"1": 1, "2": 1, "3": 2},
        {"a1": np.array([[1.0], [0.0]], dtype=complex),
         "a2": np.array([[np.cos(theta)], [np.sin(theta)]], dtype=complex)})


def example6() -> Representation:
    q = Quiver(("1",), (Arrow("a1", "1", "1"), Arrow("a2", "1", "1")))
    return Representation(q, {"1": 2},
                          {"a1": np.array([[1, 0], [0, 0]], dtype=complex),
                           "a2": np.array([[0, 1], [0, 0]], dtype=complex)})


def example7() -> Representation:
    q = Quiver(("1",), (Arrow("a1", "1", "1"), Arrow("a2", "1", "1")))
    return Representation(q, {"1": 2},
                          {"a1": np.array([[1, 0], [0, 0]], dtype=complex),
                           "a2": np.ones((2, 2), dtype=complex)})


def loop_rep(matrix: np.ndarray) -> Representation:
    q = Quiver(("1",), (Arrow("a1", "1", "1"),))
    matrix = np.asarray(matrix, dtype=complex)
    return Representation(q, {"1": matrix.shape[0]}, {"a1": matrix})


def random_quiver(rng: np.random.Generator, n_vertices: int | None = None,
                  n_arrows: int | None = None, allow_loops: bool = True) -> Quiver:
    nv = int(rng.integers(2, 4)) if n_vertices is None else n_vertices
    na = int(rng.integers(2, 6)) if n_arrows is None else n_arrows
    vertices = tuple(str(i + 1) for i in range(nv))
    arrows = []
    for k in range(na):
        src = str(int(rng.integers(1, nv + 1)))
        dst = str(int(rng.integers(1, nv + 1)))
        if not allow_loops:
            while dst == src:
                dst = str(int(rng.integers(1, nv + 1)))
        arrows.append(Arrow(f"a{k + 1}", src, dst))
    return Quiver(vertices, tuple(arrows))


def random_acyclic_quiver(rng: np.random.Generator) -> Quiver:
    nv = int(rng.integers(2, 5))
    na = int(rng.integers(1, 6))
    vertices = tuple(str(i + 1) for i in range(nv))
    arrows = []
    for k in range(na):
        # arrows only point to strictly larger vertex labels: no cycles
        src = int(rng.integers(1, nv))
        dst = int(rng.integers(src + 1, nv + 1))
        arrows.append(Arrow(f"a{k + 1}", str(src), str(dst)))
    return Quiver(vertices, tuple(arrows))


def random_rep(rng: np.random.Generator, quiver: Quiver,
               max_dim: int = 3, min_dim: int = 0) -> Representation:
    dims = {v: int(rng.integers(min_dim, max_dim + 1)) for v in quiver.vertices}
    if sum(dims.values()) == 0:
        dims[quiver.vertices[0]] = 1
    maps = {a.name: random_complex(rng, (dims[a.dst], dims[a.src]))
            for a in quiver.arrows}
    return Representation(quiver, dims, maps)


def conjugate(rep: Representation, rng: np.random.Generator) -> Representation:
    """Isomorphic copy through a random well-conditioned basis change."""
    phi = {}
    for v in rep.quiver.vertices:
        d = rep.dims[v]
        phi[v] = random_complex(rng, (d, d)) + 2.0 * np.eye(d)
    maps = {a.name: phi[a.dst] @ rep.maps[a.name] @ np.linalg.inv(phi[a.src])
            for a in rep.quiver.arrows}
    return Representation(rep.quiver, dict(rep.dims), maps)


def random_decomposable(rng: np.random.Generator, quiver: Quiver,
                        max_dim: int = 2) -> Representation:
    a = random_rep(rng, quiver, max_dim=max_dim)
    b = random_rep(rng, quiver, max_dim=max_dim)
    return conjugate(direct_sum(a, b), rng)
