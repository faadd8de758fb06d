"""Structural verdicts: indecomposability, transitivity, simplicity, irreducibility.

Indecomposability uses the local-algebra test: a nonzero representation is
indecomposable iff End modulo its Jacobson radical is one-dimensional.  The
radical is the kernel of the trace bilinear form (x, y) -> tr(xy) on the
acting space, which identifies it in characteristic zero.  Splitting
idempotents come from spectral projectors of random End elements, computed
via an ordered Schur decomposition and a Sylvester solve.

Simplicity follows the literal subrepresentation definition: the unital
algebra generated by the vertex coordinate idempotents and the arrow maps
(extended by zero) has the graded subrepresentations as its invariant
subspaces, so the representation is simple iff that algebra is the full
matrix algebra on the total space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import NumericalFailure, ValidationError
from .intertwiner import HomBasis, end, hom_scale, intertwining_residual
from .numerics import (DEFAULT_TOL, Tolerances, frob, nullspace, numerical_rank,
                       random_complex)
from .quiver import Quiver, Arrow
from .rep import Representation, restrict


# ---------------------------------------------------------------------------
# block embedding of vertex tuples into B((+)_v H_v)

def block_offsets(rep: Representation) -> dict[str, int]:
    offsets, pos = {}, 0
    for v in rep.quiver.vertices:
        offsets[v] = pos
        pos += rep.dims[v]
    return offsets


def embed_tuple(rep: Representation, t: dict[str, np.ndarray]) -> np.ndarray:
    """Block-diagonal matrix of a vertex-indexed tuple on the total space."""
    d = rep.total_dim
    out = np.zeros((d, d), dtype=complex)
    off = block_offsets(rep)
    for v in rep.quiver.vertices:
        k = rep.dims[v]
        out[off[v]:off[v] + k, off[v]:off[v] + k] = t[v]
    return out


# ---------------------------------------------------------------------------
# algebra bases

@dataclass(frozen=True, eq=False)
class AlgebraBasis:
    """Orthonormal basis of a subalgebra of B(C^d), matrices viewed as vectors."""

    ambient_dim: int
    basis: tuple[np.ndarray, ...]
    dimension: int
    cutoff: float

    def span_residual(self, matrix: np.ndarray) -> float:
        """Distance from ``matrix`` to the span of the basis."""
        vec = matrix.reshape(-1)
        proj = np.zeros_like(vec)
        for b in self.basis:
            bv = b.reshape(-1)
            proj += np.vdot(bv, vec) * bv
        return float(np.linalg.norm(vec - proj))

    def contains_identity(self) -> bool:
        eye = np.eye(self.ambient_dim, dtype=complex)
        scale = max(1.0, float(np.sqrt(self.ambient_dim)))
        return self.span_residual(eye) <= 1e-8 * scale


def _orthonormal_rows(rows: np.ndarray, tol: Tolerances) -> np.ndarray:
    """Orthonormal basis of the row space (rows as vectors in C^k)."""
    if rows.shape[0] == 0:
        return rows
    _, svals, vh = np.linalg.svd(rows, full_matrices=False)
    sigma_max = float(svals[0]) if svals.size else 0.0
    cutoff = tol.svd_cutoff(*rows.shape, sigma_max)
    rank = int(np.count_nonzero(svals > cutoff))
    return vh[:rank]


def end_algebra(rep: Representation, tol: Tolerances = DEFAULT_TOL,
                basis: HomBasis | None = None) -> AlgebraBasis:
    """End(H,f) embedded block-diagonally as a subalgebra of B(C^d)."""
    basis = end(rep, tol) if basis is None else basis
    mats = tuple(embed_tuple(rep, t) for t in basis.basis)
    return AlgebraBasis(rep.total_dim, mats, len(mats), basis.cutoff)


def generated_algebra(rep: Representation, tol: Tolerances = DEFAULT_TOL) -> AlgebraBasis:
    """Unital algebra generated by vertex idempotents and extended arrow maps.

    Span-closure under products, iterated until the dimension stabilizes;
    aborts if the candidate dimension exceeds d^2 (impossible mathematically,
    guards numerics).
    """
    if rep.is_zero():
        raise ValidationError("generated algebra of the zero representation")
    d = rep.total_dim
    off = block_offsets(rep)
    gens = [np.eye(d, dtype=complex)]
    for v in rep.quiver.vertices:
        k = rep.dims[v]
        if k:
            e = np.zeros((d, d), dtype=complex)
            e[off[v]:off[v] + k, off[v]:off[v] + k] = np.eye(k)
            gens.append(e)
    for a in rep.quiver.arrows:
        if rep.maps[a.name].size:
            m = np.zeros((d, d), dtype=complex)
            m[off[a.dst]:off[a.dst] + rep.dims[a.dst],
              off[a.src]:off[a.src] + rep.dims[a.src]] = rep.maps[a.name]
            gens.append(m)

    rows = _orthonormal_rows(np.array([g.reshape(-1) for g in gens]), tol)
    while True:
        mats = rows.reshape(-1, d, d)
        prods = np.einsum("iab,jbc->ijac", mats, mats).reshape(-1, d * d)
        grown = _orthonormal_rows(np.vstack([rows, prods]), tol)
        if grown.shape[0] > d * d:
            raise NumericalFailure(
                f"span closure exceeded ambient dimension squared ({d * d})"
            )
        if grown.shape[0] == rows.shape[0]:
            break
        rows = grown
    basis = tuple(np.ascontiguousarray(r.reshape(d, d)) for r in rows)
    return AlgebraBasis(d, basis, len(basis), 0.0)


def radical_dimension(rep: Representation, tol: Tolerances = DEFAULT_TOL,
                      basis: HomBasis | None = None) -> int:
    """Dimension of the Jacobson radical of End, via the trace-form kernel."""
    basis = end(rep, tol) if basis is None else basis
    k = basis.dimension
    if k == 0:
        return 0
    gram = np.zeros((k, k), dtype=complex)
    for i, ti in enumerate(basis.basis):
        for j, tj in enumerate(basis.basis):
            gram[i, j] = sum(np.trace(ti[v] @ tj[v]) for v in rep.quiver.vertices
                             if rep.dims[v])
    return nullspace(gram, tol).dimension


# ---------------------------------------------------------------------------
# eigenvalue clustering and spectral projectors

def cluster_eigenvalues(values: np.ndarray, threshold: float) -> list[np.ndarray]:
    """Single-linkage clusters; two eigenvalues join when closer than ``threshold``."""
    order = np.lexsort((values.imag, values.real))
    vals = values[order]
    parent = list(range(len(vals)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if abs(vals[i] - vals[j]) < threshold:
                parent[find(i)] = find(j)
    groups: dict[int, list[complex]] = {}
    for i in range(len(vals)):
        groups.setdefault(find(i), []).append(vals[i])
    clusters = [np.array(g) for g in groups.values()]
    clusters.sort(key=lambda g: (g.real.mean(), g.imag.mean()))
    return clusters


def widest_two_group_split(values: np.ndarray,
                           threshold: float) -> tuple[np.ndarray, np.ndarray] | None:
    """Cut the single-linkage hierarchy into two groups at the widest gap.

    Returns None when the final merge distance is below ``threshold`` (no
    split: everything is one cluster at that resolution).  Choosing the widest
    gap keeps the downstream Sylvester solve for the spectral projector well
    conditioned even when defective eigenvalues smear into nearby singletons.
    """
    n = len(values)
    if n < 2:
        return None
    groups = [[i] for i in range(n)]
    while len(groups) > 2:
        best, best_pair = np.inf, (0, 1)
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                d = min(abs(values[a] - values[b]) for a in groups[i] for b in groups[j])
                if d < best:
                    best, best_pair = d, (i, j)
        i, j = best_pair
        groups[i] = groups[i] + groups[j]
        del groups[j]
    gap = min(abs(values[a] - values[b]) for a in groups[0] for b in groups[1])
    if gap <= threshold:
        return None
    first, second = (np.array(values[g]) for g in groups)
    return first, second


def spectral_projector(matrix: np.ndarray, selected: np.ndarray,
                       others: np.ndarray) -> np.ndarray:
    """Projector onto the invariant subspace of the eigenvalues in ``selected``.

    Idempotent but in general not self-adjoint: ordered Schur form plus a
    Sylvester solve for the coupling block.
    """
    n = matrix.shape[0]

    def sort_fn(ev):
        return bool(np.min(np.abs(ev - selected)) < np.min(np.abs(ev - others)))

    t, z, sdim = sla.schur(matrix, output="complex", sort=sort_fn)
    if sdim == 0:
        return np.zeros((n, n), dtype=complex)
    if sdim == n:
        return np.eye(n, dtype=complex)
    t11, t12, t22 = t[:sdim, :sdim], t[:sdim, sdim:], t[sdim:, sdim:]
    coupling = sla.solve_sylvester(t11, -t22, t12)
    core = np.zeros((n, n), dtype=complex)
    core[:sdim, :sdim] = np.eye(sdim)
    core[:sdim, sdim:] = coupling
    return z @ core @ z.conj().T


# ---------------------------------------------------------------------------
# indecomposability

@dataclass(frozen=True, eq=False)
class IndecomposableResult:
    indecomposable: bool
    end_dim: int
    radical_dim: int
    witness: dict[str, np.ndarray] | None
    seed: int

    def __bool__(self) -> bool:
        return self.indecomposable


def is_indecomposable(rep: Representation, tol: Tolerances = DEFAULT_TOL,
                      seed: int = 0, max_tries: int = 24) -> IndecomposableResult:
    """Local-algebra test; on a negative verdict returns a splitting idempotent."""
    if rep.is_zero():
        raise ValidationError("the zero representation has no (in)decomposability verdict")
    basis = end(rep, tol)
    rad = radical_dimension(rep, tol, basis)
    semisimple = basis.dimension - rad
    if semisimple == 1:
        return IndecomposableResult(True, basis.dimension, rad, None, seed)
    witness = _splitting_idempotent(rep, basis, tol, seed, max_tries)
    return IndecomposableResult(False, basis.dimension, rad, witness, seed)


def _splitting_idempotent(rep: Representation, basis: HomBasis, tol: Tolerances,
                          seed: int, max_tries: int) -> dict[str, np.ndarray]:
    rng = np.random.default_rng(seed)
    scale = hom_scale(rep, rep)
    d = rep.total_dim
    failures = []
    for attempt in range(max_tries):
        coeff = random_complex(rng, (basis.dimension,))
        x = {v: sum(c * t[v] for c, t in zip(coeff, basis.basis))
             for v in rep.quiver.vertices}
        eigs = np.concatenate([np.linalg.eigvals(x[v]) for v in rep.quiver.vertices
                               if rep.dims[v]])
        radius = float(np.max(np.abs(eigs)))
        if radius == 0.0:
            failures.append("nilpotent sample")
            continue
        # the semisimple quotient already certifies that a split exists; if
        # the spectrum refuses to separate at the clustering threshold
        # (defective eigenvalue smear can sit below it), later attempts
        # accept the widest gap outright
        threshold = tol.cluster_tol(radius) if attempt < max_tries // 2 else 0.0
        split = widest_two_group_split(eigs, threshold)
        if split is None:
            failures.append("spectrum did not split")
            continue
        selected, others = split
        p = {}
        for v in rep.quiver.vertices:
            if rep.dims[v] == 0:
                p[v] = np.zeros((0, 0), dtype=complex)
            else:
                p[v] = spectral_projector(x[v], selected, others)
        # one Newton step stabilizes downstream column-space extraction
        p = {v: 3 * (m @ m) - 2 * (m @ m @ m) for v, m in p.items()}
        norm_p = np.sqrt(sum(frob(m) ** 2 for m in p.values()))
        defect = np.sqrt(sum(frob(m @ m - m) ** 2 for m in p.values()))
        trace = sum(float(np.trace(m).real) for m in p.values() if m.size)
        rank = int(round(trace))
        if defect > tol.idem_rel * tol.global_scale * max(norm_p, 1e-300):
            failures.append(f"idempotent defect {defect:.2e}")
            continue
        if not 0 < rank < d:
            failures.append("trivial projector")
            continue
        membership = intertwining_residual(rep, rep, p)
        if membership > max(tol.hom_tol(scale), tol.idem_rel * norm_p):
            failures.append(f"projector left End (residual {membership:.2e})")
            continue
        return p
    raise NumericalFailure(
        "failed to produce a splitting idempotent although End/rad has dimension > 1; "
        f"attempts: {failures}"
    )


def is_transitive(rep: Representation, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff End(H,f) is the scalars."""
    if rep.is_zero():
        raise ValidationError("the zero representation has no transitivity verdict")
    return end(rep, tol).dimension == 1


# ---------------------------------------------------------------------------
# simplicity

@dataclass(frozen=True, eq=False)
class SimpleResult:
    simple: bool
    algebra_dim: int
    witness: dict[str, np.ndarray] | None
    seed: int

    def __bool__(self) -> bool:
        return self.simple


def is_simple(rep: Representation, tol: Tolerances = DEFAULT_TOL,
              seed: int = 0, max_tries: int = 24) -> SimpleResult:
    """Burnside test on the generated algebra; a negative verdict carries a
    proper nonzero invariant graded subspace as per-vertex inclusions."""
    if rep.is_zero():
        raise ValidationError("the zero representation has no simplicity verdict")
    alg = generated_algebra(rep, tol)
    d = rep.total_dim
    if alg.dimension == d * d:
        return SimpleResult(True, alg.dimension, None, seed)
    witness = _invariant_subspace_witness(rep, alg, tol, seed, max_tries)
    return SimpleResult(False, alg.dimension, witness, seed)


def _invariant_subspace_witness(rep: Representation, alg: AlgebraBasis,
                                tol: Tolerances, seed: int,
                                max_tries: int) -> dict[str, np.ndarray]:
    rng = np.random.default_rng(seed)
    d = rep.total_dim
    off = block_offsets(rep)
    best: dict[str, np.ndarray] | None = None
    best_dim = d
    for _ in range(max_tries):
        coeff = random_complex(rng, (alg.dimension,))
        x = sum(c * b for c, b in zip(coeff, alg.basis))
        _, vectors = np.linalg.eig(x)
        for idx in range(vectors.shape[1]):
            v = vectors[:, idx]
            orbit = np.array([b @ v for b in alg.basis])
            span = _orthonormal_rows(orbit, tol)
            r = span.shape[0]
            if not 0 < r < min(d, best_dim + 1):
                continue
            cols = span.T
            inclusions, graded = {}, 0
            for vertex in rep.quiver.vertices:
                block = cols[off[vertex]:off[vertex] + rep.dims[vertex], :]
                # rank must be judged against the unit columns of the whole
                # subspace, not the block's own (possibly noise-level) scale
                inc = _block_basis(block, tol)
                inclusions[vertex] = inc
                graded += inc.shape[1]
            if graded != r:
                continue  # not graded, numerical accident; try another vector
            best, best_dim = inclusions, r
        if best is not None:
            return best
    raise NumericalFailure(
        "generated algebra is proper but no invariant subspace witness was found"
    )


def _block_basis(block: np.ndarray, tol: Tolerances) -> np.ndarray:
    """Column-space basis of a vertex block of unit vectors; absolute cutoff."""
    m, n = block.shape
    if m == 0 or n == 0:
        return np.zeros((m, 0), dtype=complex)
    u, svals, _ = np.linalg.svd(block, full_matrices=False)
    cutoff = tol.svd_cutoff(m, n, 1.0)
    rank = int(np.count_nonzero(svals > cutoff))
    return u[:, :rank]


def is_canonically_simple(rep: Representation) -> bool:
    """Exactly one vertex of dimension 1, all others 0, all maps zero."""
    dims = list(rep.dims.values())
    if sorted(dims) != [0] * (len(dims) - 1) + [1]:
        return False
    zero_tol = 1e-12 * max(1.0, rep.map_scale())
    return all(m.size == 0 or np.max(np.abs(m)) <= zero_tol for m in rep.maps.values())


# ---------------------------------------------------------------------------
# irreducibility

def star_closed_end_dim(rep: Representation, tol: Tolerances = DEFAULT_TOL,
                        basis: HomBasis | None = None) -> int:
    """Dimension of C = { T in End : T* in End }, the self-adjoint-closed core."""
    basis = end(rep, tol) if basis is None else basis
    if basis.dimension == 0:
        return 0
    vecs = np.array([_tuple_vec(rep, t) for t in basis.basis])
    star = np.array([_tuple_vec(rep, {v: t[v].conj().T for v in t}) for t in basis.basis])
    joint_rank = numerical_rank(np.vstack([vecs, star]), tol)
    return 2 * basis.dimension - joint_rank


def _tuple_vec(rep: Representation, t: dict[str, np.ndarray]) -> np.ndarray:
    parts = [t[v].reshape(-1) for v in rep.quiver.vertices]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=complex)


def is_irreducible(rep: Representation, tol: Tolerances = DEFAULT_TOL) -> bool:
    """No nontrivial endomorphism that is an orthogonal projection at every vertex.

    A non-scalar element of the star-closed core yields a non-scalar Hermitian
    element whose spectral projection is such a projector, and conversely.
    """
    if rep.is_zero():
        raise ValidationError("the zero representation has no irreducibility verdict")
    return star_closed_end_dim(rep, tol) == 1


# ---------------------------------------------------------------------------
# decomposition into indecomposables

@dataclass(frozen=True, eq=False)
class DecompositionTree:
    rep: Representation
    idempotent: dict[str, np.ndarray] | None
    children: tuple["DecompositionTree", "DecompositionTree"] | None

    @property
    def is_leaf(self) -> bool:
        return self.children is None

    def leaves(self) -> list["DecompositionTree"]:
        if self.is_leaf:
            return [self]
        return self.children[0].leaves() + self.children[1].leaves()

    def leaf_reps(self) -> list[Representation]:
        return [leaf.rep for leaf in self.leaves()]


def decompose(rep: Representation, tol: Tolerances = DEFAULT_TOL,
              seed: int = 0) -> DecompositionTree:
    """Recursively split along idempotent witnesses until every leaf is
    indecomposable; the direct sum of the leaves is isomorphic to the input."""
    res = is_indecomposable(rep, tol, seed)
    if res.indecomposable:
        return DecompositionTree(rep, None, None)
    p = res.witness
    inc_left, inc_right = {}, {}
    for v in rep.quiver.vertices:
        inc_left[v] = _idempotent_range(p[v])
        eye = np.eye(rep.dims[v], dtype=complex)
        inc_right[v] = _idempotent_range(eye - p[v])
        if inc_left[v].shape[1] + inc_right[v].shape[1] != rep.dims[v]:
            raise NumericalFailure(
                f"idempotent ranges at vertex {v!r} do not complement each other"
            )
    left = restrict(rep, inc_left, tol)
    right = restrict(rep, inc_right, tol)
    return DecompositionTree(rep, p, (decompose(left, tol, seed * 2 + 1),
                                      decompose(right, tol, seed * 2 + 2)))


def _idempotent_range(p: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the range of an idempotent; rank = trace."""
    if p.shape[0] == 0:
        return np.zeros((0, 0), dtype=complex)
    rank = int(round(float(np.trace(p).real)))
    if rank == 0:
        return np.zeros((p.shape[0], 0), dtype=complex)
    u, _, _ = np.linalg.svd(p)
    return u[:, :rank]


# ---------------------------------------------------------------------------
# strongly irreducible operators

def single_jordan_block_criterion(matrix: np.ndarray,
                                  tol: Tolerances = DEFAULT_TOL) -> bool:
    """One eigenvalue cluster and geometric multiplicity one."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise ValidationError("expected a nonempty square matrix")
    n = matrix.shape[0]
    if n == 1:
        return True
    eigs = np.linalg.eigvals(matrix)
    radius = float(np.max(np.abs(eigs)))
    if radius > 0.0:
        clusters = cluster_eigenvalues(eigs, tol.cluster_tol(radius))
        if len(clusters) > 1:
            return False
    center = complex(np.mean(eigs))
    nullity = n - numerical_rank(matrix - center * np.eye(n), tol)
    return nullity == 1


def is_strongly_irreducible(matrix: np.ndarray, tol: Tolerances = DEFAULT_TOL,
                            seed: int = 0) -> bool:
    """No non-trivial pair of complementary (not necessarily orthogonal)
    invariant subspaces; in finite dimension, exactly the single Jordan blocks.

    Decided through indecomposability of the one-loop representation and
    cross-checked against the direct single-Jordan-block criterion; a
    disagreement raises NumericalFailure naming both verdicts.
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise ValidationError("expected a nonempty square matrix")
    loop = Quiver(("1",), (Arrow("a1", "1", "1"),))
    rep = Representation(loop, {"1": matrix.shape[0]}, {"a1": matrix})
    via_rep = is_indecomposable(rep, tol, seed).indecomposable
    direct = single_jordan_block_criterion(matrix, tol)
    if via_rep != direct:
        raise NumericalFailure(
            "strong-irreducibility cross-check disagreement: "
            f"one-loop indecomposability says {via_rep}, "
            f"single-Jordan-block criterion says {direct}"
        )
    return via_rep
