import dataclasses
import threading

import pytest

from qpeterweyl.exactmath import ONE, Q, QINV, ZERO, QMatrix, qint
from qpeterweyl.uqrep import (
    SL2,
    DecompositionError,
    IrrepLabel,
    Rep,
    check_relations,
    decompose,
    gl,
    highest_weight_vectors,
    irrep,
    labels_up_to,
    tensor_power,
    tensor_rep,
    trivial_rep,
    vector_rep,
    weyl_dimension,
)

GL2, GL3 = gl(2), gl(3)


def e(i, n):
    v = [ZERO] * n
    v[i] = ONE
    return v


def test_vector_rep_gl2():
    V = vector_rep(GL2)
    assert V.K[0] == QMatrix.diag([Q, QINV])
    assert V.E[0] == QMatrix([[0, 1], [0, 0]])
    assert V.F[0] == QMatrix([[0, 0], [1, 0]])
    assert V.weights == ((1, 0), (0, 1))


def test_vector_rep_sl2_commutator():
    V = vector_rep(SL2)
    EF = V.E[0] @ V.F[0] - V.F[0] @ V.E[0]
    assert EF == QMatrix.diag([1, -1])
    assert EF == (V.K[0] - V.Kinv[0]).scale(ONE / (Q - QINV))


def test_vector_rep_gl3():
    V = vector_rep(GL3)
    assert V.dim == 3
    assert V.E[0].apply(e(1, 3)) == e(0, 3)
    assert V.E[1].apply(e(2, 3)) == e(1, 3)


def test_coproduct_on_e1e1():
    VV = tensor_rep(vector_rep(GL2), vector_rep(GL2))
    # basis e1e1, e1e2, e2e1, e2e2
    assert VV.F[0].apply(e(0, 4)) == [ZERO, Q, ONE, ZERO]


def test_coproduct_raising_on_e2e2():
    VV = tensor_rep(vector_rep(GL2), vector_rep(GL2))
    # E(e2 e2) = E e2 (x) K^-1 e2 + e2 (x) E e2 = q e1e2 + e2e1
    assert VV.E[0].apply(e(3, 4)) == [ZERO, Q, ONE, ZERO]
    assert check_relations(VV).ok


def test_tensor_with_trivial():
    V = vector_rep(GL3)
    VT = tensor_rep(V, trivial_rep(GL3))
    assert all(a == b for (_, a), (_, b) in zip(V.generators(), VT.generators()))


def test_tensor_algebra_mismatch():
    with pytest.raises(ValueError):
        tensor_rep(vector_rep(GL2), vector_rep(GL3))


def test_highest_weight_vectors():
    assert highest_weight_vectors(vector_rep(GL2)) == [((1, 0), e(0, 2))]
    hw = highest_weight_vectors(tensor_power(GL2, 2))
    assert hw == [((2, 0), e(0, 4)), ((1, 1), [ZERO, ONE, -Q, ZERO])]
    # same line as e2e1 - q^-1 e1e2
    t = [ZERO, -QINV, ONE, ZERO]
    assert [x * -QINV for x in hw[1][1]] == t


def test_highest_weight_vectors_cube():
    ws = [w for w, _ in highest_weight_vectors(tensor_power(GL2, 3))]
    assert ws == [(3, 0), (2, 1), (2, 1)]


def test_zero_weight_kernel_is_t_line():
    from qpeterweyl.exactmath import kernel

    VV = tensor_power(GL2, 2)
    E0 = VV.E[0].submatrix([0], [1, 2])  # E maps weight (1,1) into weight (2,0)
    (v,) = kernel(E0)
    t = [-QINV, ONE]
    ratio = v.col(0)[1] / t[1]
    assert [x * ratio for x in t] == v.col(0)


@pytest.mark.parametrize(
    "alg,n,expected",
    [
        (GL2, 2, [((2, 0), 1), ((1, 1), 1)]),
        (GL2, 3, [((3, 0), 1), ((2, 1), 2)]),
        (GL3, 3, [((3, 0, 0), 1), ((2, 1, 0), 2), ((1, 1, 1), 1)]),
    ],
)
def test_decompose_tensor_powers(alg, n, expected):
    R = tensor_power(alg, n)
    D = decompose(R)
    assert [(c.label.hw, c.multiplicity) for c in D.constituents] == expected
    assert sum(c.multiplicity * c.label.dim for c in D.constituents) == R.dim
    assert D.C @ D.Cinv == QMatrix.identity(R.dim)


def test_decompose_block_diagonal():
    R = tensor_power(GL2, 3)
    D = decompose(R)
    offs = D.block_offsets()
    for name, g in R.generators():
        B = D.Cinv @ g @ D.C
        for (lab, k), off in offs.items():
            d = lab.dim
            blk = irrep(lab).word_matrix([name])
            assert B.submatrix(range(off, off + d), range(off, off + d)) == blk
        # nothing outside the blocks
        nz = sum(len(r) for r in B.nonzeros())
        assert nz == sum(len(r) for lab, _ in offs for r in irrep(lab).word_matrix([name]).nonzeros())


def test_decompose_vector_times_trivial():
    D = decompose(tensor_rep(vector_rep(GL2), trivial_rep(GL2)))
    assert len(D.constituents) == 1 and D.C == QMatrix.identity(2)


def test_sl2_closed_form():
    V1 = irrep(IrrepLabel.of(SL2, 1))
    assert V1.dim == 2 and V1.E[0].apply(e(1, 2)) == e(0, 2) and V1.F[0].apply(e(0, 2)) == e(1, 2)
    V2 = irrep(IrrepLabel.of(SL2, 2))
    assert V2.E[0].apply(e(1, 3)) == e(0, 3)
    assert V2.E[0].apply(e(2, 3)) == [ZERO, qint(2), ZERO]
    assert check_relations(V2).ok


def test_sl2_closed_form_matches_tensor_square():
    D = decompose(tensor_power(SL2, 2))
    (emb,) = D.constituents[0].embeddings
    R = D.source
    V2 = irrep(IrrepLabel.of(SL2, 2))
    for (_, g), (_, h) in zip(R.generators(), V2.generators()):
        assert g @ emb == emb @ h


def test_gl2_determinant_line():
    V = irrep(IrrepLabel.of(GL2, 1, 1))
    assert V.dim == 1 and V.K[0] == QMatrix.identity(1)


def test_registry_memoized_and_thread_safe():
    lab = IrrepLabel.of(GL3, 3, 1, 0)
    out = []
    threads = [threading.Thread(target=lambda: out.append(irrep(lab))) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r is out[0] for r in out)
    assert irrep(lab) == irrep(IrrepLabel.of(GL3, 3, 1))


@pytest.mark.parametrize("alg,size", [(SL2, 6), (GL2, 4), (GL3, 3)])
def test_irreps_valid_and_regular_at_one(alg, size):
    for lab in labels_up_to(alg, size):
        R = irrep(lab)
        assert R.dim == weyl_dimension(lab)
        assert check_relations(R).ok
        for _, g in R.generators():
            g.eval_at_one()


@pytest.mark.parametrize("alg,size", [(SL2, 5), (GL2, 3), (GL3, 3)])
def test_q1_models_match_classical(alg, size):
    cl = alg.at_one()
    for lab in labels_up_to(alg, size):
        R, Rc = irrep(lab), irrep(IrrepLabel(cl, lab.hw))
        assert check_relations(Rc).ok
        for name in ("E", "F"):
            for i in range(1, alg.rank + 1):
                assert R.gen(name, i).eval_at_one() == Rc.gen(name, i).eval_at_one()


def test_weyl_dimension_values():
    assert weyl_dimension(IrrepLabel.of(SL2, 4)) == 5
    assert weyl_dimension(IrrepLabel.of(GL3, 2, 1, 0)) == 8
    assert weyl_dimension(IrrepLabel.of(GL3, 3, 2, 1)) == 8
    assert weyl_dimension(IrrepLabel.of(GL3, 4, 2, 0)) == 27


def test_bad_labels():
    with pytest.raises(ValueError):
        IrrepLabel.of(GL2, 1, 2)
    with pytest.raises(ValueError):
        IrrepLabel.of(GL2, 1, 1, 1)
    with pytest.raises(ValueError):
        IrrepLabel.of(SL2, -1)


def test_corrupted_rep_fails_relations():
    V = vector_rep(GL2)
    bad = dataclasses.replace(V, E=(V.E[0].scale(2),))
    rep = check_relations(bad)
    assert not rep.ok
    assert any("E1F1" in f for f in rep.failures)


def test_rep_json_round_trip():
    R = tensor_power(GL2, 2)
    assert Rep.from_dict(R.to_dict()) == R
    d = decompose(R).to_dict()
    assert [c["label"] for c in d["constituents"]] == [[2, 0], [1, 1]]


def test_decomposition_error_on_non_semisimple_input():
    # a 2-dim module with E nilpotent and F = 0 is not type 1 semisimple
    V = vector_rep(SL2)
    bad = dataclasses.replace(V, F=(QMatrix.zeros(2, 2),))
    with pytest.raises(DecompositionError):
        decompose(bad)
