import pytest

from qpeterweyl.exactmath import ONE, Q, QINV, ZERO, QMatrix, inverse, kernel, rank
from qpeterweyl.ofun import comultiply, generators_m2, symbol
from qpeterweyl.schurweyl import (
    FunctionalElement,
    check_hecke,
    classical_symmetrizer,
    comultiply_sw,
    flip,
    frt_relations,
    from_pw,
    hecke_generators,
    multiply_sw,
    pi_matrix,
    project_pi,
    q_involution,
    r_matrix,
    rhat,
    schur_weyl_decompose,
    to_pw,
)
from qpeterweyl.uqrep import gl

S = [ZERO, Q, ONE, ZERO]
T = [ZERO, -QINV, ONE, ZERO]


def dual_st():
    M = QMatrix([[Q, -QINV], [ONE, ONE]])  # s, t columns on (e1e2, e2e1)
    Mi = inverse(M)
    return [ZERO, Mi[0, 0], Mi[0, 1], ZERO], [ZERO, Mi[1, 0], Mi[1, 1], ZERO]


# -- R-matrix ------------------------------------------------------------------


def test_r_matrix_k2():
    assert r_matrix(2) == QMatrix(
        [[Q, 0, 0, 0], [0, 1, 0, 0], [0, Q - QINV, 1, 0], [0, 0, 0, Q]]
    )


def test_rhat_spectrum_k2():
    R = rhat(2).matrix
    I = QMatrix.identity(4)
    assert len(kernel(R - I.scale(Q))) == 3
    assert len(kernel(R + I.scale(QINV))) == 1
    assert R.apply(S) == [Q * x for x in S]
    assert R.apply(T) == [-QINV * x for x in T]


@pytest.mark.parametrize("k", [2, 3])
def test_rhat_invariants(k):
    d = rhat(k)
    n = k * k
    I = QMatrix.identity(n)
    R = d.matrix
    assert ((R - I.scale(Q)) @ (R + I.scale(QINV))).is_zero()
    assert d.sym_projector + d.alt_projector == I
    assert d.sym_projector @ d.sym_projector == d.sym_projector
    assert d.alt_projector @ d.alt_projector == d.alt_projector
    assert R == d.sym_projector.scale(Q) - d.alt_projector.scale(QINV)
    R1, R2 = hecke_generators(k, 3)
    assert R1 @ R2 @ R1 == R2 @ R1 @ R2


def test_rhat_at_one_is_flip():
    assert rhat(3).matrix.eval_at_one() == flip(3).eval_at_one()


@pytest.mark.parametrize("k,n", [(2, 3), (3, 3), (2, 4)])
def test_hecke_relations_and_commutant(k, n):
    assert all(check_hecke(k, n).values())


def test_q_involution():
    Qm = q_involution(2)
    assert Qm @ Qm == QMatrix.identity(4)
    assert Qm.eval_at_one() == flip(2).eval_at_one()
    assert q_involution(3) @ q_involution(3) == QMatrix.identity(9)


def test_half_one_plus_q_rank():
    Qm = q_involution(2)
    P = (QMatrix.identity(16) + Qm.T.kron(Qm)).scale(ONE / 2)
    assert P @ P == P
    assert rank(P) == 10


# -- decomposition ------------------------------------------------------------------


@pytest.mark.parametrize(
    "k,n,table",
    [
        (2, 2, [((2, 0), 3, 1), ((1, 1), 1, 1)]),
        (2, 3, [((3, 0), 4, 1), ((2, 1), 2, 2)]),
        (3, 3, [((3, 0, 0), 10, 1), ((2, 1, 0), 8, 2), ((1, 1, 1), 1, 1)]),
    ],
)
def test_schur_weyl_tables(k, n, table):
    D = schur_weyl_decompose(k, n)
    assert [(l.hw, dv, dw) for l, dv, dw, _ in D.isotypic] == table
    assert sum(dv * dw for _, dv, dw, _ in D.isotypic) == k**n


def test_summary_string():
    assert schur_weyl_decompose(2, 3).summary() == "4x1 + 2x2 = 8"


def test_equivariant_basis_is_fixed_by_pi():
    D = schur_weyl_decompose(2, 3)
    for key, X in D.equivariant_basis.items():
        assert project_pi(D, X) == X
        lam, b, c = key
        assert to_pw(D, X) == symbol(gl(2), lam, c, b)


# -- pi -------------------------------------------------------------------------------


def test_pi_kills_mixed_weight_zero():
    D = schur_weyl_decompose(2, 2)
    s_, t_ = dual_st()
    assert project_pi(D, FunctionalElement.pure(2, s_, T, 2)).is_zero()
    assert project_pi(D, FunctionalElement.pure(2, t_, S, 2)).is_zero()
    st = FunctionalElement.pure(2, s_, S, 2)
    assert project_pi(D, st) == st


def test_pi_equals_half_one_plus_q():
    Qm = q_involution(2)
    assert pi_matrix(2, 2) == (QMatrix.identity(16) + Qm.T.kron(Qm)).scale(ONE / 2)


@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (3, 2)])
def test_pi_idempotent_with_expected_kernel(k, n):
    P = pi_matrix(k, n)
    assert P @ P == P
    D = schur_weyl_decompose(k, n)
    assert rank(P) == sum(dv * dv for _, dv, _, _ in D.isotypic)


def test_pi_preserves_values():
    D = schur_weyl_decompose(2, 2)
    phi = FunctionalElement(2, 2, {((0, 1), (1, 0)): Q, ((1, 1), (0, 0)): ONE, ((0, 0), (0, 0)): 2})
    pphi = project_pi(D, phi)
    for word in ([], ["E1"], ["F1", "F1"], ["K1", "E1"], ["E1", "F1", "K1"]):
        assert pphi.evaluate(word) == phi.evaluate(word)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        project_pi(schur_weyl_decompose(2, 2), FunctionalElement(2, 3))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pi_at_one_is_classical_symmetrizer(n):
    assert pi_matrix(2, n).eval_at_one() == classical_symmetrizer(n).eval_at_one()


def test_classical_symmetrizer_oracle():
    P = classical_symmetrizer(2, 3)
    assert P @ P == P
    assert pi_matrix(3, 2).eval_at_one() == P.eval_at_one()
    D = schur_weyl_decompose(2, 2)
    P2 = classical_symmetrizer(2)
    for X in D.equivariant_basis.values():
        v = X.to_matrix()
        vec = QMatrix([[v[r, c]] for r in range(4) for c in range(4)])
        assert (P2 @ vec).eval_at_one() == vec.eval_at_one()


# -- products through pi ----------------------------------------------------------------


@pytest.mark.parametrize("k", [2, 3])
def test_multiply_sw_matches_peter_weyl(k):
    alg = gl(k)
    D1, D2 = schur_weyl_decompose(k, 1), schur_weyl_decompose(k, 2)
    for i in range(k):
        for j in range(k):
            f = symbol(alg, (1,), i, j)
            for p in range(k):
                for r in range(k):
                    g = symbol(alg, (1,), p, r)
                    assert to_pw(D2, multiply_sw(from_pw(D1, f), from_pw(D1, g))) == f * g


def test_multiply_sw_degree_two_by_one():
    alg = gl(2)
    D1, D2, D3 = (schur_weyl_decompose(2, n) for n in (1, 2, 3))
    f = symbol(alg, (2, 0), 1, 0) + symbol(alg, (1, 1), 0, 0).scale(Q)
    g = symbol(alg, (1, 0), 0, 1)
    assert to_pw(D3, multiply_sw(from_pw(D2, f), from_pw(D1, g))) == f * g


def test_multiply_sw_unit():
    D1 = schur_weyl_decompose(2, 1)
    f = from_pw(D1, generators_m2()["b"])
    one = FunctionalElement(2, 0, {((), ()): ONE})
    assert multiply_sw(f, one) == f


def test_comultiply_sw():
    D = schur_weyl_decompose(2, 2)
    f = symbol(gl(2), (2, 0), 0, 1) + symbol(gl(2), (1, 1), 0, 0)
    assert comultiply_sw(from_pw(D, f)) == comultiply(f)


# -- FRT -------------------------------------------------------------------------------


QUADRATIC_RELATIONS = {
    "a*b - q*b*a = 0",
    "a*c - q*c*a = 0",
    "b*d - q*d*b = 0",
    "c*d - q*d*c = 0",
    "b*c - c*b = 0",
    "a*d - d*a - (q - q^-1)*b*c = 0",
}


def test_frt_k2():
    rep = frt_relations(2)
    assert rep.ok
    assert len(rep.residuals) == 16
    assert set(rep.lines()) == QUADRATIC_RELATIONS and len(rep.lines()) == 6


def test_frt_k2_at_one_commutative():
    lines = frt_relations(2).lines(at_one=True)
    assert all(l.count(" - ") == 1 for l in lines)
    assert "a*d - d*a = 0" in lines


def test_frt_k3():
    rep = frt_relations(3)
    assert rep.ok and len(rep.residuals) == 81
    assert len(rep.lines()) == 36
    assert "x11*x22 - x22*x11 - (q - q^-1)*x12*x21 = 0" in rep.lines()
