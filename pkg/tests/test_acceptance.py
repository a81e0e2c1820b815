"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import random
import time
from contextlib import contextmanager

import pytest

from qpeterweyl.clebsch import bracket_sums, change_multiplicity_basis, isotypic_embeddings, threej, threej_from_embeddings
from qpeterweyl.exactmath import ONE, Q, QINV, ZERO, QMatrix, QScalar, inverse, normalize, rank
from qpeterweyl.ofun import (
    PWTensor,
    comultiplication_constants,
    comultiply,
    generators_m2,
    pairing,
    pairing_tensor,
    random_element,
    specialize_q1,
    structure_constants,
    verify_hopf,
)
from qpeterweyl.schurweyl import (
    FunctionalElement,
    check_hecke,
    frt_relations,
    pi_matrix,
    project_pi,
    q_involution,
    schur_weyl_decompose,
    to_pw,
)
from qpeterweyl.uqrep import SL2, IrrepLabel, gl, labels_up_to, tensor_power, weyl_dimension

GL2 = gl(2)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, name):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            with capsys.disabled():
                print(f"\n[acceptance {number}] {name}: FAIL ({time.perf_counter() - start:.2f}s)")
            raise
        with capsys.disabled():
            print(f"\n[acceptance {number}] {name}: PASS ({time.perf_counter() - start:.2f}s)")

    return run


def test_criterion_1_frt_relations(criterion):
    with criterion(1, "FRT relations for k=2"):
        start = time.perf_counter()
        rep = frt_relations(2)
        elapsed = time.perf_counter() - start
        assert rep.ok and len(rep.residuals) == 16 and not rep.witnesses
        assert sorted(rep.lines()) == sorted(
            [
                "a*b - q*b*a = 0",
                "a*c - q*c*a = 0",
                "b*d - q*d*b = 0",
                "c*d - q*d*c = 0",
                "b*c - c*b = 0",
                "a*d - d*a - (q - q^-1)*b*c = 0",
            ]
        )
        assert elapsed < 5


def _weight_zero_functionals():
    """e_i* (x) e_j* (x) e_k (x) e_l and the s, t bases, built from their defining formulas."""
    s = [ZERO, Q, ONE, ZERO]  # e2e1 + q e1e2
    t = [ZERO, -QINV, ONE, ZERO]  # e2e1 - q^-1 e1e2
    M = QMatrix([[s[1], t[1]], [s[2], t[2]]])
    Mi = inverse(M)  # rows: s*, t* on (e1e2, e2e1)
    s_dual = [ZERO, Mi[0, 0], Mi[0, 1], ZERO]
    t_dual = [ZERO, Mi[1, 0], Mi[1, 1], ZERO]
    return s, t, s_dual, t_dual


def test_criterion_2_weight_zero_products(criterion):
    with criterion(2, "ad, da, bc, cb expansions in s, t"):
        s, t, s_dual, t_dual = _weight_zero_functionals()
        D = schur_weyl_decompose(2, 2)
        ss = FunctionalElement.pure(2, s_dual, s, 2)
        tt = FunctionalElement.pure(2, t_dual, t, 2)
        qq = Q + QINV

        def e(i):
            v = [ZERO] * 4
            v[i] = ONE
            return v

        e12, e21 = e(1), e(2)
        # e_i* e_j* paired with e_k e_l: products of generators as raw functionals
        raw = {
            "ad": FunctionalElement.pure(2, e12, e12, 2),
            "da": FunctionalElement.pure(2, e21, e21, 2),
            "bc": FunctionalElement.pure(2, e21, e12, 2),
            "cb": FunctionalElement.pure(2, e12, e21, 2),
        }
        expected = {
            "ad": ss.scale(Q / qq) + tt.scale(QINV / qq),
            "da": ss.scale(QINV / qq) + tt.scale(Q / qq),
            "bc": (ss - tt).scale(ONE / qq),
            "cb": (ss - tt).scale(ONE / qq),
        }
        g = generators_m2()
        for name, phi in raw.items():
            assert project_pi(D, phi) == project_pi(D, expected[name]) == expected[name]
            product = g[name[0]] * g[name[1]]
            assert product == to_pw(D, expected[name])


def test_criterion_3_pi_is_half_one_plus_q(criterion):
    with criterion(3, "pi = (1+Q)/2 at k=2, n=2"):
        Qm = q_involution(2)
        P = pi_matrix(2, 2)
        assert P.shape == (16, 16)
        assert P == (QMatrix.identity(16) + Qm.T.kron(Qm)).scale(ONE / 2)
        s, t, s_dual, t_dual = _weight_zero_functionals()
        D = schur_weyl_decompose(2, 2)
        assert project_pi(D, FunctionalElement.pure(2, s_dual, t, 2)).is_zero()
        assert project_pi(D, FunctionalElement.pure(2, t_dual, s, 2)).is_zero()


def test_criterion_4_hopf_axioms(criterion):
    with criterion(4, "Hopf axiom suite"):
        start = time.perf_counter()
        rep = verify_hopf(SL2, 3, sample_count=20, seed=0)
        assert rep.ok, rep.summary()
        n = sum(weyl_dimension(l) ** 2 for l in labels_up_to(SL2, 3))
        assert rep.counts["associativity"] == n**3
        assert rep.counts["compatibility"] == n**2
        for name in ("coassociativity", "counit_left", "counit_right"):
            assert rep.counts[name] == n
        rep2 = verify_hopf(GL2, 1, sample_count=20, seed=0)
        assert rep2.ok, rep2.summary()
        assert rep2.counts["associativity"] == 5**3
        assert time.perf_counter() - start < 300


def test_criterion_5_preferred_presentation(criterion, monkeypatch):
    with criterion(5, "integer comultiplication and q=1 tables"):
        from qpeterweyl import exactmath

        def forbidden(*args, **kw):
            raise AssertionError("comultiplication constants read a QScalar")

        with monkeypatch.context() as m:
            for attr in ("__init__", "_make", "_reduce", "coerce", "__mul__", "__add__"):
                m.setattr(exactmath.QScalar, attr, forbidden)
            built = {dim: comultiplication_constants.__wrapped__(dim) for dim in range(1, 8)}
        for dim, consts in built.items():
            assert consts == comultiplication_constants(dim)
            assert all(type(c) is int and c in (0, 1) for v in consts.values() for *_, c in v)
        D = comultiply(generators_m2()["a"])
        assert set(specialize_q1({"a": D})["a"].values()) == {1}
        for alg, size in ((SL2, 3), (GL2, 2)):
            cl = alg.at_one()
            for lam in labels_up_to(alg, size):
                for mu in labels_up_to(alg, size):
                    quantum = specialize_q1(structure_constants(lam, mu))
                    classical = specialize_q1(structure_constants(IrrepLabel(cl, lam.hw), IrrepLabel(cl, mu.hw)))
                    assert quantum == classical, (lam, mu)


def _random_invertible(rng):
    while True:
        g = QMatrix(
            [[normalize({e: rng.randint(-2, 2) for e in (-1, 0, 1)}) for _ in range(2)] for _ in range(2)]
        )
        if rank(g) == 2:
            return g


def test_criterion_6_basis_independence(criterion):
    with criterion(6, "multiplicity-space basis independence"):
        lam = IrrepLabel.of(gl(3), 2, 1, 0)
        nu = IrrepLabel.of(gl(3), 3, 2, 1)
        embs, comp = isotypic_embeddings(lam, lam, nu)
        assert len(embs) == 2
        base = bracket_sums(threej_from_embeddings(lam, lam, embs, comp), nu)
        assert base and base == bracket_sums(threej(lam, lam), nu)
        changes = [QMatrix([[1, 1], [0, 1]])] + [_random_invertible(random.Random(seed)) for seed in range(5)]
        for g in changes:
            new = change_multiplicity_basis(embs, g)
            assert bracket_sums(threej_from_embeddings(lam, lam, new, comp), nu) == base


def test_criterion_7_schur_weyl(criterion):
    with criterion(7, "Schur-Weyl dimensions and Hecke checks"):
        start = time.perf_counter()
        for k, n in ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3)):
            D = schur_weyl_decompose(k, n)
            assert sum(dv * dw for _, dv, dw, _ in D.isotypic) == k**n == tensor_power(gl(k), n).dim
            checks = check_hecke(k, n)
            assert all(checks.values()), (k, n, checks)
        D = schur_weyl_decompose(2, 2)
        assert [(dv, dw) for _, dv, dw, _ in D.isotypic] == [(3, 1), (1, 1)]
        assert time.perf_counter() - start < 600


def test_criterion_8_duality(criterion):
    with criterion(8, "product dual to coproduct"):
        rng = random.Random(2024)
        labs = labels_up_to(GL2, 2)
        gens = ["E1", "F1", "K1", "Kinv1"]
        for _ in range(50):
            f = random_element(GL2, labs, rng)
            g = random_element(GL2, labs, rng)
            word = [rng.choice(gens) for _ in range(rng.randint(0, 3))]
            lhs = pairing(f * g, word)
            rhs = pairing_tensor(PWTensor.pure(f, g), word)
            assert isinstance(lhs, QScalar) and lhs == rhs
