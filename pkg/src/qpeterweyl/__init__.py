"""Exact Peter-Weyl computations for quantized function algebras over Q(q)."""

from .exactmath import ONE, Q, QINV, ZERO, PoleError, QMatrix, QScalar, SingularMatrixError, eval_at_one, normalize, qint
from .uqrep import SL2, AlgebraSpec, IrrepLabel, Rep, decompose, gl, irrep, tensor_power, tensor_rep, vector_rep
from .clebsch import ThreeJTable, change_multiplicity_basis, embeddings, threej
from .ofun import (
    PWElement,
    PWSymbol,
    PWTensor,
    comultiply,
    counit,
    generators_m2,
    multiply,
    pairing,
    specialize_q1,
    structure_constants,
    verify_hopf,
)
from .schurweyl import frt_relations, pi_matrix, project_pi, q_involution, rhat, schur_weyl_decompose

__version__ = "0.1.0"
