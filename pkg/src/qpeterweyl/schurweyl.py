"""Schur-Weyl realization of O_q(M_k) on V^{(x) n}.

A degree-n functional is a matrix Phi over multi-indices (J, I) and acts on
U_q by u -> sum Phi[J, I] <J| rho(u) |I>.  With rho = C (+rho_lam) C^-1 from
``decompose(V^{(x) n})`` it is the Peter-Weyl element whose f[lam, a, b]
coefficient is sum_p (C^T Phi C^-T)[(lam,p,a), (lam,p,b)]; projecting onto the
equivariant elements X[lam, a, b] is then just re-embedding that element.
"""

from __future__ import annotations

import itertools
import json
import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .exactmath import ONE, Q, QINV, ZERO, QMatrix, QScalar, rref
from .ofun import PWElement, PWSymbol, PWTensor, format_linear, multiply, symbol
from .uqrep import AlgebraSpec, IrrepLabel, decompose, gl, tensor_power, weyl_dimension

__all__ = [
    "RhatData",
    "FunctionalElement",
    "SWDecomp",
    "FRTReport",
    "r_matrix",
    "rhat",
    "flip",
    "hecke_generators",
    "q_involution",
    "schur_weyl_decompose",
    "project_pi",
    "pi_matrix",
    "to_pw",
    "from_pw",
    "multiply_sw",
    "comultiply_sw",
    "frt_relations",
    "classical_symmetrizer",
    "check_hecke",
]


# -- R-matrix and Hecke generators -----------------------------------------


def flip(k: int) -> QMatrix:
    n = k * k
    return QMatrix.from_sparse(n, n, {(j * k + i, i * k + j): ONE for i in range(k) for j in range(k)})


@lru_cache(maxsize=None)
def r_matrix(k: int) -> QMatrix:
    """R = q sum e_ii(x)e_ii + sum_{i!=j} e_ii(x)e_jj + (q - q^-1) sum_{i>j} e_ij(x)e_ji.

    Entry ((i,k),(j,l)) is the coefficient of e_ij (x) e_kl.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    n = k * k
    ent = {}
    for i in range(k):
        for j in range(k):
            ent[(i * k + j, i * k + j)] = Q if i == j else ONE
    for i in range(k):
        for j in range(i):
            ent[(i * k + j, j * k + i)] = Q - QINV
    return QMatrix.from_sparse(n, n, ent)


@dataclass(frozen=True)
class RhatData:
    k: int
    matrix: QMatrix
    sym_projector: QMatrix
    alt_projector: QMatrix


@lru_cache(maxsize=None)
def rhat(k: int) -> RhatData:
    R = flip(k) @ r_matrix(k)
    n = k * k
    eye = QMatrix.identity(n)
    qq = Q + QINV
    sym = (R + eye.scale(QINV)).scale(ONE / qq)
    alt = (eye.scale(Q) - R).scale(ONE / qq)
    return RhatData(k, R, sym, alt)


def _embed(M: QMatrix, left: int, right: int) -> QMatrix:
    out = M
    if left > 1:
        out = QMatrix.identity(left).kron(out)
    if right > 1:
        out = out.kron(QMatrix.identity(right))
    return out


@lru_cache(maxsize=None)
def hecke_generators(k: int, n: int) -> tuple[QMatrix, ...]:
    """T_i = I^{(i-1)} (x) Rhat (x) I^{(n-i-1)} on V^{(x) n}, i = 1..n-1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    R = rhat(k).matrix
    return tuple(_embed(R, k**i, k ** (n - i - 2)) for i in range(n - 1))


@lru_cache(maxsize=None)
def q_involution(k: int) -> QMatrix:
    """Q = sym - alt on V (x) V; squares to the identity and is the flip at q=1."""
    d = rhat(k)
    return d.sym_projector - d.alt_projector


def check_hecke(k: int, n: int) -> dict[str, bool]:
    """Quadratic, braid, far-commutation and commutant checks on V^{(x) n}."""
    T = hecke_generators(k, n)
    N = k**n
    eye = QMatrix.identity(N)
    out = {}
    out["quadratic"] = all(((t - eye.scale(Q)) @ (t + eye.scale(QINV))).is_zero() for t in T)
    out["braid"] = all(T[i] @ T[i + 1] @ T[i] == T[i + 1] @ T[i] @ T[i + 1] for i in range(len(T) - 1))
    out["far_commute"] = all(
        T[i] @ T[j] == T[j] @ T[i] for i in range(len(T)) for j in range(i + 2, len(T))
    )
    R = tensor_power(gl(k), n)
    out["commutant"] = all(t @ g == g @ t for t in T for _, g in R.generators())
    return out


# -- functionals -------------------------------------------------------------


def _multi_indices(k: int, n: int):
    return list(itertools.product(range(k), repeat=n))


def _flat(idx, k: int) -> int:
    out = 0
    for x in idx:
        out = out * k + x
    return out


class FunctionalElement:
    """Element of (V*)^{(x) n} (x) V^{(x) n}, keyed by (J, I) multi-indices."""

    __slots__ = ("k", "n", "terms")

    def __init__(self, k: int, n: int, terms: Mapping | None = None):
        self.k, self.n = k, n
        clean = {}
        for (J, I), v in sorted((terms or {}).items()):
            v = QScalar.coerce(v)
            if len(J) != n or len(I) != n:
                raise ValueError("multi-index length must equal the degree")
            if v:
                clean[(tuple(J), tuple(I))] = v
        self.terms = clean

    @classmethod
    def from_matrix(cls, k: int, n: int, M: QMatrix) -> "FunctionalElement":
        idx = _multi_indices(k, n)
        terms = {}
        for r, row in enumerate(M.nonzeros()):
            for c, v in row:
                terms[(idx[r], idx[c])] = v
        return cls(k, n, terms)

    @classmethod
    def pure(cls, k: int, dual_vec, vec, n: int) -> "FunctionalElement":
        """Functional dual_vec (x) vec from coordinate vectors of length k^n."""
        idx = _multi_indices(k, n)
        terms = {}
        for J, y in zip(idx, dual_vec):
            if y:
                for I, x in zip(idx, vec):
                    if x:
                        terms[(J, I)] = QScalar.coerce(y) * x
        return cls(k, n, terms)

    def to_matrix(self) -> QMatrix:
        N = self.k**self.n
        return QMatrix.from_sparse(
            N, N, {(_flat(J, self.k), _flat(I, self.k)): v for (J, I), v in self.terms.items()}
        )

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for key, v in other.terms.items():
            out[key] = out.get(key, ZERO) + v
        return FunctionalElement(self.k, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = QScalar.coerce(c)
        return FunctionalElement(self.k, self.n, {key: c * v for key, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def concat(self, other: "FunctionalElement") -> "FunctionalElement":
        """f (x) g as a degree n+m functional (no projection)."""
        if self.k != other.k:
            raise ValueError("rank mismatch")
        out = {}
        for (J1, I1), a in self.terms.items():
            for (J2, I2), b in other.terms.items():
                out[(J1 + J2, I1 + I2)] = a * b
        return FunctionalElement(self.k, self.n + other.n, out)

    def evaluate(self, word=()) -> QScalar:
        M = tensor_power(gl(self.k), self.n).word_matrix(word) if self.n else None
        acc = ZERO
        for (J, I), v in self.terms.items():
            x = M[_flat(J, self.k), _flat(I, self.k)] if M is not None else ONE
            if x:
                acc = acc + v * x
        return acc

    def is_zero(self):
        return not self.terms

    def _same(self, other):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError("degree mismatch")

    def __eq__(self, other):
        if not isinstance(other, FunctionalElement):
            return NotImplemented
        return (self.k, self.n, self.terms) == (other.k, other.n, other.terms)

    def __hash__(self):
        return hash((self.k, self.n, tuple(self.terms.items())))

    def __repr__(self):
        body = " + ".join(f"({v})*{J}*{I}" for (J, I), v in self.terms.items()) or "0"
        return f"FunctionalElement(k={self.k}, n={self.n}, {body})"

    def to_list(self) -> list[dict]:
        return [{"dual": list(J), "index": list(I), "coeff": str(v)} for (J, I), v in self.terms.items()]


# -- isotypic decomposition ----------------------------------------------------


@dataclass
class SWDecomp:
    k: int
    n: int
    # (lam, dimV, dimW, [column offsets of each copy in C])
    isotypic: list
    C: QMatrix
    Cinv: QMatrix
    columns: list  # (label, copy p, basis index m) per column of C
    _basis: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def algebra(self) -> AlgebraSpec:
        return gl(self.k)

    def dimension_table(self) -> list[dict]:
        return [{"lambda": list(l.hw), "dimV": dv, "dimW": dw} for l, dv, dw, _ in self.isotypic]

    def summary(self) -> str:
        parts = " + ".join(f"{dv}x{dw}" for _, dv, dw, _ in self.isotypic)
        return f"{parts} = {sum(dv * dw for _, dv, dw, _ in self.isotypic)}"

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "n": self.n, "isotypic": self.dimension_table()})

    def equivariant_element(self, lam: IrrepLabel, b: int, c: int) -> FunctionalElement:
        """X[lam, b, c*] = (1/dim W) sum_p (c* on copy p) (x) (b on copy p).

        As a functional it evaluates to the matrix coefficient f[lam, c, b].
        """
        key = (lam, b, c)
        with self._lock:
            hit = self._basis.get(key)
        if hit is not None:
            return hit
        X = _X_matrix(self, lam, c, b)
        out = FunctionalElement.from_matrix(self.k, self.n, X)
        with self._lock:
            self._basis[key] = out
        return out

    @property
    def equivariant_basis(self) -> dict:
        return {
            (l, b, c): self.equivariant_element(l, b, c)
            for l, dv, _, _ in self.isotypic
            for b in range(dv)
            for c in range(dv)
        }


def _X_matrix(D: SWDecomp, lam: IrrepLabel, a: int, b: int) -> QMatrix:
    """Phi-matrix of the equivariant element evaluating to f[lam, a, b]."""
    entry = next(e for e in D.isotypic if e[0] == lam)
    _, _, dimW, offsets = entry
    N = D.C.rows
    acc: dict = {}
    w = ONE / dimW
    for off in offsets:
        ra = D.Cinv.row(off + a)
        cb = D.C.col(off + b)
        for J, x in enumerate(ra):
            if x:
                for I, y in enumerate(cb):
                    if y:
                        acc[(J, I)] = acc.get((J, I), ZERO) + w * x * y
    return QMatrix.from_sparse(N, N, acc)


_SW_CACHE: dict = {}
_SW_LOCK = threading.Lock()


def schur_weyl_decompose(k: int, n: int) -> SWDecomp:
    if n < 1:
        raise ValueError("n must be at least 1")
    with _SW_LOCK:
        hit = _SW_CACHE.get((k, n))
    if hit is not None:
        return hit
    D = decompose(tensor_power(gl(k), n))
    offs = D.block_offsets()
    iso = []
    for ci, c in enumerate(D.constituents):
        dv = weyl_dimension(c.label)
        iso.append((c.label, dv, c.multiplicity, [offs[(c.label, p)] for p in range(c.multiplicity)]))
    cols = [(D.constituents[ci].label, p, m) for ci, p, m in D.columns]
    out = SWDecomp(k, n, iso, D.C, D.Cinv, cols)
    with _SW_LOCK:
        return _SW_CACHE.setdefault((k, n), out)


# -- projection and Peter-Weyl identification ------------------------------------


def _check_degree(D: SWDecomp, phi: FunctionalElement):
    if (phi.k, phi.n) != (D.k, D.n):
        raise ValueError(f"functional of degree {phi.n} (k={phi.k}) does not match decomposition ({D.k}, {D.n})")


def to_pw(D: SWDecomp, phi: FunctionalElement) -> PWElement:
    """The function on U_q defined by phi, in the Peter-Weyl basis."""
    _check_degree(D, phi)
    Phi = phi.to_matrix()
    Psi = D.C.T @ Phi @ D.Cinv.T
    terms = {}
    for lam, dv, _, offsets in D.isotypic:
        for a in range(dv):
            for b in range(dv):
                s = ZERO
                for off in offsets:
                    s = s + Psi[off + a, off + b]
                if s:
                    terms[PWSymbol(lam, a, b)] = s
    return PWElement(terms)


def from_pw(D: SWDecomp, f: PWElement) -> FunctionalElement:
    """Equivariant functional representing f (all labels must have size n)."""
    N = D.C.rows
    acc = QMatrix.zeros(N, N)
    sizes = {l: off for l, _, _, off in D.isotypic}
    for s, c in f.terms.items():
        if s.lam.algebra != gl(D.k) or s.lam not in sizes:
            raise ValueError(f"{s} is not a degree-{D.n} matrix coefficient of gl{D.k}")
        acc = acc + _X_matrix(D, s.lam, s.i, s.j).scale(c)
    return FunctionalElement.from_matrix(D.k, D.n, acc)


def project_pi(D: SWDecomp, phi: FunctionalElement) -> FunctionalElement:
    """The unique equivariant functional defining the same function as phi."""
    return from_pw(D, to_pw(D, phi))


@lru_cache(maxsize=None)
def pi_matrix(k: int, n: int) -> QMatrix:
    """pi as a k^{2n} x k^{2n} matrix on row-major vec(Phi), J-major."""
    D = schur_weyl_decompose(k, n)
    N = k**n
    cols = []
    for J in range(N):
        for I in range(N):
            E = QMatrix.from_sparse(N, N, {(J, I): ONE})
            P = project_pi(D, FunctionalElement.from_matrix(k, n, E)).to_matrix()
            cols.append([P[r, c] for r in range(N) for c in range(N)])
    return QMatrix.from_columns(cols, N * N)


def multiply_sw(f: FunctionalElement, g: FunctionalElement) -> FunctionalElement:
    """fg = pi(f (x) g) at degree n + m."""
    if f.k != g.k:
        raise ValueError("rank mismatch")
    prod_ = f.concat(g)
    if prod_.n == 0:
        return prod_
    return project_pi(schur_weyl_decompose(f.k, prod_.n), prod_)


def comultiply_sw(f: FunctionalElement) -> PWTensor:
    """(pi (x) pi) sum_Z (Y* (x) Z) (x) (Z* (x) X), returned in the Peter-Weyl basis."""
    D = schur_weyl_decompose(f.k, f.n)
    idx = _multi_indices(f.k, f.n)
    cache: dict = {}

    def leg(J, I):
        key = (J, I)
        if key not in cache:
            cache[key] = to_pw(D, FunctionalElement(f.k, f.n, {(J, I): ONE}))
        return cache[key]

    out = PWTensor(arity=2)
    for (J, I), c in f.terms.items():
        for Z in idx:
            out = out + PWTensor.pure(leg(J, Z), leg(Z, I)).scale(c)
    return out


# -- FRT relations ----------------------------------------------------------------


def _gen_names(k: int) -> list[str]:
    if k == 2:
        return list("abcd")
    return [f"x{i + 1}{j + 1}" for i in range(k) for j in range(k)]


@dataclass
class FRTReport:
    k: int
    residuals: dict  # ((i,k),(j,l)) -> PWElement, entries of R X1 X2 - X2 X1 R
    formal: list  # reduced relations: list of {word: coeff}
    names: list

    @property
    def ok(self) -> bool:
        return all(v.is_zero() for v in self.residuals.values())

    @property
    def witnesses(self) -> list:
        return [(key, v) for key, v in self.residuals.items() if not v.is_zero()]

    def _word(self, w) -> str:
        return f"{self.names[w[0]]}*{self.names[w[1]]}"

    def lines(self, at_one: bool = False) -> list[str]:
        out = []
        for rel in self.formal:
            terms = list(rel.items())
            if at_one:
                terms = [(w, QScalar(c.eval_at_one())) for w, c in terms]
            out.append(format_linear([(c, self._word(w)) for w, c in terms]) + " = 0")
        return out

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "relations": self.lines(),
            "residual_entries": len(self.residuals),
            "nonzero_residuals": len(self.witnesses),
        }


def _rel_vector(R: QMatrix, k: int, i, kk, j, l) -> dict:
    """Entry ((i,kk),(j,l)) of R X1 X2 - X2 X1 R as a combination of words (p, r) = X_p X_r."""
    vec: dict = {}
    row = R.row(i * k + kk)
    for mn, r in enumerate(row):
        if r:
            m, n = divmod(mn, k)
            w = (m * k + j, n * k + l)
            vec[w] = vec.get(w, ZERO) + r
    for mn in range(k * k):
        r = R[mn, j * k + l]
        if r:
            m, n = divmod(mn, k)
            w = (kk * k + n, i * k + m)
            vec[w] = vec.get(w, ZERO) - r
    return {w: c for w, c in vec.items() if c}


def frt_relations(k: int) -> FRTReport:
    """Relations R X1 X2 = X2 X1 R, checked in the Peter-Weyl algebra and reduced for display."""
    R = r_matrix(k)
    alg = gl(k)
    X = [symbol(alg, (1,), i, j) for i in range(k) for j in range(k)]
    words = [(p, r) for p in range(k * k) for r in range(k * k)]
    prods = {w: multiply(X[w[0]], X[w[1]]) for w in words}
    residuals, vectors = {}, []
    for i, kk, j, l in itertools.product(range(k), repeat=4):
        vec = _rel_vector(R, k, i, kk, j, l)
        acc = PWElement()
        for w, c in vec.items():
            acc = acc + prods[w].scale(c)
        residuals[((i, kk), (j, l))] = acc
        if vec:
            vectors.append(vec)
    # non-normal-ordered words first so they become pivots
    order = [w for w in words if w[0] > w[1]] + [w for w in words if w[0] <= w[1]]
    pos = {w: c for c, w in enumerate(order)}
    M = QMatrix.from_sparse(
        len(vectors), len(order), {(r, pos[w]): c for r, v in enumerate(vectors) for w, c in v.items()}
    )
    Rr, pivots = rref(M)
    formal = []
    for r, pc in enumerate(pivots):
        rel = {order[c]: Rr[r, c] for c in range(len(order)) if Rr[r, c]}
        first = min(rel)
        scale = ONE / rel[first]
        pw = order[pc]
        keys = [first] + ([pw] if pw != first else []) + sorted(w for w in rel if w not in (first, pw))
        formal.append({w: rel[w] * scale for w in keys})
    return FRTReport(k, residuals, formal, _gen_names(k))


# -- classical oracle ----------------------------------------------------------------


def _perm_matrix(k: int, n: int, sigma) -> QMatrix:
    idx = _multi_indices(k, n)
    ent = {}
    for c, I in enumerate(idx):
        J = tuple(I[sigma[t]] for t in range(n))
        ent[(_flat(J, k), c)] = ONE
    return QMatrix.from_sparse(k**n, k**n, ent)


@lru_cache(maxsize=None)
def classical_symmetrizer(n: int, k: int = 2) -> QMatrix:
    """(1/n!) sum_sigma of sigma acting simultaneously on both tensor factors.

    Acts on row-major vec(Phi) like ``pi_matrix``; the q = 1 oracle for pi.
    """
    if n > 6:
        raise ValueError("n > 6 is out of range for the factorial average")
    N = k**n
    acc = QMatrix.zeros(N * N, N * N)
    for sigma in itertools.permutations(range(n)):
        P = _perm_matrix(k, n, sigma)
        acc = acc + P.kron(P)
    return acc.scale(ONE / math.factorial(n))
