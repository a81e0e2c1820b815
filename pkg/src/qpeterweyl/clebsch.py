"""Quantum Clebsch-Gordan data for V_lambda (x) V_mu.

The 3j symbol of (X1, X2, X3) for the k-th embedding into V_nu is the
coordinate of X1 (x) X2 along phi_k(X3): an entry of C^-1.  The dual symbol of
(Y1*, Y2*, Y3*) is the coefficient of Y3* in phi_k^*(Y1* (x) Y2*), which is
the entry of C in row (Y1, Y2) and column phi_k(Y3).  No orthonormalization is
applied, so 3j and dual 3j symbols differ in general.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exactmath import ZERO, QMatrix, QScalar, SingularMatrixError, rank
from .uqrep import (
    DecompositionError,
    IrrepLabel,
    _f_closure,
    blockwise_inverse,
    decompose,
    highest_weight_vectors,
    irrep,
    irrep_model,
    tensor_rep,
)

__all__ = [
    "Embedding",
    "ThreeJTable",
    "embeddings",
    "isotypic_embeddings",
    "threej",
    "threej_from_embeddings",
    "change_multiplicity_basis",
    "bracket_sums",
    "is_intertwiner",
]


@dataclass(frozen=True)
class Embedding:
    lam: IrrepLabel
    mu: IrrepLabel
    nu: IrrepLabel
    k: int
    matrix: QMatrix  # dim(lam)*dim(mu) x dim(nu)


@lru_cache(maxsize=None)
def _product(lam: IrrepLabel, mu: IrrepLabel):
    if lam.algebra != mu.algebra:
        raise ValueError(f"algebra mismatch: {lam.algebra} vs {mu.algebra}")
    return tensor_rep(irrep(lam), irrep(mu))


@lru_cache(maxsize=None)
def _product_decomposition(lam: IrrepLabel, mu: IrrepLabel):
    return decompose(_product(lam, mu))


def embeddings(lam: IrrepLabel, mu: IrrepLabel) -> list[Embedding]:
    """All embeddings V_nu -> V_lam (x) V_mu, in decomposition order."""
    D = _product_decomposition(lam, mu)
    return [
        Embedding(lam, mu, c.label, k, m) for c in D.constituents for k, m in enumerate(c.embeddings)
    ]


def isotypic_embeddings(lam: IrrepLabel, mu: IrrepLabel, nu: IrrepLabel) -> tuple[list[Embedding], QMatrix]:
    """Embeddings into one isotypic component, plus a basis of its complement.

    The complement is spanned by F-closures of the other highest-weight
    vectors and never touches the irreducible registry for other labels, which
    keeps large products tractable.
    """
    R = _product(lam, mu)
    model = irrep_model(nu)
    embs, comp = [], []
    for w, v in highest_weight_vectors(R):
        if w == nu.hw:
            cols = model.transport(R, v)
            embs.append(Embedding(lam, mu, nu, len(embs), QMatrix.from_columns(cols, R.dim)))
        else:
            basis, *_ = _f_closure(R, v, w, normalize=False)
            comp.extend(basis)
    complement = QMatrix.from_columns(comp, R.dim) if comp else QMatrix.zeros(R.dim, 0)
    return embs, complement


def is_intertwiner(emb: Embedding) -> bool:
    R = _product(emb.lam, emb.mu)
    Vn = irrep(emb.nu)
    return all(g @ emb.matrix == emb.matrix @ h for (_, g), (_, h) in zip(R.generators(), Vn.generators()))


@dataclass(frozen=True)
class ThreeJTable:
    lam: IrrepLabel
    mu: IrrepLabel
    # (nu, k, b1, b2, b3) -> value, zero entries omitted
    entries: dict
    dual_entries: dict

    def symbol(self, nu, k, b1, b2, b3) -> QScalar:
        return self.entries.get((nu, k, b1, b2, b3), ZERO)

    def dual_symbol(self, nu, k, b1, b2, b3) -> QScalar:
        return self.dual_entries.get((nu, k, b1, b2, b3), ZERO)

    def to_dict(self) -> dict:
        def rows(d):
            return [
                {"nu": list(key[0].hw), "k": key[1], "b1": key[2], "b2": key[3], "b3": key[4], "value": str(v)}
                for key, v in sorted(d.items(), key=lambda kv: (kv[0][0].hw, *kv[0][1:]))
            ]

        return {
            "algebra": self.lam.algebra.to_dict(),
            "lambda": list(self.lam.hw),
            "mu": list(self.mu.hw),
            "entries": rows(self.entries),
            "dual_entries": rows(self.dual_entries),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "ThreeJTable":
        from .uqrep import AlgebraSpec

        alg = AlgebraSpec(**d["algebra"])

        def read(rows):
            return {
                (IrrepLabel(alg, tuple(r["nu"])), r["k"], r["b1"], r["b2"], r["b3"]): QScalar(r["value"])
                for r in rows
            }

        return cls(
            IrrepLabel(alg, tuple(d["lambda"])),
            IrrepLabel(alg, tuple(d["mu"])),
            read(d["entries"]),
            read(d["dual_entries"]),
        )

    @classmethod
    def from_json(cls, s: str) -> "ThreeJTable":
        return cls.from_dict(json.loads(s))


def threej_from_embeddings(
    lam: IrrepLabel, mu: IrrepLabel, embs: Sequence[Embedding], complement: QMatrix | None = None
) -> ThreeJTable:
    """3j and dual 3j symbols for an arbitrary family of embeddings.

    ``embs`` together with ``complement`` (columns spanning the remaining
    isotypic components) must form a basis of V_lam (x) V_mu.
    """
    R = _product(lam, mu)
    dmu = irrep(mu).dim
    cols, weights, meta = [], [], []
    for e in embs:
        ws = irrep(e.nu).weights
        for m in range(e.matrix.cols):
            cols.append(e.matrix.col(m))
            weights.append(ws[m])
            meta.append((e.nu, e.k, m))
    if complement is not None:
        for j in range(complement.cols):
            col = complement.col(j)
            idx = next(i for i, x in enumerate(col) if x)
            cols.append(col)
            weights.append(R.weights[idx])
            meta.append(None)
    C = QMatrix.from_columns(cols, R.dim)
    try:
        Cinv = blockwise_inverse(C, R.weights, weights)
    except (SingularMatrixError, DecompositionError) as exc:
        raise ValueError("embeddings and complement do not form a basis") from exc
    entries, dual = {}, {}
    for col, key in enumerate(meta):
        if key is None:
            continue
        nu, k, b3 = key
        for row in range(R.dim):
            b1, b2 = divmod(row, dmu)
            x = Cinv[col, row]
            if x:
                entries[(nu, k, b1, b2, b3)] = x
            y = C[row, col]
            if y:
                dual[(nu, k, b1, b2, b3)] = y
    return ThreeJTable(lam, mu, entries, dual)


@lru_cache(maxsize=None)
def threej(lam: IrrepLabel, mu: IrrepLabel) -> ThreeJTable:
    D = _product_decomposition(lam, mu)
    # the decomposition already carries C^-1; reuse it instead of re-inverting
    dmu = irrep(mu).dim
    entries, dual = {}, {}
    for col, (ci, k, b3) in enumerate(D.columns):
        nu = D.constituents[ci].label
        for row in range(D.C.rows):
            b1, b2 = divmod(row, dmu)
            x = D.Cinv[col, row]
            if x:
                entries[(nu, k, b1, b2, b3)] = x
            y = D.C[row, col]
            if y:
                dual[(nu, k, b1, b2, b3)] = y
    return ThreeJTable(lam, mu, entries, dual)


def change_multiplicity_basis(embs: Sequence[Embedding], g: QMatrix) -> list[Embedding]:
    """phi'_j = sum_k g[k][j] phi_k for embeddings into a single V_nu."""
    c = len(embs)
    if g.shape != (c, c):
        raise ValueError(f"basis change must be {c}x{c}")
    if rank(g) < c:
        raise SingularMatrixError("multiplicity-space basis change is singular")
    if len({(e.lam, e.mu, e.nu) for e in embs}) > 1:
        raise ValueError("embeddings must share (lambda, mu, nu)")
    out = []
    for j in range(c):
        M = None
        for k in range(c):
            if g[k, j]:
                term = embs[k].matrix.scale(g[k, j])
                M = term if M is None else M + term
        out.append(Embedding(embs[0].lam, embs[0].mu, embs[0].nu, j, M))
    return out


def bracket_sums(table: ThreeJTable, nu: IrrepLabel | None = None) -> dict:
    """Sum over k of dual 3j times 3j, keyed by (nu, Y1, Y2, Y3, X1, X2, X3).

    These are exactly the multiplication structure constants; zero sums are
    omitted.
    """
    dual_by: dict = {}
    for (n, k, y1, y2, y3), v in table.dual_entries.items():
        if nu is None or n == nu:
            dual_by.setdefault((n, k), []).append((y1, y2, y3, v))
    sym_by: dict = {}
    for (n, k, x1, x2, x3), v in table.entries.items():
        if nu is None or n == nu:
            sym_by.setdefault((n, k), []).append((x1, x2, x3, v))
    out: dict = {}
    for (n, k), duals in dual_by.items():
        for x1, x2, x3, s in sym_by.get((n, k), []):
            for y1, y2, y3, d in duals:
                key = (n, y1, y2, y3, x1, x2, x3)
                out[key] = out.get(key, ZERO) + d * s
    return {k: v for k, v in out.items() if v}
