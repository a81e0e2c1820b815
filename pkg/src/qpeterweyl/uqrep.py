"""Finite-dimensional type-1 representations of U_q(sl_2) and U_q(gl_k).

Generators act by matrices over Q(q).  Tensor products use the coproduct

    E -> E (x) K^-1 + 1 (x) E,    F -> F (x) 1 + K (x) F,    K -> K (x) K.

For gl_k the Cartan part beyond the K_i is tracked through per-vector
epsilon-weights.  Irreducible modules come from a process-wide registry: the
model of V_lambda is the first copy found in the smallest tensor power of the
vector representation, spanned by F-words applied to a highest-weight vector.

Setting ``classical=True`` on the algebra gives the q = 1 theory (K acting
trivially, classical coproduct), used as an independent oracle.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .exactmath import ONE, ZERO, QMatrix, QScalar, SingularMatrixError, _kernel_vectors, inverse, qint, qpow, solve

__all__ = [
    "AlgebraSpec",
    "IrrepLabel",
    "Rep",
    "Decomposition",
    "Constituent",
    "DecompositionError",
    "RelationReport",
    "SL2",
    "gl",
    "vector_rep",
    "trivial_rep",
    "tensor_rep",
    "tensor_power",
    "highest_weight_vectors",
    "decompose",
    "irrep",
    "irrep_model",
    "check_relations",
    "weyl_dimension",
    "labels_up_to",
]


class DecompositionError(RuntimeError):
    """Internal consistency failure while decomposing (indicates a bug)."""


@dataclass(frozen=True, order=True)
class AlgebraSpec:
    family: str  # "sl2" or "gl"
    k: int = 2
    classical: bool = False

    def __post_init__(self):
        if self.family not in ("sl2", "gl"):
            raise ValueError(f"unknown algebra family {self.family!r}")
        if self.family == "sl2" and self.k != 2:
            raise ValueError("sl2 has k = 2")
        if self.k < 2:
            raise ValueError("gl_k needs k >= 2")

    @property
    def rank(self) -> int:
        """Number of simple roots."""
        return self.k - 1

    @property
    def weight_len(self) -> int:
        return 1 if self.family == "sl2" else self.k

    def pair(self, weight: Sequence[int], i: int) -> int:
        """<weight, alpha_i> for the 1-based simple root index i."""
        if self.family == "sl2":
            return weight[0]
        return weight[i - 1] - weight[i]

    def root(self, i: int) -> tuple[int, ...]:
        if self.family == "sl2":
            return (2,)
        r = [0] * self.k
        r[i - 1], r[i] = 1, -1
        return tuple(r)

    def is_dominant(self, weight: Sequence[int]) -> bool:
        if self.family == "sl2":
            return weight[0] >= 0
        return all(weight[i] >= weight[i + 1] for i in range(self.k - 1))

    def at_one(self) -> "AlgebraSpec":
        return AlgebraSpec(self.family, self.k, True)

    def to_dict(self) -> dict:
        return {"family": self.family, "k": self.k, "classical": self.classical}

    def __str__(self):
        base = "sl2" if self.family == "sl2" else f"gl{self.k}"
        return base + ("@q=1" if self.classical else "")


SL2 = AlgebraSpec("sl2")


def gl(k: int, classical: bool = False) -> AlgebraSpec:
    return AlgebraSpec("gl", k, classical)


@dataclass(frozen=True, order=True)
class IrrepLabel:
    """Highest weight of an irreducible module.

    For sl2 ``hw`` is ``(n,)``; for gl_k it is a partition padded with zeros
    to length k.
    """

    algebra: AlgebraSpec
    hw: tuple[int, ...]

    def __post_init__(self):
        hw = tuple(int(x) for x in self.hw)
        if self.algebra.family == "sl2":
            if len(hw) != 1 or hw[0] < 0:
                raise ValueError(f"bad sl2 highest weight {self.hw}")
        else:
            k = self.algebra.k
            if len(hw) > k:
                if any(hw[k:]):
                    raise ValueError(f"partition {self.hw} has more than {k} parts")
                hw = hw[:k]
            hw = hw + (0,) * (k - len(hw))
            if any(x < 0 for x in hw) or any(hw[i] < hw[i + 1] for i in range(k - 1)):
                raise ValueError(f"{self.hw} is not a partition")
        object.__setattr__(self, "hw", hw)

    @classmethod
    def of(cls, algebra: AlgebraSpec, *hw) -> "IrrepLabel":
        if len(hw) == 1 and isinstance(hw[0], (tuple, list)):
            hw = tuple(hw[0])
        return cls(algebra, tuple(hw))

    @property
    def size(self) -> int:
        """Number of boxes (gl) or the highest weight n (sl2)."""
        return self.hw[0] if self.algebra.family == "sl2" else sum(self.hw)

    @property
    def dim(self) -> int:
        return weyl_dimension(self)

    def __str__(self):
        if self.algebra.family == "sl2":
            return str(self.hw[0])
        return "(" + ",".join(str(x) for x in self.hw) + ")"


def weyl_dimension(label: IrrepLabel) -> int:
    """Classical dimension; integer arithmetic only."""
    if label.algebra.family == "sl2":
        return label.hw[0] + 1
    lam = label.hw
    k = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(k) for j in range(i + 1, k))
    den = prod(j - i for i in range(k) for j in range(i + 1, k))
    return num // den


def labels_up_to(algebra: AlgebraSpec, max_size: int) -> list[IrrepLabel]:
    """All labels with size <= max_size, sorted."""
    if algebra.family == "sl2":
        return [IrrepLabel(algebra, (n,)) for n in range(max_size + 1)]
    out = []

    def parts(n, k, cap):
        if k == 0:
            if n == 0:
                yield ()
            return
        for first in range(min(n, cap), -1, -1):
            for rest in parts(n - first, k - 1, first):
                yield (first,) + rest

    for n in range(max_size + 1):
        for p in parts(n, algebra.k, n):
            out.append(IrrepLabel(algebra, p))
    return sorted(out)


@dataclass(frozen=True)
class Rep:
    algebra: AlgebraSpec
    dim: int
    E: tuple[QMatrix, ...]
    F: tuple[QMatrix, ...]
    K: tuple[QMatrix, ...]
    Kinv: tuple[QMatrix, ...]
    weights: tuple[tuple[int, ...], ...]

    def gen(self, name: str, i: int = 1) -> QMatrix:
        """Matrix of generator ``name`` in {E, F, K, Kinv} with 1-based index i."""
        try:
            return getattr(self, name)[i - 1]
        except AttributeError:
            raise ValueError(f"unknown generator {name!r}") from None

    def generators(self):
        for name in ("E", "F", "K", "Kinv"):
            for i in range(1, self.algebra.rank + 1):
                yield f"{name}{i}", self.gen(name, i)

    def weight_spaces(self) -> dict[tuple[int, ...], list[int]]:
        out: dict[tuple[int, ...], list[int]] = {}
        for idx, w in enumerate(self.weights):
            out.setdefault(w, []).append(idx)
        return out

    def act(self, word, vec):
        """Apply a word of generators (rightmost acts first) to a vector."""
        for name, i in reversed(list(_parse_word(word))):
            vec = self.gen(name, i).apply(vec)
        return vec

    def word_matrix(self, word) -> QMatrix:
        M = QMatrix.identity(self.dim)
        for name, i in _parse_word(word):
            M = M @ self.gen(name, i)
        return M

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra.to_dict(),
            "dim": self.dim,
            "weights": [list(w) for w in self.weights],
            "E": [m.to_dict() for m in self.E],
            "F": [m.to_dict() for m in self.F],
            "K": [m.to_dict() for m in self.K],
            "Kinv": [m.to_dict() for m in self.Kinv],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Rep":
        a = AlgebraSpec(**d["algebra"])
        mats = {n: tuple(QMatrix.from_dict(m) for m in d[n]) for n in ("E", "F", "K", "Kinv")}
        return cls(a, d["dim"], weights=tuple(tuple(w) for w in d["weights"]), **mats)


def _parse_word(word):
    """Accept ("E", 1) tuples or strings like "E1", "Kinv2"."""
    for g in word:
        if isinstance(g, str):
            name = g.rstrip("0123456789")
            idx = g[len(name) :]
            yield name, int(idx) if idx else 1
        else:
            name, i = g
            yield name, int(i)


def _diag_k(algebra: AlgebraSpec, weights, i: int, sign: int = 1) -> QMatrix:
    if algebra.classical:
        return QMatrix.identity(len(weights))
    return QMatrix.diag([qpow(sign * algebra.pair(w, i)) for w in weights])


def _from_weights(algebra, weights, E, F) -> Rep:
    r = algebra.rank
    K = tuple(_diag_k(algebra, weights, i) for i in range(1, r + 1))
    Kinv = tuple(_diag_k(algebra, weights, i, -1) for i in range(1, r + 1))
    return Rep(algebra, len(weights), tuple(E), tuple(F), K, Kinv, tuple(tuple(w) for w in weights))


def vector_rep(algebra: AlgebraSpec) -> Rep:
    k = algebra.k
    if algebra.family == "sl2":
        weights = [(1,), (-1,)]
    else:
        weights = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    E = [QMatrix.from_sparse(k, k, {(i - 1, i): ONE}) for i in range(1, k)]
    F = [QMatrix.from_sparse(k, k, {(i, i - 1): ONE}) for i in range(1, k)]
    return _from_weights(algebra, weights, E, F)


def trivial_rep(algebra: AlgebraSpec) -> Rep:
    z = QMatrix.zeros(1, 1)
    return _from_weights(algebra, [(0,) * algebra.weight_len], [z] * algebra.rank, [z] * algebra.rank)


def tensor_rep(A: Rep, B: Rep) -> Rep:
    if A.algebra != B.algebra:
        raise ValueError(f"algebra mismatch: {A.algebra} vs {B.algebra}")
    IA, IB = QMatrix.identity(A.dim), QMatrix.identity(B.dim)
    E, F, K, Kinv = [], [], [], []
    for i in range(A.algebra.rank):
        E.append(A.E[i].kron(B.Kinv[i]) + IA.kron(B.E[i]))
        F.append(A.F[i].kron(IB) + A.K[i].kron(B.F[i]))
        K.append(A.K[i].kron(B.K[i]))
        Kinv.append(A.Kinv[i].kron(B.Kinv[i]))
    weights = tuple(tuple(x + y for x, y in zip(wa, wb)) for wa in A.weights for wb in B.weights)
    return Rep(A.algebra, A.dim * B.dim, tuple(E), tuple(F), tuple(K), tuple(Kinv), weights)


_POWER_CACHE: dict[tuple[AlgebraSpec, int], Rep] = {}
_POWER_LOCK = threading.Lock()


def tensor_power(algebra: AlgebraSpec, n: int) -> Rep:
    """V^{(x) n} for the vector representation V (cached)."""
    with _POWER_LOCK:
        if (algebra, n) not in _POWER_CACHE:
            _POWER_CACHE.setdefault((algebra, 0), trivial_rep(algebra))
            V = vector_rep(algebra)
            m = max(j for (a, j) in _POWER_CACHE if a == algebra and j <= n)
            R = _POWER_CACHE[(algebra, m)]
            for j in range(m + 1, n + 1):
                R = V if j == 1 else tensor_rep(R, V)
                _POWER_CACHE[(algebra, j)] = R
        return _POWER_CACHE[(algebra, n)]


# -- highest weight vectors ----------------------------------------------------


def _normalize_leading(v: list[QScalar]) -> list[QScalar]:
    lead = next(x for x in v if x)
    if lead.is_one():
        return v
    inv = lead.inverse()
    return [x * inv if x else x for x in v]


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _hw_at(R: Rep, w, spaces) -> list[list[QScalar]]:
    S = spaces[w]
    rows = []
    for i in range(1, R.algebra.rank + 1):
        target = spaces.get(_add(w, R.algebra.root(i)))
        if not target:
            continue
        Ei = R.E[i - 1]
        for t in target:
            r = Ei.row(t)
            rows.append([r[s] for s in S])
    if rows:
        kv = _kernel_vectors(rows, len(S))
    else:
        kv = [[ONE if j == c else ZERO for j in range(len(S))] for c in range(len(S))]
    out = []
    for small in kv:
        v = [ZERO] * R.dim
        for s, x in zip(S, small):
            v[s] = x
        out.append(_normalize_leading(v))
    return out


def highest_weight_vectors(R: Rep, weight=None) -> list[tuple[tuple[int, ...], list[QScalar]]]:
    """Basis of the joint kernel of the E_i, weight by weight.

    Weights come in decreasing lexicographic order; only dominant weights can
    carry highest-weight vectors of a finite-dimensional module.  Each vector
    has first nonzero coordinate 1.
    """
    spaces = R.weight_spaces()
    if weight is not None:
        weight = tuple(weight)
        return [(weight, v) for v in _hw_at(R, weight, spaces)] if weight in spaces else []
    out = []
    for w in sorted(spaces, reverse=True):
        if not R.algebra.is_dominant(w):
            continue
        out.extend((w, v) for v in _hw_at(R, w, spaces))
    return out


# -- irreducible models -------------------------------------------------------


@dataclass(frozen=True)
class IrrepModel:
    """Registry entry: the module plus the recipe transporting its basis.

    Basis vector m equals ``scale[m] * F_{step[m]} (raw parent vector)``,
    i.e. ``raw[m] = F_{step[m]} raw[parent[m]]`` with ``raw[0]`` the highest
    weight vector and ``basis[m] = scale[m] * raw[m]``.
    """

    label: IrrepLabel
    rep: Rep
    parent: tuple[int, ...]
    step: tuple[int, ...]
    scale: tuple[QScalar, ...]

    def transport(self, R: Rep, v: list[QScalar]) -> list[list[QScalar]]:
        """Images of the basis under the module map sending hw vector to v."""
        raw = [v]
        for m in range(1, len(self.parent)):
            raw.append(R.F[self.step[m] - 1].apply(raw[self.parent[m]]))
        return [[s * x if x else x for x in r] if not s.is_one() else r for s, r in zip(self.scale, raw)]


class _Echelon:
    """Incremental independence test inside one weight space."""

    def __init__(self):
        self.rows: list[tuple[int, list[QScalar]]] = []  # (pivot, row scaled so pivot == 1)

    def reduce(self, v: list[QScalar]) -> list[QScalar]:
        v = list(v)
        for p, r in self.rows:
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, r)]
        return v

    def add(self, v: list[QScalar]) -> bool:
        red = self.reduce(v)
        p = next((i for i, x in enumerate(red) if x), None)
        if p is None:
            return False
        inv = red[p].inverse()
        self.rows.append((p, [x * inv if x else x for x in red]))
        return True


def _f_closure(R: Rep, v: list[QScalar], w0, normalize: bool = True):
    """Span the submodule generated by a highest-weight vector with F-words.

    Breadth-first over (basis vector, F_i) in order; a candidate is kept when
    independent of the vectors already found in its weight space.
    """
    alg = R.algebra
    basis, weights, parent, step, scale = [v], [tuple(w0)], [-1], [0], [ONE]
    ech = {tuple(w0): _Echelon()}
    ech[tuple(w0)].add(v)
    m = 0
    while m < len(basis):
        for i in range(1, alg.rank + 1):
            cand = R.F[i - 1].apply(basis[m])
            if not any(cand):
                continue
            w = tuple(a - b for a, b in zip(weights[m], alg.root(i)))
            e = ech.setdefault(w, _Echelon())
            if not e.add(cand):
                continue
            s = ONE
            if normalize:
                lead = next(x for x in cand if x)
                if not lead.is_one():
                    s = lead.inverse()
                    cand = [x * s if x else x for x in cand]
            basis.append(cand)
            weights.append(w)
            parent.append(m)
            step.append(i)
            scale.append(scale[m] * s)
        m += 1
    return basis, weights, parent, step, scale


def _model_from_basis(algebra, basis, weights, R: Rep) -> Rep:
    """Matrices of E_i, F_i in the given basis of a submodule of R."""
    by_weight: dict[tuple, list[int]] = {}
    for idx, w in enumerate(weights):
        by_weight.setdefault(w, []).append(idx)
    spaces = R.weight_spaces()
    n = len(basis)
    E, F = [], []
    for i in range(1, algebra.rank + 1):
        for gens, sign, out in ((R.E, 1, E), (R.F, -1, F)):
            G = gens[i - 1]
            entries = {}
            images: dict[tuple, list[tuple[int, list[QScalar]]]] = {}
            for m, b in enumerate(basis):
                y = G.apply(b)
                if not any(y):
                    continue
                w = tuple(a + sign * r for a, r in zip(weights[m], algebra.root(i)))
                images.setdefault(w, []).append((m, y))
            for w, items in images.items():
                cols = by_weight.get(w)
                if not cols:
                    raise DecompositionError("generator leaves the spanned submodule")
                rows = spaces[w]
                B = QMatrix([[basis[c][r] for c in cols] for r in rows])
                Y = QMatrix([[y[r] for _, y in items] for r in rows])
                X = solve(B, Y)
                if X is None:
                    raise DecompositionError("generator leaves the spanned submodule")
                for col, (m, _) in enumerate(items):
                    for a, c in enumerate(cols):
                        x = X[a, col]
                        if x:
                            entries[(c, m)] = x
            out.append(QMatrix.from_sparse(n, n, entries))
    return _from_weights(algebra, weights, E, F)


def _sl2_model(label: IrrepLabel) -> IrrepModel:
    n = label.hw[0]
    alg = label.algebra
    qi = (lambda m: QScalar.coerce(m)) if alg.classical else qint
    E = QMatrix.from_sparse(n + 1, n + 1, {(m - 1, m): qi(m) for m in range(1, n + 1)})
    F = QMatrix.from_sparse(n + 1, n + 1, {(m + 1, m): qi(n - m) for m in range(n)})
    rep = _from_weights(alg, [(n - 2 * m,) for m in range(n + 1)], [E], [F])
    scale = [ONE]
    for m in range(1, n + 1):
        scale.append(scale[-1] / qi(n - m + 1))
    return IrrepModel(label, rep, tuple([-1] + list(range(n))), tuple([0] + [1] * n), tuple(scale))


def _gl_model(label: IrrepLabel) -> IrrepModel:
    R = tensor_power(label.algebra, label.size)
    hws = highest_weight_vectors(R, label.hw)
    if not hws:
        raise DecompositionError(f"no highest weight vector of weight {label.hw} in V^{label.size}")
    _, v = hws[0]
    basis, weights, parent, step, scale = _f_closure(R, v, label.hw)
    if len(basis) != weyl_dimension(label):
        raise DecompositionError(f"F-closure of {label} has dimension {len(basis)}")
    rep = _model_from_basis(label.algebra, basis, weights, R)
    return IrrepModel(label, rep, tuple(parent), tuple(step), tuple(scale))


_REGISTRY: dict[IrrepLabel, IrrepModel] = {}
_REGISTRY_LOCK = threading.RLock()


def irrep_model(label: IrrepLabel) -> IrrepModel:
    with _REGISTRY_LOCK:
        model = _REGISTRY.get(label)
        if model is None:
            model = _sl2_model(label) if label.algebra.family == "sl2" else _gl_model(label)
            _REGISTRY[label] = model
        return model


def irrep(label: IrrepLabel) -> Rep:
    """The registry model of V_label (memoized)."""
    return irrep_model(label).rep


# -- decomposition -------------------------------------------------------


@dataclass(frozen=True)
class Constituent:
    label: IrrepLabel
    multiplicity: int
    embeddings: tuple[QMatrix, ...]  # each dim(source) x dim(label)


@dataclass(frozen=True)
class Decomposition:
    source: Rep
    constituents: tuple[Constituent, ...]
    C: QMatrix
    Cinv: QMatrix
    # per column of C: (constituent index, copy k, basis index within the irrep)
    columns: tuple[tuple[int, int, int], ...] = field(repr=False)

    def block_offsets(self) -> dict[tuple[IrrepLabel, int], int]:
        out, off = {}, 0
        for c in self.constituents:
            for k in range(c.multiplicity):
                out[(c.label, k)] = off
                off += c.label.dim
        return out

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "constituents": [
                {"label": list(c.label.hw), "multiplicity": c.multiplicity, "embeddings": [e.to_dict() for e in c.embeddings]}
                for c in self.constituents
            ],
            "C": self.C.to_dict(),
            "Cinv": self.Cinv.to_dict(),
        }


def _label_for(algebra, w) -> IrrepLabel:
    return IrrepLabel(algebra, tuple(w))


def blockwise_inverse(C: QMatrix, row_weights, col_weights) -> QMatrix:
    """Invert a weight-preserving change of basis one weight block at a time."""
    n = C.rows
    rows_by: dict[tuple, list[int]] = {}
    cols_by: dict[tuple, list[int]] = {}
    for i, w in enumerate(row_weights):
        rows_by.setdefault(tuple(w), []).append(i)
    for j, w in enumerate(col_weights):
        cols_by.setdefault(tuple(w), []).append(j)
    entries = {}
    for w, rs in rows_by.items():
        cs = cols_by.get(w, [])
        if len(cs) != len(rs):
            raise DecompositionError(f"weight {w}: {len(rs)} coordinates but {len(cs)} basis vectors")
        Binv = inverse(C.submatrix(rs, cs))
        for a, c in enumerate(cs):
            for b, r in enumerate(rs):
                x = Binv[a, b]
                if x:
                    entries[(c, r)] = x
    return QMatrix.from_sparse(n, n, entries)


def decompose(R: Rep) -> Decomposition:
    """Complete decomposition of R into registry irreducibles.

    Columns of C run over constituents in decreasing highest weight, copies in
    order, and the registry basis of each copy.
    """
    alg = R.algebra
    hws = highest_weight_vectors(R)
    groups: dict[tuple, list[list[QScalar]]] = {}
    for w, v in hws:
        groups.setdefault(w, []).append(v)
    constituents = []
    columns_data: list[list[QScalar]] = []
    col_meta = []
    col_weights = []
    for ci, w in enumerate(sorted(groups, reverse=True)):
        label = _label_for(alg, w)
        model = irrep_model(label)
        embs = []
        for k, v in enumerate(groups[w]):
            cols = model.transport(R, v)
            embs.append(QMatrix.from_columns(cols, R.dim))
            for m, col in enumerate(cols):
                columns_data.append(col)
                col_meta.append((ci, k, m))
                col_weights.append(model.rep.weights[m])
        constituents.append(Constituent(label, len(embs), tuple(embs)))
    total = sum(c.multiplicity * c.label.dim for c in constituents)
    if total != R.dim:
        raise DecompositionError(f"constituent dimensions sum to {total}, expected {R.dim}")
    C = QMatrix.from_columns(columns_data, R.dim)
    try:
        Cinv = blockwise_inverse(C, R.weights, col_weights)
    except SingularMatrixError as exc:
        raise DecompositionError("highest-weight closures do not span the module") from exc
    return Decomposition(R, tuple(constituents), C, Cinv, tuple(col_meta))


# -- relation checks -------------------------------------------------------


@dataclass
class RelationReport:
    failures: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        if self.ok:
            return f"all {self.checked} relation checks passed"
        return "\n".join(self.failures)


def check_relations(R: Rep) -> RelationReport:
    """Evaluate the defining relations of U_q as exact matrix identities."""
    rep = RelationReport()
    alg = R.algebra
    n = R.dim
    I = QMatrix.identity(n)
    qq = qpow(2)

    def check(ok, msg):
        rep.checked += 1
        if not ok:
            rep.failures.append(msg)

    for i in range(1, alg.rank + 1):
        E, F, K, Ki = R.E[i - 1], R.F[i - 1], R.K[i - 1], R.Kinv[i - 1]
        check(K @ Ki == I, f"K{i} Kinv{i} != 1")
        expected_k = _diag_k(alg, R.weights, i)
        check(K == expected_k, f"K{i} is not q^<wt, alpha_{i}> on weight vectors")
        if alg.classical:
            check(E @ F - F @ E == QMatrix.diag([alg.pair(w, i) for w in R.weights]), f"[E{i}, F{i}] != H{i}")
        else:
            check(K @ E @ Ki == E.scale(qq), f"K{i} E{i} K{i}^-1 != q^2 E{i}")
            check(K @ F @ Ki == F.scale(qq.inverse()), f"K{i} F{i} K{i}^-1 != q^-2 F{i}")
            check(
                E @ F - F @ E == (K - Ki).scale((qpow(1) - qpow(-1)).inverse()),
                f"E{i}F{i} - F{i}E{i} != (K{i} - K{i}^-1)/(q - q^-1)",
            )
        root = alg.root(i)
        ok_e = ok_f = True
        for r, row in enumerate(E.nonzeros()):
            for c, _ in row:
                if R.weights[r] != _add(R.weights[c], root):
                    ok_e = False
        for r, row in enumerate(F.nonzeros()):
            for c, _ in row:
                if _add(R.weights[r], root) != R.weights[c]:
                    ok_f = False
        check(ok_e, f"E{i} does not raise weights by alpha_{i}")
        check(ok_f, f"F{i} does not lower weights by alpha_{i}")
        for j in range(1, alg.rank + 1):
            if j != i:
                check(E @ R.F[j - 1] == R.F[j - 1] @ E, f"[E{i}, F{j}] != 0")
    return rep
