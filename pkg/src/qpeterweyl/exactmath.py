"""Exact arithmetic in the rational function field Q(q) and dense linear algebra over it.

Elements of Q(q) are :class:`QScalar` values kept in a canonical reduced form
(coprime numerator and monic denominator, both in Q[q]), so that equality of
field elements is equality of representations.  Polynomial arithmetic is
delegated to FLINT's ``fmpq_poly``.

Matrices are dense and immutable (:class:`QMatrix`).  Row reduction clears
denominators row by row and runs fraction-free (Bareiss) forward elimination
in Q[q]; only the final back substitution touches rational functions.
"""

from __future__ import annotations

import ast
import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from flint import fmpq, fmpq_poly

__all__ = [
    "QScalar",
    "QMatrix",
    "PoleError",
    "SingularMatrixError",
    "ZERO",
    "ONE",
    "Q",
    "QINV",
    "normalize",
    "parse_qscalar",
    "qint",
    "qpow",
    "eval_at_one",
    "kernel",
    "rank",
    "rref",
    "solve",
    "inverse",
]

_P0 = fmpq_poly([])
_P1 = fmpq_poly([1])


class PoleError(ValueError):
    """Raised when a rational function is evaluated at a pole."""


class SingularMatrixError(ZeroDivisionError):
    pass


def _div_error():
    return ZeroDivisionError("division by zero in ℚ(q)")


class QScalar:
    """An element of Q(q) in canonical form ``num/den``.

    Instances are immutable.  Use :func:`normalize`, :func:`parse_qscalar` or
    arithmetic on the module constants to build values; the constructor
    accepts ints, fractions, strings and other ``QScalar`` values.
    """

    __slots__ = ("num", "den")

    def __init__(self, value=0):
        if isinstance(value, QScalar):
            num, den = value.num, value.den
        elif isinstance(value, str):
            s = parse_qscalar(value)
            num, den = s.num, s.den
        else:
            s = normalize(value)
            num, den = s.num, s.den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QScalar is immutable")

    @classmethod
    def _make(cls, num: fmpq_poly, den: fmpq_poly) -> "QScalar":
        # caller guarantees canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def _reduce(cls, num: fmpq_poly, den: fmpq_poly) -> "QScalar":
        if den.is_zero():
            raise _div_error()
        if num.is_zero():
            return ZERO
        if den.is_one():
            return cls._make(num, den)
        g = num.gcd(den)
        if not g.is_one():
            num = num // g
            den = den // g
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        return cls._make(num, den)

    # -- coercion -----------------------------------------------------
    @staticmethod
    def coerce(x) -> "QScalar":
        if isinstance(x, QScalar):
            return x
        if isinstance(x, int):
            if x == 0:
                return ZERO
            if x == 1:
                return ONE
            return QScalar._make(fmpq_poly([x]), _P1)
        if isinstance(x, (Rational, fmpq)):
            return normalize(x)
        if isinstance(x, str):
            return parse_qscalar(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as an element of Q(q)")

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.degree() <= 0

    def is_laurent(self) -> bool:
        """True when the denominator is a power of q."""
        d = self.den
        return d.degree() == 0 or (d[d.degree()] == 1 and all(d[i] == 0 for i in range(d.degree())))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        try:
            b = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero():
            return b
        if b.num.is_zero():
            return self
        if self.den == b.den:
            if self.den.is_one():
                n = self.num + b.num
                return QScalar._make(n, _P1) if not n.is_zero() else ZERO
            return QScalar._reduce(self.num + b.num, self.den)
        return QScalar._reduce(self.num * b.den + b.num * self.den, self.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        if self.num.is_zero():
            return self
        return QScalar._make(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            b = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        try:
            b = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other):
        try:
            b = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a = self
        if a.num.is_zero() or b.num.is_zero():
            return ZERO
        if a.den.is_one() and b.den.is_one():
            return QScalar._make(a.num * b.num, _P1)
        # cross cancellation keeps the product reduced; monic // monic stays monic
        g1 = a.num.gcd(b.den)
        g2 = b.num.gcd(a.den)
        an, bd = (a.num, b.den) if g1.is_one() else (a.num // g1, b.den // g1)
        bn, ad = (b.num, a.den) if g2.is_one() else (b.num // g2, a.den // g2)
        return QScalar._make(an * bn, ad * bd)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self.num.is_zero():
            raise _div_error()
        lc = self.num.leading_coefficient()
        if lc == 1:
            return QScalar._make(self.den, self.num)
        return QScalar._make(self.den / lc, self.num / lc)

    def __truediv__(self, other):
        try:
            b = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other):
        try:
            b = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return b * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return ONE
        return QScalar._make(self.num**e, self.den**e)

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, QScalar):
            return self.num == other.num and self.den == other.den
        try:
            b = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == b.num and self.den == b.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    # -- evaluation ---------------------------------------------------
    def eval_at_one(self) -> Fraction:
        return eval_at_one(self)

    def subs(self, value) -> Fraction:
        """Evaluate at a rational point."""
        x = fmpq(Fraction(value).numerator, Fraction(value).denominator)
        d = self.den(x)
        if d == 0:
            raise PoleError(f"{self} is not regular at q={value}")
        v = self.num(x) / d
        return Fraction(int(v.p), int(v.q))

    def laurent_terms(self) -> dict[int, Fraction]:
        """Exponent -> coefficient map, for values whose denominator is q^k."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        shift = self.den.degree()
        out = {}
        for e, c in enumerate(self.num.coeffs()):
            if c != 0:
                out[e - shift] = Fraction(int(c.p), int(c.q))
        return out

    # -- formatting ---------------------------------------------------
    def __str__(self):
        if self.den.is_one():
            return _poly_str(self.num)
        n = _poly_str(self.num)
        d = _poly_str(self.den)
        if _n_terms(self.den) > 1:
            d = f"({d})"
        return f"({n})/{d}"

    def __repr__(self):
        return f"QScalar('{self}')"

    def to_json(self) -> str:
        return str(self)

    @classmethod
    def from_json(cls, s: str) -> "QScalar":
        return parse_qscalar(s)


def _n_terms(p: fmpq_poly) -> int:
    return sum(1 for c in p.coeffs() if c != 0)


def _coef_str(c: fmpq) -> str:
    return str(c)


def _poly_str(p: fmpq_poly) -> str:
    """Descending powers, explicit signs, ``c*q^e`` terms."""
    if p.is_zero():
        return "0"
    parts = []
    coeffs = p.coeffs()
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = _coef_str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{_coef_str(a)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)


def laurent_str(x: QScalar) -> str:
    """Spaced Laurent form used in relation text, e.g. ``q - q^-1``.

    Falls back to the canonical string when the denominator is not a power of q.
    """
    if not x.is_laurent():
        return str(x)
    terms = sorted(x.laurent_terms().items(), reverse=True)
    if not terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = str(a)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- construction ------------------------------------------------------


def _laurent_parts(x) -> tuple[fmpq_poly, int]:
    """Return (poly, shift) with x = poly * q**shift."""
    if isinstance(x, fmpq_poly):
        return x, 0
    if isinstance(x, int):
        return fmpq_poly([x]), 0
    if isinstance(x, (Fraction, Rational)):
        f = Fraction(x)
        return fmpq_poly([fmpq(f.numerator, f.denominator)]), 0
    if isinstance(x, fmpq):
        return fmpq_poly([x]), 0
    if isinstance(x, dict):
        if not x:
            return fmpq_poly([]), 0
        lo = min(x)
        coeffs = [0] * (max(x) - lo + 1)
        for e, c in x.items():
            f = Fraction(c)
            coeffs[e - lo] = fmpq(f.numerator, f.denominator)
        return fmpq_poly(coeffs), lo
    if isinstance(x, (list, tuple)):
        return fmpq_poly([fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in x]), 0
    raise TypeError(f"cannot read {type(x).__name__} as a Laurent polynomial in q")


def normalize(numerator, denominator=1) -> QScalar:
    """Canonical ``QScalar`` for ``numerator/denominator``.

    Each argument may be an int, a fraction, an ``fmpq_poly``, a coefficient
    list (ascending powers) or a ``{exponent: coeff}`` dict; negative
    exponents are allowed and cleared into the polynomial parts.
    """
    if isinstance(numerator, QScalar) or isinstance(denominator, QScalar):
        return QScalar.coerce(numerator) / QScalar.coerce(denominator)
    pn, sn = _laurent_parts(numerator)
    pd, sd = _laurent_parts(denominator)
    if pd.is_zero():
        raise _div_error()
    s = sn - sd
    if s > 0:
        pn = pn.left_shift(s)
    elif s < 0:
        pd = pd.left_shift(-s)
    return QScalar._reduce(pn, pd)


ZERO = QScalar._make(_P0, _P1)
ONE = QScalar._make(_P1, _P1)
Q = QScalar._make(fmpq_poly([0, 1]), _P1)
QINV = QScalar._make(_P1, fmpq_poly([0, 1]))


def qpow(e: int) -> QScalar:
    if e >= 0:
        return QScalar._make(_P1.left_shift(e), _P1) if e else ONE
    return QScalar._make(_P1, _P1.left_shift(-e))


def qint(n: int) -> QScalar:
    """Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1)."""
    if n == 0:
        return ZERO
    if n < 0:
        return -qint(-n)
    return normalize({n - 1 - 2 * j: 1 for j in range(n)})


_BINOPS = {ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow}


def parse_qscalar(text: str) -> QScalar:
    """Parse expressions such as ``"(q^2+1)/q"``, ``"q - q^-1"`` or ``"3/2*q"``."""
    src = text.strip().replace("^", "**").replace("−", "-")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r} as an element of Q(q)") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return QScalar.coerce(node.value)
        if isinstance(node, ast.Name) and node.id == "q":
            return Q
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            if isinstance(node.op, ast.Pow):
                e = _int_exponent(node.right)
                return ev(node.left) ** e
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            return a / b
        raise ValueError(f"unsupported syntax in {text!r}")

    def _int_exponent(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -_int_exponent(node.operand)
        raise ValueError(f"exponent must be an integer literal in {text!r}")

    return ev(tree)


def eval_at_one(a: QScalar) -> Fraction:
    """Exact value at q = 1; raises :class:`PoleError` at a pole."""
    a = QScalar.coerce(a)
    d = a.den(1)
    if d == 0:
        raise PoleError(f"{a} is not regular at q=1")
    v = a.num(1) / d
    return Fraction(int(v.p), int(v.q))


# -- matrices -----------------------------------------------------------


class QMatrix:
    """Dense immutable matrix over Q(q), stored row-major."""

    __slots__ = ("rows", "cols", "_data", "_nz")

    def __init__(self, data: Iterable[Iterable], rows: int | None = None, cols: int | None = None):
        rows_data = [tuple(QScalar.coerce(x) for x in r) for r in data]
        if rows is None:
            rows = len(rows_data)
        if cols is None:
            cols = len(rows_data[0]) if rows_data else 0
        if len(rows_data) != rows or any(len(r) != cols for r in rows_data):
            raise ValueError("ragged or mis-sized matrix data")
        self.rows = rows
        self.cols = cols
        self._data = tuple(rows_data)
        self._nz = None

    @classmethod
    def _raw(cls, data: Sequence[tuple], rows: int, cols: int) -> "QMatrix":
        m = object.__new__(cls)
        m.rows, m.cols, m._data, m._nz = rows, cols, tuple(data), None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        row = (ZERO,) * cols
        return cls._raw([row] * rows, rows, cols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "QMatrix":
        n = len(values)
        data = []
        for i, v in enumerate(values):
            r = [ZERO] * n
            r[i] = QScalar.coerce(v)
            data.append(tuple(r))
        return cls._raw(data, n, n)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, entries: dict) -> "QMatrix":
        data = [[ZERO] * cols for _ in range(rows)]
        for (i, j), v in entries.items():
            v = QScalar.coerce(v)
            if v:
                data[i][j] = v
        return cls._raw([tuple(r) for r in data], rows, cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "QMatrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0
        ncols = len(columns)
        data = [tuple(QScalar.coerce(columns[j][i]) for j in range(ncols)) for i in range(rows)]
        return cls._raw(data, rows, ncols)

    # -- access -------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> list:
        return [r[j] for r in self._data]

    def tolist(self) -> list[list[QScalar]]:
        return [list(r) for r in self._data]

    def nonzeros(self) -> list[list[tuple[int, QScalar]]]:
        """Per-row lists of (column, value) for nonzero entries (cached)."""
        if self._nz is None:
            self._nz = [[(j, v) for j, v in enumerate(r) if not v.num.is_zero()] for r in self._data]
        return self._nz

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        return QMatrix._raw([tuple(self._data[i][j] for j in cols) for i in rows], len(rows), len(cols))

    # -- algebra ------------------------------------------------------
    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix._raw(
            [tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)], self.rows, self.cols
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix._raw(
            [tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)], self.rows, self.cols
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix._raw([tuple(-a for a in r) for r in self._data], self.rows, self.cols)

    def scale(self, c) -> "QMatrix":
        c = QScalar.coerce(c)
        return QMatrix._raw([tuple(c * a for a in r) for r in self._data], self.rows, self.cols)

    def __mul__(self, c):
        if isinstance(c, QMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        onz = other.nonzeros()
        out = []
        for nzrow in self.nonzeros():
            acc = [ZERO] * other.cols
            for k, a in nzrow:
                for j, b in onz[k]:
                    acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return QMatrix._raw(out, self.rows, other.cols)

    def apply(self, vec: Sequence[QScalar]) -> list[QScalar]:
        """Matrix-vector product with a plain list of scalars."""
        out = []
        for nzrow in self.nonzeros():
            acc = ZERO
            for j, a in nzrow:
                v = vec[j]
                if not v.num.is_zero():
                    acc = acc + a * v
            out.append(acc)
        return out

    @property
    def T(self) -> "QMatrix":
        return QMatrix._raw(list(zip(*self._data)) if self.rows else [], self.cols, self.rows)

    def kron(self, other: "QMatrix") -> "QMatrix":
        r, c = self.rows * other.rows, self.cols * other.cols
        data = [[ZERO] * c for _ in range(r)]
        onz = other.nonzeros()
        for i, nzrow in enumerate(self.nonzeros()):
            for j, a in nzrow:
                for k, brow in enumerate(onz):
                    row = data[i * other.rows + k]
                    base = j * other.cols
                    for l, b in brow:
                        row[base + l] = a * b
        return QMatrix._raw([tuple(x) for x in data], r, c)

    def is_zero(self) -> bool:
        return all(not v for r in self._data for v in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == QMatrix.identity(self.rows)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def eval_at_one(self) -> list[list[Fraction]]:
        return [[eval_at_one(v) for v in r] for r in self._data]

    def map(self, fn) -> "QMatrix":
        return QMatrix._raw([tuple(QScalar.coerce(fn(v)) for v in r) for r in self._data], self.rows, self.cols)

    def __repr__(self):
        body = "; ".join(", ".join(str(v) for v in r) for r in self._data)
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"

    # -- serialization -----------------------------------------------
    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [str(v) for r in self._data for v in r]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "QMatrix":
        r, c = d["rows"], d["cols"]
        flat = [parse_qscalar(s) for s in d["entries"]]
        if len(flat) != r * c:
            raise ValueError("entry count does not match rows*cols")
        return cls._raw([tuple(flat[i * c : (i + 1) * c]) for i in range(r)], r, c)

    @classmethod
    def from_json(cls, s: str) -> "QMatrix":
        return cls.from_dict(json.loads(s))


# -- row reduction -----------------------------------------------------------


def _poly_rows(rows: Sequence[Sequence[QScalar]]) -> list[list[fmpq_poly]]:
    out = []
    for r in rows:
        l = _P1
        for v in r:
            if not v.den.is_one():
                g = l.gcd(v.den)
                l = l * (v.den // g)
        if l.is_one():
            out.append([v.num for v in r])
        else:
            out.append([v.num * (l // v.den) for v in r])
    return out


def _bareiss(A: list[list[fmpq_poly]], ncols: int, stop: int | None = None):
    """Fraction-free forward elimination in place; returns pivot columns.

    Pivot search is restricted to columns < ``stop`` (default: all).
    """
    m = len(A)
    stop = ncols if stop is None else stop
    pivots = []
    prev = _P1
    r = 0
    for c in range(stop):
        if r >= m:
            break
        p = next((i for i in range(r, m) if not A[i][c].is_zero()), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
        piv = A[r]
        pv = piv[c]
        for i in range(r + 1, m):
            row = A[i]
            a = row[c]
            if a.is_zero():
                if not prev.is_one():
                    for j in range(c + 1, ncols):
                        if not row[j].is_zero():
                            row[j] = (pv * row[j]) // prev
                else:
                    for j in range(c + 1, ncols):
                        if not row[j].is_zero():
                            row[j] = pv * row[j]
                continue
            for j in range(c + 1, ncols):
                x = pv * row[j] - a * piv[j]
                row[j] = x if prev.is_one() else x // prev
            row[c] = _P0
        prev = pv
        pivots.append(c)
        r += 1
    return pivots


def _rref_rows(rows: Sequence[Sequence[QScalar]], ncols: int, stop: int | None = None):
    """Reduced row echelon form; returns (nonzero rows as QScalar lists, pivot columns)."""
    A = _poly_rows(rows)
    pivots = _bareiss(A, ncols, stop)
    R = []
    for r, c in enumerate(pivots):
        pv = A[r][c]
        R.append([QScalar._reduce(x, pv) if not x.is_zero() else ZERO for x in A[r]])
    # back substitution
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        prow = R[r]
        nz = [(j, v) for j, v in enumerate(prow) if j > c and v]
        for s in range(r):
            f = R[s][c]
            if not f:
                continue
            srow = R[s]
            srow[c] = ZERO
            for j, v in nz:
                srow[j] = srow[j] - f * v
    return R, pivots


def rref(M: QMatrix) -> tuple[QMatrix, list[int]]:
    R, pivots = _rref_rows(M._data, M.cols)
    return QMatrix._raw([tuple(r) for r in R], len(R), M.cols), pivots


def rank(M: QMatrix) -> int:
    A = _poly_rows(M._data)
    return len(_bareiss(A, M.cols))


def _kernel_vectors(rows: Sequence[Sequence[QScalar]], ncols: int) -> list[list[QScalar]]:
    R, pivots = _rref_rows(rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for r, c in enumerate(pivots):
            x = R[r][f]
            if x:
                v[c] = -x
        out.append(v)
    return out


def kernel(M: QMatrix) -> list[QMatrix]:
    """Basis of the right nullspace from the reduced echelon form.

    One vector per free column (ascending), with a 1 in that column.
    """
    return [QMatrix._raw([(x,) for x in v], M.cols, 1) for v in _kernel_vectors(M._data, M.cols)]


def solve(M: QMatrix, b: QMatrix) -> QMatrix | None:
    """A solution X of M X = b, or ``None`` when the system is inconsistent.

    Free variables are set to zero.
    """
    if b.rows != M.rows:
        raise ValueError("right-hand side has the wrong number of rows")
    aug = [tuple(r) + tuple(s) for r, s in zip(M._data, b._data)]
    R, pivots = _rref_rows(aug, M.cols + b.cols)
    if pivots and pivots[-1] >= M.cols:
        return None
    X = [[ZERO] * b.cols for _ in range(M.cols)]
    for r, c in enumerate(pivots):
        X[c] = list(R[r][M.cols :])
    return QMatrix._raw([tuple(x) for x in X], M.cols, b.cols)


def inverse(M: QMatrix) -> QMatrix:
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    eye = QMatrix.identity(n)
    aug = [tuple(r) + tuple(s) for r, s in zip(M._data, eye._data)]
    R, pivots = _rref_rows(aug, 2 * n, stop=n)
    if len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return QMatrix._raw([tuple(r[n:]) for r in R], n, n)
