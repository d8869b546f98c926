"""Exact scalar arithmetic and dense linear algebra over Q and F_p.

Scalars are plain Python objects: ``int`` in ``[0, p)`` for a prime field and
``fractions.Fraction`` for the rationals.  A :class:`FieldSpec` carries the
operations, so every routine in the package takes the field explicitly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

RATIONALS = "Rationals"
PRIME = "PrimeField"

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: the rationals or a word-size prime field."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == PRIME:
            if self.p is None or not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise ValueError(f"invalid prime modulus {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> FieldSpec:
        return cls(PRIME, int(p))

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``"qq"`` or ``"fp:<p>"``."""
        text = text.strip().lower()
        if text in ("qq", "q", "rationals"):
            return cls.rationals()
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
            return cls.prime(p)
        raise ValueError(f"bad field spec {text!r}")

    def __str__(self):
        return "qq" if self.kind == RATIONALS else f"fp:{self.p}"

    @property
    def is_prime(self) -> bool:
        return self.kind == PRIME

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    # -- scalar operations -------------------------------------------------

    def __call__(self, x) -> int | Fraction:
        """Coerce an int, Fraction or ``"a/b"`` string into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == RATIONALS:
            return Fraction(x)
        p = self.p
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def neg(self, a):
        return -a % self.p if self.p else -a

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        """Exact string form used in JSON reports."""
        if self.p:
            return str(int(a))
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def signed(self, a) -> int | Fraction:
        """Symmetric representative (prime fields) for readable output."""
        if self.p:
            return a - self.p if a > self.p // 2 else a
        return a

    # -- dense numpy helpers -------------------------------------------------

    @property
    def dtype(self):
        return np.int64 if self.p else object

    def array(self, data) -> np.ndarray:
        """Coerce nested data into a reduced numpy array of field elements."""
        raw = np.array(data, dtype=object)
        if raw.size:
            raw = np.vectorize(self, otypes=[object])(raw)
        return raw.astype(self.dtype) if self.p else raw

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.p if self.p else arr

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Exact product; int64 is safe while the inner dimension keeps
        ``k * (p-1)**2 < 2**63``."""
        if not self.p:
            return _rational_matmul(a, b)
        k = a.shape[-1]
        if k * (self.p - 1) ** 2 < 2**63:
            return (a @ b) % self.p
        return (a.astype(object).dot(b.astype(object)) % self.p).astype(np.int64)


def _common_denominator(arr: np.ndarray) -> int:
    den = 1
    for x in arr.ravel().tolist():
        d = x.denominator if isinstance(x, Fraction) else 1
        if d != 1:
            den = den * d // gcd(den, d)
    return den


def _rational_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # Fraction arithmetic normalizes on every operation; multiply as ints
    da, db = _common_denominator(a), _common_denominator(b)
    ia = np.array([int(x * da) for x in a.ravel().tolist()], dtype=object).reshape(a.shape)
    ib = np.array([int(x * db) for x in b.ravel().tolist()], dtype=object).reshape(b.shape)
    prod = ia.dot(ib)
    den = da * db
    out = np.array([Fraction(int(x), den) for x in np.ravel(prod).tolist()], dtype=object)
    return out.reshape(np.shape(prod))


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """Immutable dense matrix over a :class:`FieldSpec` (row-major)."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length does not match shape")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> ExactMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(field, len(rows), ncols, tuple(field(x) for r in rows for x in r))

    @classmethod
    def from_array(cls, field: FieldSpec, arr: np.ndarray) -> ExactMatrix:
        arr = np.asarray(arr)
        r, c = arr.shape
        return cls(field, r, c, tuple(field(x) for x in arr.ravel().tolist()))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> ExactMatrix:
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> ExactMatrix:
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        arr = np.array(self.entries, dtype=self.field.dtype if self.field.p else object)
        return arr.reshape(self.rows, self.cols)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.field, self.cols, self.rows,
                           tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows or self.field != other.field:
            raise ValueError("incompatible matrices")
        return ExactMatrix.from_array(self.field, self.field.matmul(self.to_array(), other.to_array()))

    def select_columns(self, cols: Iterable[int]) -> ExactMatrix:
        cols = list(cols)
        return ExactMatrix.from_rows(self.field, [[r[c] for c in cols] for r in self.to_rows()], len(cols))

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.field}, {self.to_rows()})"


# -- elimination -----------------------------------------------------------


def rref_array(field: FieldSpec, arr: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of a numpy array; leftmost pivots, no
    magnitude pivoting.  Returns ``(R, pivots)``."""
    A = np.array(arr, dtype=field.dtype, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-d array")
    nrows, ncols = A.shape
    p = field.p
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        piv = A[r, c]
        if p:
            A[r] = A[r] * pow(int(piv), -1, p) % p
            col = A[:, c].copy()
            col[r] = 0
            rows = np.nonzero(col)[0]
            if rows.size:
                A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        else:
            A[r] = A[r] / Fraction(piv)
            for i in range(nrows):
                if i != r and A[i, c] != 0:
                    A[i] = A[i] - A[i, c] * A[r]
        pivots.append(c)
        r += 1
    return A, pivots


def rref(M: ExactMatrix) -> tuple[ExactMatrix, list[int], int]:
    """Unique reduced row-echelon form, pivot columns (ascending), rank."""
    if M.rows == 0 or M.cols == 0:
        return M, [], 0
    R, piv = rref_array(M.field, M.to_array())
    return ExactMatrix.from_array(M.field, R), piv, len(piv)


def rank_array(field: FieldSpec, arr: np.ndarray) -> int:
    arr = np.asarray(arr)
    if arr.size == 0:
        return 0
    return len(rref_array(field, arr)[1])


def rank_of(M: ExactMatrix) -> int:
    return rref(M)[2]


def solve_particular_array(field: FieldSpec, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Solve ``A x = b``; free variables are set to zero.  ``None`` if the
    system is inconsistent."""
    A = np.asarray(A)
    m, n = A.shape
    aug = np.concatenate([np.array(A, dtype=field.dtype),
                          np.array(b, dtype=field.dtype).reshape(m, 1)], axis=1)
    R, piv = rref_array(field, aug)
    if piv and piv[-1] == n:
        return None
    x = np.array([field.zero] * n, dtype=field.dtype)
    for i, c in enumerate(piv):
        x[c] = R[i, n]
    return x


def solve_particular(A: ExactMatrix, b: Sequence) -> list | None:
    field = A.field
    b = [field(x) for x in b]
    if len(b) != A.rows:
        raise ValueError("right-hand side has wrong length")
    x = solve_particular_array(field, A.to_array(), np.array(b, dtype=field.dtype))
    return None if x is None else [field(v) for v in x.tolist()]


def inverse_array(field: FieldSpec, A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    eye = np.array([[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
                   dtype=field.dtype)
    R, piv = rref_array(field, np.concatenate([np.array(A, dtype=field.dtype), eye], axis=1))
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def det_array(field: FieldSpec, A: np.ndarray):
    """Scalar determinant by elimination."""
    A = np.array(A, dtype=field.dtype, copy=True)
    n = A.shape[0]
    p = field.p
    det = field.one
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return field.zero
        k = c + int(nz[0])
        if k != c:
            A[[c, k]] = A[[k, c]]
            det = field.neg(det)
        piv = int(A[c, c]) if p else A[c, c]
        det = field.mul(det, piv)
        inv = field.inv(piv)
        for i in range(c + 1, n):
            if A[i, c] != 0:
                f = field.mul(int(A[i, c]) if p else A[i, c], inv)
                A[i] = (A[i] - f * A[c]) % p if p else A[i] - f * A[c]
    return det
