"""Exact dense matrix and subspace arithmetic over a FieldCtx.

Everything downstream (spinning, hom spaces, radicals, idempotents) reduces
to the kernels here.  Matrices hold raw element encodings in numpy arrays;
row operations are whole-row table lookups, XOR in characteristic 2, so the
60x60 work for kA5 stays far below the one-minute acceptance budget.
Canonical RREF everywhere makes subspace equality plain array equality.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import AmbientMismatch, ShapeMismatch
from .fieldcore import FieldCtx, FieldElem


def _as_val(ctx: FieldCtx, x) -> int:
    if isinstance(x, FieldElem):
        return x.val
    return int(x) % ctx.order if int(x) >= 0 else ctx.neg(-int(x) % ctx.order)


# ---------------------------------------------------------------- kernels --
# All private kernels mutate/consume raw numpy arrays of encodings.


def _mul_outer(ctx: FieldCtx, col: np.ndarray, row: np.ndarray) -> np.ndarray:
    return ctx.MUL[col[:, None], row[None, :]]


def _add_arr(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if ctx.char == 2:
        return np.bitwise_xor(a, b)
    return ctx.ADD[a, b]


def _sub_arr(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if ctx.char == 2:
        return np.bitwise_xor(a, b)
    return ctx.SUB[a, b]


def _matmul_arr(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(f"matmul {a.shape} x {b.shape}")
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=ctx.dtype)
    if ctx.degree == 1:
        return ((a.astype(np.int64) @ b.astype(np.int64)) % ctx.char).astype(ctx.dtype)
    if ctx.char == 2:
        return np.bitwise_xor.reduce(ctx.MUL[a[:, :, None], b[None, :, :]], axis=1)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=ctx.dtype)
    for k in range(a.shape[1]):
        out = ctx.ADD[out, _mul_outer(ctx, a[:, k], b[k, :])]
    return out


def _rref_arr(ctx: FieldCtx, m: np.ndarray) -> tuple[np.ndarray, int, list[int]]:
    """Unique reduced row echelon form; returns (rref, rank, pivot columns)."""
    m = m.astype(ctx.dtype, copy=True)
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        pv = int(m[r, c])
        if pv != 1:
            m[r] = ctx.MUL[ctx.INV[pv]][m[r]]
        other = np.nonzero(m[:, c])[0]
        other = other[other != r]
        if other.size:
            m[other] = _sub_arr(ctx, m[other], _mul_outer(ctx, m[other, c], m[r]))
        pivots.append(c)
        r += 1
    return m, r, pivots


def _nullspace_arr(ctx: FieldCtx, m: np.ndarray) -> np.ndarray:
    """Canonical basis (as rows) of {v : m v = 0}."""
    r, rank, pivots = _rref_arr(ctx, m)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=ctx.dtype)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row_idx, pc in enumerate(pivots):
            basis[i, pc] = ctx.NEG[r[row_idx, fc]]
    return basis


def _kron_arr(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ra, ca = a.shape
    rb, cb = b.shape
    return ctx.MUL[a[:, None, :, None], b[None, :, None, :]].reshape(ra * rb, ca * cb)


# ------------------------------------------------------------------- Mat --


class Mat:
    """Immutable dense matrix over a FieldCtx (row-major encodings)."""

    __slots__ = ("ctx", "a")

    def __init__(self, ctx: FieldCtx, arr: np.ndarray):
        self.ctx = ctx
        a = np.asarray(arr, dtype=ctx.dtype)
        if a.ndim != 2:
            raise ShapeMismatch(f"matrix must be 2-d, got shape {a.shape}")
        self.a = a

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence]) -> "Mat":
        vals = [[_as_val(ctx, x) for x in row] for row in rows]
        ncols = len(vals[0]) if vals else 0
        return cls(ctx, np.array(vals, dtype=ctx.dtype).reshape(len(vals), ncols))

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "Mat":
        return cls(ctx, np.zeros((rows, cols), dtype=ctx.dtype))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "Mat":
        return cls(ctx, np.eye(n, dtype=ctx.dtype))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def entry(self, i: int, j: int) -> FieldElem:
        return FieldElem(self.ctx, int(self.a[i, j]))

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ctx != other.ctx:
            raise ShapeMismatch("matrices over different fields")
        return Mat(self.ctx, _matmul_arr(self.ctx, self.a, other.a))

    def __add__(self, other: "Mat") -> "Mat":
        if self.a.shape != other.a.shape:
            raise ShapeMismatch(f"add {self.a.shape} + {other.a.shape}")
        return Mat(self.ctx, _add_arr(self.ctx, self.a, other.a))

    def __sub__(self, other: "Mat") -> "Mat":
        if self.a.shape != other.a.shape:
            raise ShapeMismatch(f"sub {self.a.shape} - {other.a.shape}")
        return Mat(self.ctx, _sub_arr(self.ctx, self.a, other.a))

    def scale(self, s) -> "Mat":
        return Mat(self.ctx, self.ctx.MUL[_as_val(self.ctx, s)][self.a])

    @property
    def T(self) -> "Mat":
        return Mat(self.ctx, self.a.T.copy())

    def is_zero(self) -> bool:
        return not self.a.any()

    def rank(self) -> int:
        return _rref_arr(self.ctx, self.a)[1]

    def inverse(self) -> "Mat":
        n = self.rows
        if n != self.cols:
            raise ShapeMismatch("inverse of a non-square matrix")
        aug = np.hstack([self.a, np.eye(n, dtype=self.ctx.dtype)])
        r, rank, pivots = _rref_arr(self.ctx, aug)
        if rank != n or pivots != list(range(n)):
            raise ShapeMismatch("matrix is singular")
        return Mat(self.ctx, r[:, n:].copy())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.ctx == other.ctx
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.a.shape, self.a.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.a.astype(int).tolist()

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols} over {self.ctx})"


def rref(m: Mat) -> tuple[Mat, int, list[int]]:
    """Canonical reduced row echelon form with rank and pivot columns."""
    r, rank, pivots = _rref_arr(m.ctx, m.a)
    return Mat(m.ctx, r), rank, pivots


def nullspace(a: Mat) -> Mat:
    """Basis of the right nullspace of a, one vector per row, canonical order."""
    return Mat(a.ctx, _nullspace_arr(a.ctx, a.a))


def solve(a: Mat, b: Mat) -> Optional[Mat]:
    """One solution x of a x = b, or None when the system is inconsistent.

    The full solution set is x + nullspace(a); call nullspace separately.
    """
    if a.rows != b.rows:
        raise ShapeMismatch(f"solve: {a.rows} equations vs {b.rows} right-hand rows")
    ctx = a.ctx
    aug = np.hstack([a.a, b.a])
    r, rank, pivots = _rref_arr(ctx, aug)
    for row_idx in range(rank):
        if pivots[row_idx] >= a.cols:
            return None  # pivot in the augmented block: inconsistent
    x = np.zeros((a.cols, b.cols), dtype=ctx.dtype)
    for row_idx, pc in enumerate(pivots):
        x[pc] = r[row_idx, a.cols :]
    return Mat(ctx, x)


def field_kron(a: Mat, b: Mat) -> Mat:
    return Mat(a.ctx, _kron_arr(a.ctx, a.a, b.a))


# -------------------------------------------------------------- Subspace --


class Subspace:
    """A subspace of k^n held as a canonical RREF basis (full row rank).

    Canonical form means equality of subspaces is equality of arrays.
    """

    __slots__ = ("ctx", "ambient", "basis")

    def __init__(self, ctx: FieldCtx, ambient: int, basis: Mat, *, _canonical: bool = False):
        self.ctx = ctx
        self.ambient = ambient
        if basis.cols != ambient:
            raise AmbientMismatch(f"basis width {basis.cols} != ambient {ambient}")
        if _canonical:
            self.basis = basis
        else:
            r, rank, _ = rref(basis)
            self.basis = Mat(ctx, r.a[:rank].copy())

    @classmethod
    def from_vectors(cls, ctx: FieldCtx, ambient: int, vectors: Iterable) -> "Subspace":
        rows = [[_as_val(ctx, x) for x in v] for v in vectors]
        if not rows:
            return cls.zero(ctx, ambient)
        return cls(ctx, ambient, Mat.from_rows(ctx, rows))

    @classmethod
    def zero(cls, ctx: FieldCtx, ambient: int) -> "Subspace":
        return cls(ctx, ambient, Mat.zeros(ctx, 0, ambient), _canonical=True)

    @classmethod
    def full(cls, ctx: FieldCtx, ambient: int) -> "Subspace":
        return cls(ctx, ambient, Mat.identity(ctx, ambient), _canonical=True)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def pivots(self) -> list[int]:
        return [int(np.nonzero(row)[0][0]) for row in self.basis.a]

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        """Canonical residual of vec modulo this subspace."""
        ctx = self.ctx
        v = np.asarray(vec, dtype=ctx.dtype).copy()
        for row, p in zip(self.basis.a, self.pivots()):
            c = int(v[p])
            if c:
                v = _sub_arr(ctx, v, ctx.MUL[c][row])
        return v

    def reduce_rows(self, mat: np.ndarray) -> np.ndarray:
        """Residuals of several vectors (rows of mat) at once."""
        ctx = self.ctx
        m = np.asarray(mat, dtype=ctx.dtype).copy()
        for row, p in zip(self.basis.a, self.pivots()):
            c = m[:, p].copy()
            if c.any():
                m = _sub_arr(ctx, m, _mul_outer(ctx, c, row))
        return m

    def contains(self, vec) -> bool:
        v = np.array([_as_val(self.ctx, x) for x in vec], dtype=self.ctx.dtype)
        return not self.reduce(v).any()

    def contains_space(self, other: "Subspace") -> bool:
        return not self.reduce_rows(other.basis.a).any()

    def coords(self, vec: np.ndarray) -> np.ndarray:
        """Coordinates w.r.t. the RREF basis (valid only for members)."""
        v = np.asarray(vec, dtype=self.ctx.dtype)
        return v[self.pivots()]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ctx == other.ctx
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of k^{self.ambient})"


def subspace_ops(u: Subspace, v: Subspace) -> tuple[Subspace, Subspace]:
    """Sum and intersection, both canonical.

    Zassenhaus block elimination gives the two answers in one pass, so the
    dimension formula dim(sum) + dim(meet) = dim u + dim v holds structurally.
    """
    if u.ctx != v.ctx or u.ambient != v.ambient:
        raise AmbientMismatch("subspaces live in different ambient spaces")
    ctx, n = u.ctx, u.ambient
    if u.dim == 0:
        return v, Subspace.zero(ctx, n)
    if v.dim == 0:
        return u, Subspace.zero(ctx, n)
    top = np.hstack([u.basis.a, u.basis.a])
    bot = np.hstack([v.basis.a, np.zeros_like(v.basis.a)])
    r, rank, _ = _rref_arr(ctx, np.vstack([top, bot]))
    left = r[:, :n]
    right = r[:, n:]
    sum_rows = []
    meet_rows = []
    for i in range(rank):
        if left[i].any():
            sum_rows.append(left[i])
        elif right[i].any():
            meet_rows.append(right[i])
    total = Subspace.from_vectors(ctx, n, sum_rows) if sum_rows else Subspace.zero(ctx, n)
    meet = Subspace.from_vectors(ctx, n, meet_rows) if meet_rows else Subspace.zero(ctx, n)
    return total, meet
