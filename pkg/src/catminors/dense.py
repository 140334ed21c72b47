"""Dense modular row reduction backed by numpy.

The big degree-3 comparisons work in ambient dimensions of a few thousand
with ~10^4 generators, far beyond what per-entry Python arithmetic can do
in reasonable time.  This module keeps matrices over F_p (p < 2^30) as
int64 arrays and pushes the bulk arithmetic through float64 BLAS matmuls
using a 16-bit limb split, which is exact for inner dimensions up to 2^21.

The public object is :class:`DenseRowSpace`: the same reduced-echelon
contract as :class:`catminors.linalg.RowSpace`, with batched insertion.
"""

from __future__ import annotations

import numpy as np

from .errors import ConfigurationError, DimensionError
from .linalg import is_prime

MAX_PRIME = 1 << 30
_LIMB = 16
_MASK = (1 << _LIMB) - 1
_MAX_INNER = 1 << 21


def mod_matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Exact (A @ B) mod p for int64 arrays with entries in [0, p), p < 2^30."""
    k = A.shape[1]
    if k != B.shape[0]:
        raise DimensionError(f"inner dimensions differ: {k} vs {B.shape[0]}")
    if k == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if k > _MAX_INNER:
        raise ConfigurationError(f"inner dimension {k} exceeds exact limb-product bound {_MAX_INNER}")
    Ah = (A >> _LIMB).astype(np.float64)
    Al = (A & _MASK).astype(np.float64)
    Bh = (B >> _LIMB).astype(np.float64)
    Bl = (B & _MASK).astype(np.float64)
    hh = (Ah @ Bh).astype(np.int64) % p
    hl = (Ah @ Bl + Al @ Bh).astype(np.int64) % p
    ll = (Al @ Bl).astype(np.int64) % p
    return (hh * ((1 << 2 * _LIMB) % p) + hl * ((1 << _LIMB) % p) + ll) % p


def _rref_base(V: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form of a small batch, per-pivot elimination."""
    rows: list[np.ndarray] = []
    pivs: list[int] = []
    for i in range(V.shape[0]):
        r = V[i] % p
        for pc, pr in zip(pivs, rows):
            c = r[pc]
            if c:
                r = (r - c * pr) % p
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            continue
        pc = int(nz[0])
        inv = pow(int(r[pc]), -1, p)
        r = r * inv % p
        for j, pr in enumerate(rows):
            c = pr[pc]
            if c:
                rows[j] = (pr - c * r) % p
        rows.append(r)
        pivs.append(pc)
    if not rows:
        return np.zeros((0, V.shape[1]), dtype=np.int64), np.zeros(0, dtype=np.int64)
    order = np.argsort(pivs, kind="stable")
    R = np.array(rows, dtype=np.int64)[order]
    return R, np.array(pivs, dtype=np.int64)[order]


def rref_dense(V: np.ndarray, p: int, leaf: int = 48) -> tuple[np.ndarray, np.ndarray]:
    """RREF of an int64 matrix mod p; divide and conquer so the work is matmul-bound.

    Returns (R, pivot_columns) with rows sorted by pivot column.
    """
    m = V.shape[0]
    if m <= leaf:
        return _rref_base(V, p)
    half = m // 2
    R1, p1 = rref_dense(V[:half], p, leaf)
    W = V[half:] % p
    if p1.size:
        W = (W - mod_matmul(W[:, p1], R1, p)) % p
    R2, p2 = rref_dense(W, p, leaf)
    if p2.size and p1.size:
        R1 = (R1 - mod_matmul(R1[:, p2], R2, p)) % p
    if not p1.size:
        return R2, p2
    if not p2.size:
        return R1, p1
    R = np.vstack([R1, R2])
    piv = np.concatenate([p1, p2])
    order = np.argsort(piv, kind="stable")
    return R[order], piv[order]


class DenseRowSpace:
    """Reduced echelon basis over F_p, stored densely, built by batch insertion."""

    def __init__(self, dim: int, p: int):
        if not (isinstance(p, int) and is_prime(p)):
            raise ConfigurationError(f"modulus must be prime, got {p!r}")
        if p >= MAX_PRIME:
            raise ConfigurationError(f"prime {p} >= 2^30 breaks exact float64 limb products")
        self.dim = dim
        self.p = p
        self.rows = np.zeros((0, dim), dtype=np.int64)
        self.pivcols = np.zeros(0, dtype=np.int64)

    @property
    def rank(self) -> int:
        return self.rows.shape[0]

    def copy(self) -> "DenseRowSpace":
        dup = DenseRowSpace(self.dim, self.p)
        dup.rows = self.rows.copy()
        dup.pivcols = self.pivcols.copy()
        return dup

    def reduce_batch(self, V: np.ndarray) -> np.ndarray:
        """Residuals of the rows of V against the current basis."""
        if V.ndim != 2 or V.shape[1] != self.dim:
            raise DimensionError(f"batch shape {V.shape} does not match ambient {self.dim}")
        V = V % self.p
        if self.rank:
            V = (V - mod_matmul(V[:, self.pivcols], self.rows, self.p)) % self.p
        return V

    def insert_batch(self, V: np.ndarray) -> int:
        """Insert the rows of V; returns the number of new pivots."""
        V = self.reduce_batch(V)
        V = V[V.any(axis=1)]
        if V.shape[0] == 0:
            return 0
        R, piv = rref_dense(V, self.p)
        if piv.size == 0:
            return 0
        if self.rank:
            self.rows = (self.rows - mod_matmul(self.rows[:, piv], R, self.p)) % self.p
        allrows = np.vstack([self.rows, R])
        allpiv = np.concatenate([self.pivcols, piv])
        order = np.argsort(allpiv, kind="stable")
        self.rows = allrows[order]
        self.pivcols = allpiv[order]
        return int(piv.size)

    def contains_all(self, V: np.ndarray) -> bool:
        return not self.reduce_batch(V).any()

    def is_invariant_under(self, col_perm: np.ndarray) -> bool:
        """True iff the span is stable under the coordinate permutation col_perm.

        col_perm maps old coordinate index -> new coordinate index; applying
        it to a row vector v yields w with w[col_perm[i]] = v[i].
        """
        if self.rank == 0:
            return True
        permuted = np.zeros_like(self.rows)
        permuted[:, col_perm] = self.rows
        for i in range(0, permuted.shape[0], 1024):
            if self.reduce_batch(permuted[i : i + 1024]).any():
                return False
        return True


def scalar_mod(v, p: int) -> int:
    """Image of an exact scalar (int or Fraction) in F_p."""
    num = getattr(v, "numerator", v)
    den = getattr(v, "denominator", 1)
    if den == 1:
        return num % p
    return num * pow(den, -1, p) % p


def sparse_rows_to_dense(rows, dim: int, p: int) -> np.ndarray:
    """Pack an iterable of {index: scalar} dicts into an int64 matrix mod p."""
    out = np.zeros((len(rows), dim), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in row.items():
            out[i, j] = scalar_mod(v, p)
    return out


def batched_rank(row_dicts_iter, dim: int, p: int, batch: int = 512) -> DenseRowSpace:
    """Stream sparse rows into a DenseRowSpace without materializing the full matrix."""
    space = DenseRowSpace(dim, p)
    pending: list[dict[int, int]] = []
    for row in row_dicts_iter:
        pending.append(row)
        if len(pending) >= batch:
            space.insert_batch(sparse_rows_to_dense(pending, dim, p))
            pending = []
    if pending:
        space.insert_batch(sparse_rows_to_dense(pending, dim, p))
    return space


def compare_dense(A: DenseRowSpace, B: DenseRowSpace, batch: int = 1024) -> tuple[str, int, int, int]:
    """Verdict plus (rank A, rank B, rank of the join), same labels as linalg.compare."""
    from . import linalg

    if A.dim != B.dim or A.p != B.p:
        raise DimensionError("operands live in different ambient spaces")
    join = A.copy()
    for i in range(0, B.rank, batch):
        join.insert_batch(B.rows[i : i + batch])
    ra, rb, rj = A.rank, B.rank, join.rank
    if rj == ra == rb:
        verdict = linalg.EQUAL
    elif rj == rb:
        verdict = linalg.SUBSET
    elif rj == ra:
        verdict = linalg.SUPERSET
    else:
        verdict = linalg.INCOMPARABLE
    return verdict, ra, rb, rj
