"""Multisets, integer partitions, tableau shapes, and block partitions.

Conventions used everywhere downstream:

* A multiset over the symbols ``{1..n}`` is stored as its exponent vector,
  a tuple of ``n`` nonnegative integers.  Multisets of equal degree are
  ordered lexicographically *descending* on exponent vectors, which is the
  same as ordering the sorted element lists lexicographically ascending
  (so for n=2, d=4 the order is x^4, x^3 y, x^2 y^2, x y^3, y^4).
* Set partitions of ``{1..N}`` into r blocks of size d ("generic
  monomials") are stored as a tuple of blocks, each block a sorted tuple,
  with the blocks sorted by their minimum element.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations
from math import comb, factorial

from .errors import DimensionError, EmptyDomainError

Multiset = tuple[int, ...]
IntPartition = tuple[int, ...]
Blocks = tuple[tuple[int, ...], ...]


def multiset_degree(a: Multiset) -> int:
    return sum(a)


def multiset_sort_key(a: Multiset) -> tuple[int, ...]:
    # descending lex on exponent vectors == ascending lex on element lists
    return tuple(-x for x in a)


def enumerate_multisets(n: int, d: int) -> list[Multiset]:
    """All degree-d multisets over n symbols, C(n+d-1, d) of them, in canonical order."""
    if n < 0 or d < 0:
        raise ValueError(f"need n, d >= 0, got n={n}, d={d}")
    if n == 0:
        if d > 0:
            raise EmptyDomainError(f"no degree-{d} multisets over an empty symbol set")
        return [()]

    out: list[Multiset] = []

    def rec(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], d, n)
    return out


def multiset_union(a: Multiset, b: Multiset) -> Multiset:
    """Exponentwise sum; the degree of the result is deg(a) + deg(b)."""
    if len(a) != len(b):
        raise DimensionError(f"multisets over different symbol sets: n={len(a)} vs n={len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def multiset_from_elements(elements: tuple[int, ...] | list[int], n: int) -> Multiset:
    """Exponent vector of a multiset given as a list of elements from {1..n}."""
    exps = [0] * n
    for x in elements:
        if not 1 <= x <= n:
            raise ValueError(f"element {x} outside {{1..{n}}}")
        exps[x - 1] += 1
    return tuple(exps)


def multiset_elements(a: Multiset) -> list[int]:
    """Sorted element list of a multiset, e.g. (2,1,0) -> [1, 1, 2]."""
    out: list[int] = []
    for i, e in enumerate(a):
        out.extend([i + 1] * e)
    return out


def split_multiset(a: Multiset, size: int) -> tuple[Multiset, Multiset]:
    """Split off the first `size` elements of a (in sorted element order)."""
    if not 0 <= size <= multiset_degree(a):
        raise ValueError(f"cannot split {size} elements from a degree-{multiset_degree(a)} multiset")
    elems = multiset_elements(a)
    n = len(a)
    return multiset_from_elements(elems[:size], n), multiset_from_elements(elems[size:], n)


def check_partition(lam: IntPartition) -> IntPartition:
    lam = tuple(lam)
    if not lam:
        raise ValueError("empty partition")
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def conjugate_partition(lam: IntPartition) -> IntPartition:
    lam = check_partition(lam)
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def partitions_of(N: int, max_parts: int | None = None, max_part: int | None = None) -> list[IntPartition]:
    """All partitions of N, optionally bounded in length and largest part."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if max_part is None:
        max_part = N
    if max_parts is None:
        max_parts = N
    out: list[IntPartition] = []

    def rec(prefix: list[int], remaining: int, bound: int, slots: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0:
            return
        for p in range(min(bound, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p, slots - 1)

    rec([], N, max_part, max_parts)
    return out


def partitions_up_to(N: int, max_parts: int) -> list[IntPartition]:
    """All partitions of N with at most max_parts parts."""
    if N < 1 or max_parts < 1:
        raise ValueError("need N >= 1 and max_parts >= 1")
    return partitions_of(N, max_parts=max_parts)


class CanonicalTableau:
    """Row-major numbering of the boxes of a Young diagram.

    Box numbers run 1..N left-to-right within each row, top to bottom.
    """

    def __init__(self, shape: IntPartition):
        self.shape = check_partition(shape)
        self.size = sum(self.shape)
        self._row_of: list[int] = []
        self._col_of: list[int] = []
        self.rows: list[list[int]] = []
        box = 1
        for r, length in enumerate(self.shape, start=1):
            row = []
            for c in range(1, length + 1):
                self._row_of.append(r)
                self._col_of.append(c)
                row.append(box)
                box += 1
            self.rows.append(row)
        ncols = self.shape[0]
        self.columns: list[list[int]] = [
            [self.rows[r][c] for r in range(len(self.shape)) if self.shape[r] > c]
            for c in range(ncols)
        ]

    def row_of(self, box: int) -> int:
        return self._row_of[box - 1]

    def col_of(self, box: int) -> int:
        return self._col_of[box - 1]

    def __repr__(self) -> str:
        return f"CanonicalTableau(shape={self.shape})"


@cache
def canonical_tableau(lam: IntPartition) -> CanonicalTableau:
    return CanonicalTableau(lam)


def irrep_dimension(lam: IntPartition) -> int:
    """Dimension of the symmetric-group irreducible for shape lam (hook length formula)."""
    lam = check_partition(lam)
    N = sum(lam)
    conj = conjugate_partition(lam)
    hook_prod = 1
    for i, row_len in enumerate(lam):
        for j in range(row_len):
            hook_prod *= (row_len - j) + (conj[j] - i) - 1
    return factorial(N) // hook_prod


def count_standard_tableaux_brute(lam: IntPartition) -> int:
    """Backtracking count of standard Young tableaux; independent of the hook formula."""
    lam = check_partition(lam)
    N = sum(lam)
    fill = [0] * len(lam)

    def rec(k: int) -> int:
        if k > N:
            return 1
        total = 0
        for r in range(len(lam)):
            if fill[r] < lam[r] and (r == 0 or fill[r - 1] > fill[r]):
                fill[r] += 1
                total += rec(k + 1)
                fill[r] -= 1
        return total

    return rec(1)


def count_generic_monomials(d: int, r: int) -> int:
    """N! / (d!^r r!) with N = d*r."""
    N = d * r
    return factorial(N) // (factorial(d) ** r * factorial(r))


def enumerate_generic_monomials(d: int, r: int) -> list[Blocks]:
    """All partitions of {1..d*r} into r blocks of size d, blocks sorted by minimum.

    The first block always contains 1, the second the smallest element not in
    the first, and so on, so each partition is produced exactly once.
    """
    if d < 1 or r < 1:
        raise ValueError(f"need d, r >= 1, got d={d}, r={r}")
    N = d * r
    out: list[Blocks] = []

    def rec(blocks: list[tuple[int, ...]], remaining: frozenset[int]) -> None:
        if not remaining:
            out.append(tuple(blocks))
            return
        lo = min(remaining)
        rest = sorted(remaining - {lo})
        for combo in combinations(rest, d - 1):
            block = (lo,) + combo
            rec(blocks + [block], remaining - set(block))

    rec([], frozenset(range(1, N + 1)))
    assert len(out) == count_generic_monomials(d, r)
    return out


def canonical_blocks(blocks) -> Blocks:
    """Canonical form of a set partition: sorted tuples, ordered by minimum element."""
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def kostka_number(lam: IntPartition, mu: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Content mu gives the multiplicity of each entry value 1..len(mu); it need
    not be a partition. Counted by backtracking column by column.
    """
    lam = check_partition(lam)
    if sum(lam) != sum(mu):
        raise ValueError("shape and content have different sizes")
    nrows = len(lam)
    nvals = len(mu)
    remaining = list(mu)
    # fill row by row, left to right; entries weakly increase along rows,
    # strictly increase down columns
    tableau = [[0] * lam[r] for r in range(nrows)]

    def rec(r: int, c: int) -> int:
        if r == nrows:
            return 1
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = tableau[r][c - 1] if c > 0 else 1
        if r > 0 and lam[r - 1] > c:
            lo = max(lo, tableau[r - 1][c] + 1)
        total = 0
        for v in range(lo, nvals + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            tableau[r][c] = v
            total += rec(nr, nc)
            remaining[v - 1] += 1
        tableau[r][c] = 0
        return total

    return rec(0, 0)


def binomial(n: int, k: int) -> int:
    return comb(n, k)
