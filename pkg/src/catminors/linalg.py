"""Exact rational and modular sparse linear algebra.

Every ideal/space comparison in this package reduces to ranks of row spans.
A :class:`RowSpace` keeps a reduced echelon basis of a subspace of a fixed
coordinate space and supports incremental insertion, membership reduction,
and comparison.  Two scalar modes share one code path:

* ``mode="exact"``: rows are kept as primitive integer vectors (content 1,
  positive leading coefficient), which is the unique integer scaling of the
  rational reduced echelon form.  Fractions appear only at the API surface.
* ``mode=p`` for a prime ``p``: rows are kept with pivot normalized to 1.

Large dense modular eliminations are delegated to :mod:`catminors.dense`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ConfigurationError, DimensionError

EXACT = "exact"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_primes(count: int, rng: random.Random, lo: int = 1 << 29, hi: int = 1 << 30) -> list[int]:
    """`count` distinct random primes in [lo, hi)."""
    found: list[int] = []
    while len(found) < count:
        cand = rng.randrange(lo | 1, hi, 2)
        while not is_prime(cand):
            cand += 2
        if cand < hi and cand not in found:
            found.append(cand)
    return found


@dataclass(frozen=True)
class SparseVector:
    """Sorted sparse coordinate vector with nonzero entries."""

    dim: int
    entries: tuple[tuple[int, Fraction | int], ...]

    @staticmethod
    def from_dict(dim: int, coords: dict) -> "SparseVector":
        items = tuple(sorted((i, v) for i, v in coords.items() if v != 0))
        for i, _ in items:
            if not 0 <= i < dim:
                raise DimensionError(f"coordinate {i} outside ambient dimension {dim}")
        return SparseVector(dim, items)

    def to_dict(self) -> dict:
        return dict(self.entries)

    def is_zero(self) -> bool:
        return not self.entries


def _to_int_coords(entries) -> dict[int, int]:
    """Clear denominators: scale a rational sparse vector to a primitive integer one."""
    coords = {i: Fraction(v) for i, v in entries if v != 0}
    if not coords:
        return {}
    den_lcm = 1
    for v in coords.values():
        den_lcm = den_lcm * v.denominator // gcd(den_lcm, v.denominator)
    ints = {i: int(v * den_lcm) for i, v in coords.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {i: v // g for i, v in ints.items()}


def _content_normalize(row: dict[int, int], lead_col: int) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if row[lead_col] < 0:
        g = -g
    return {i: v // g for i, v in row.items()}


class RowSpace:
    """Reduced echelon basis of a subspace of K^dim (K = Q or F_p)."""

    def __init__(self, dim: int, mode=EXACT):
        if mode != EXACT:
            if not isinstance(mode, int) or not is_prime(mode):
                raise ConfigurationError(f"modular mode needs a prime modulus, got {mode!r}")
        self.dim = dim
        self.mode = mode
        self._rows: dict[int, dict[int, int]] = {}  # pivot column -> row

    # -- basic properties ------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def copy(self) -> "RowSpace":
        dup = RowSpace(self.dim, self.mode)
        dup._rows = {p: dict(r) for p, r in self._rows.items()}
        return dup

    def __eq__(self, other) -> bool:
        if not isinstance(other, RowSpace):
            return NotImplemented
        return (self.dim, self.mode, self._canonical()) == (other.dim, other.mode, other._canonical())

    def _canonical(self):
        return tuple((p, tuple(sorted(self._rows[p].items()))) for p in sorted(self._rows))

    # -- reduction and insertion ------------------------------------------

    def _coerce(self, vec) -> dict[int, int]:
        if isinstance(vec, SparseVector):
            if vec.dim != self.dim:
                raise DimensionError(f"vector dim {vec.dim} != ambient {self.dim}")
            entries = vec.entries
        elif isinstance(vec, dict):
            entries = vec.items()
        else:
            entries = vec
        if self.mode == EXACT:
            coords = _to_int_coords(entries)
        else:
            p = self.mode
            coords = {}
            for i, v in entries:
                if isinstance(v, Fraction):
                    v = v.numerator * pow(v.denominator, -1, p)
                r = v % p
                if r:
                    coords[i] = r
        for i in coords:
            if not 0 <= i < self.dim:
                raise DimensionError(f"coordinate {i} outside ambient dimension {self.dim}")
        return coords

    def _reduce_coords(self, v: dict[int, int]) -> dict[int, int]:
        if self.mode == EXACT:
            steps = 0
            for p in sorted(self._rows):
                c = v.get(p)
                if not c:
                    continue
                row = self._rows[p]
                lead = row[p]
                g = gcd(lead, c)
                a, b = lead // g, c // g
                for i, rv in row.items():
                    nv = a * v.get(i, 0) - b * rv
                    if nv:
                        v[i] = nv
                    else:
                        v.pop(i, None)
                if a != 1:
                    for i in list(v):
                        if i not in row:
                            v[i] = a * v[i]
                steps += 1
                if steps % 16 == 0 and v:
                    g = 0
                    for x in v.values():
                        g = gcd(g, x)
                    if g > 1:
                        v = {i: x // g for i, x in v.items()}
            if v:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                if g != 1:
                    v = {i: x // g for i, x in v.items()}
            return v
        p = self.mode
        for pc in sorted(self._rows):
            c = v.get(pc)
            if not c:
                continue
            row = self._rows[pc]
            for i, rv in row.items():
                nv = (v.get(i, 0) - c * rv) % p
                if nv:
                    v[i] = nv
                else:
                    v.pop(i, None)
        return v

    def reduce(self, vec) -> SparseVector:
        """Residual of vec after full reduction against the basis (not inserted).

        In exact mode the residual is returned scaled to a primitive integer
        vector (a positive rational multiple of the true residual), so it is
        zero iff vec lies in the span.
        """
        v = self._reduce_coords(self._coerce(vec))
        return SparseVector.from_dict(self.dim, v)

    def contains(self, vec) -> bool:
        return not self._reduce_coords(self._coerce(vec))

    def insert(self, vec) -> bool:
        """Add vec to the span. Returns True iff the rank increased."""
        v = self._reduce_coords(self._coerce(vec))
        if not v:
            return False
        pivot = min(v)
        if self.mode == EXACT:
            v = _content_normalize(v, pivot)
            lead = v[pivot]
            for pc, row in self._rows.items():
                c = row.get(pivot)
                if not c:
                    continue
                g = gcd(lead, c)
                a, b = lead // g, c // g
                new = {}
                for i in set(row) | set(v):
                    nv = a * row.get(i, 0) - b * v.get(i, 0)
                    if nv:
                        new[i] = nv
                self._rows[pc] = _content_normalize(new, pc)
        else:
            p = self.mode
            inv = pow(v[pivot], -1, p)
            v = {i: x * inv % p for i, x in v.items()}
            for pc, row in self._rows.items():
                c = row.get(pivot)
                if not c:
                    continue
                new = {}
                for i in set(row) | set(v):
                    nv = (row.get(i, 0) - c * v.get(i, 0)) % p
                    if nv:
                        new[i] = nv
                self._rows[pc] = new
        self._rows[pivot] = v
        return True

    def insert_all(self, vecs) -> int:
        added = 0
        for v in vecs:
            added += self.insert(v)
        return added

    # -- echelon rows at the API surface ----------------------------------

    def rows(self) -> list[SparseVector]:
        """Echelon rows with pivot entries normalized to 1."""
        out = []
        for pc in sorted(self._rows):
            row = self._rows[pc]
            if self.mode == EXACT:
                lead = row[pc]
                out.append(SparseVector.from_dict(self.dim, {i: Fraction(v, lead) for i, v in row.items()}))
            else:
                out.append(SparseVector.from_dict(self.dim, dict(row)))
        return out

    def raw_rows(self) -> list[dict[int, int]]:
        """Internal integer rows (primitive in exact mode), pivot order."""
        return [dict(self._rows[pc]) for pc in sorted(self._rows)]


def rank(rows, dim: int, mode=EXACT) -> int:
    """Rank of a list of sparse vectors over Q or F_p."""
    rs = RowSpace(dim, mode)
    rs.insert_all(rows)
    return rs.rank


EQUAL = "equal"
SUBSET = "A<B"
SUPERSET = "B<A"
INCOMPARABLE = "incomparable"


def compare(A: RowSpace, B: RowSpace) -> str:
    """Compare two row spaces: 'equal', 'A<B' (strict), 'B<A' (strict), or 'incomparable'."""
    if A.dim != B.dim:
        raise DimensionError(f"ambient dimensions differ: {A.dim} vs {B.dim}")
    if A.mode != B.mode:
        raise DimensionError(f"scalar modes differ: {A.mode} vs {B.mode}")
    ra, rb = A.rank, B.rank
    join = A.copy()
    for row in B.raw_rows():
        join.insert(row.items())
    rj = join.rank
    if rj == ra == rb:
        return EQUAL
    if rj == rb:
        return SUBSET
    if rj == ra:
        return SUPERSET
    return INCOMPARABLE


def dump_rows(rs: RowSpace) -> str:
    """Diagnostic dump: one row per line, space-separated index:num/den pairs."""
    lines = []
    for row in rs.rows():
        parts = []
        for i, v in row.entries:
            f = Fraction(v)
            parts.append(f"{i}:{f.numerator}/{f.denominator}")
        lines.append(" ".join(parts))
    return "\n".join(lines)
