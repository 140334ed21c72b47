"""The block-partition module W(d, r) and its tableau calculus.

Elements of the module are sparse combinations of partitions of {1..N},
N = d*r, into r blocks of size d ("block monomials").  The symmetric group
permutes the ground set; Young symmetrizers cut out highest weight spaces;
generic flattenings (determinants of block unions) span the subrepresentations
that specialize to graded pieces of catalecticant minor ideals.

The Young symmetrizer convention here applies the column antisymmetrizer
first and the row symmetrizer second.  That is the convention under which
the two tableau relations hold:

* a filling with a repeated symbol in some column is killed, and
* fillings differing by column permutations agree up to sign, fillings
  differing by swaps of equal-length columns agree exactly.

Both relations are exercised directly by the test suite against the raw
group-algebra computation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations

from . import chars, dense, linalg
from .combinat import (
    Blocks,
    IntPartition,
    canonical_blocks,
    canonical_tableau,
    check_partition,
    count_generic_monomials,
    enumerate_generic_monomials,
    irrep_dimension,
    multiset_from_elements,
    multiset_sort_key,
    partitions_of,
)
from .errors import DimensionError, ResourceLimitError
from .linalg import EXACT, RowSpace
from .poly import Poly

FEASIBLE_N = 12


class WElement:
    """Sparse combination of block monomials with exact coefficients."""

    __slots__ = ("d", "r", "terms")

    def __init__(self, d: int, r: int, terms: dict[Blocks, Fraction | int] | None = None):
        self.d = d
        self.r = r
        self.terms: dict[Blocks, Fraction | int] = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    self.terms[m] = c

    @staticmethod
    def monomial(blocks, d: int | None = None, r: int | None = None) -> "WElement":
        blocks = canonical_blocks(blocks)
        d = d if d is not None else len(blocks[0])
        r = r if r is not None else len(blocks)
        return WElement(d, r, {blocks: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "WElement") -> None:
        if (self.d, self.r) != (other.d, other.r):
            raise DimensionError(f"ambient mismatch: (d,r)=({self.d},{self.r}) vs ({other.d},{other.r})")

    def __add__(self, other: "WElement") -> "WElement":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return WElement(self.d, self.r, out)

    def __sub__(self, other: "WElement") -> "WElement":
        return self + other.scale(-1)

    def scale(self, c) -> "WElement":
        if c == 0:
            return WElement(self.d, self.r)
        return WElement(self.d, self.r, {m: cc * c for m, cc in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, WElement):
            return NotImplemented
        return (self.d, self.r) == (other.d, other.r) and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"WElement(d={self.d}, r={self.r}, {len(self.terms)} terms)"


def check_permutation(sigma, N: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, N + 1)):
        raise ValueError(f"not a permutation of 1..{N}: {sigma}")
    return sigma


def act_blocks(sigma: tuple[int, ...], blocks: Blocks) -> Blocks:
    return canonical_blocks(tuple(sigma[x - 1] for x in block) for block in blocks)


def act(sigma, w: WElement) -> WElement:
    """Linear extension of the ground-set permutation action on block monomials."""
    sigma = check_permutation(sigma, w.d * w.r)
    out: dict[Blocks, Fraction | int] = {}
    for m, c in w.terms.items():
        m2 = act_blocks(sigma, m)
        nc = out.get(m2, 0) + c
        if nc:
            out[m2] = nc
        else:
            out.pop(m2, None)
    return WElement(w.d, w.r, out)


@dataclass(frozen=True)
class GenericFlattening:
    """Row blocks alpha_1..alpha_k, column blocks beta_1..beta_k, spectator blocks."""

    alphas: Blocks
    betas: Blocks
    gammas: Blocks = ()

    def __post_init__(self):
        allblocks = self.alphas + self.betas + self.gammas
        elements = [x for b in allblocks for x in b]
        if len(set(elements)) != len(elements):
            raise ValueError("blocks of a flattening must be pairwise disjoint")
        if len(set(map(len, self.alphas))) > 1 or len(set(map(len, self.betas))) > 1:
            raise ValueError("row blocks (and column blocks) must have uniform size")
        if set(elements) != set(range(1, len(elements) + 1)):
            raise ValueError("blocks must cover {1..N}")
        if len(self.alphas) != len(self.betas):
            raise ValueError("need equally many row and column blocks")

    @property
    def k(self) -> int:
        return len(self.alphas)

    @property
    def a(self) -> int:
        return len(self.alphas[0])

    @property
    def b(self) -> int:
        return len(self.betas[0])

    @property
    def d(self) -> int:
        return self.a + self.b

    @property
    def r(self) -> int:
        return self.k + len(self.gammas)

    def monomial_blocks(self) -> Blocks:
        """Blocks of the diagonal monomial: alpha_i with beta_i, plus spectators."""
        paired = tuple(tuple(sorted(a + b)) for a, b in zip(self.alphas, self.betas))
        return canonical_blocks(paired + self.gammas)


def generic_flattening(F: GenericFlattening) -> WElement:
    """det(z_{alpha_i + beta_j}) times the spectator variables, expanded with signs."""
    k = F.k
    out: dict[Blocks, int] = {}
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        sign = -1 if inv % 2 else 1
        blocks = tuple(tuple(sorted(F.alphas[i] + F.betas[perm[i]])) for i in range(k))
        m = canonical_blocks(blocks + F.gammas)
        nc = out.get(m, 0) + sign
        if nc:
            out[m] = nc
        else:
            out.pop(m, None)
    return WElement(F.d, F.r, out)


# -- tableaux ------------------------------------------------------------------


def filling_of(lam: IntPartition, m: Blocks) -> tuple[int, ...]:
    """Symbol of each box 1..N: the index (1-based) of the block containing it."""
    N = sum(lam)
    fill = [0] * N
    for s, block in enumerate(m, start=1):
        for x in block:
            fill[x - 1] = s
    return tuple(fill)


def blocks_of_filling(fill: tuple[int, ...], r: int) -> Blocks:
    groups: dict[int, list[int]] = {}
    for box, s in enumerate(fill, start=1):
        groups.setdefault(s, []).append(box)
    return canonical_blocks(tuple(v) for v in groups.values())


@dataclass(frozen=True)
class Tableau:
    """Shape plus row-major symbol filling (entries in 1..r, each d times)."""

    shape: IntPartition
    rows: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)


def _rows_from_filling(lam: IntPartition, fill: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    ct = canonical_tableau(lam)
    return tuple(tuple(fill[b - 1] for b in row) for row in ct.rows)


def tableau_of(lam: IntPartition, m: Blocks) -> Tableau:
    lam = check_partition(lam)
    if sum(lam) != sum(len(b) for b in m):
        raise DimensionError("shape size does not match the monomial")
    return Tableau(lam, _rows_from_filling(lam, filling_of(lam, m)))


def _column_sorted(lam: IntPartition, fill: tuple[int, ...]) -> tuple[tuple[int, ...], int] | None:
    """Sort entries within each column; returns (filling, sign), or None on a repeat."""
    ct = canonical_tableau(lam)
    fill = list(fill)
    sign = 1
    for col in ct.columns:
        entries = [fill[b - 1] for b in col]
        if len(set(entries)) < len(entries):
            return None
        inv = sum(
            1
            for i in range(len(entries))
            for j in range(i + 1, len(entries))
            if entries[i] > entries[j]
        )
        if inv % 2:
            sign = -sign
        for b, e in zip(col, sorted(entries)):
            fill[b - 1] = e
    return tuple(fill), sign


def _sort_equal_columns(lam: IntPartition, fill: tuple[int, ...]) -> tuple[int, ...]:
    """Sort columns of equal length lexicographically (a sign-free move)."""
    ct = canonical_tableau(lam)
    cols = [[fill[b - 1] for b in col] for col in ct.columns]
    by_len: dict[int, list[int]] = {}
    for idx, col in enumerate(ct.columns):
        by_len.setdefault(len(col), []).append(idx)
    new_cols = list(cols)
    for indices in by_len.values():
        for idx, content in zip(indices, sorted(cols[i] for i in indices)):
            new_cols[idx] = content
    out = list(fill)
    for idx, col in enumerate(ct.columns):
        for b, e in zip(col, new_cols[idx]):
            out[b - 1] = e
    return tuple(out)


def tableau_normalize(lam: IntPartition, m: Blocks):
    """Canonical representative of the tableau of m under the straightening moves.

    Returns None when the class is zero (a repeated symbol in a column, or a
    self-negating symmetry), otherwise (sign, Tableau).  Two monomials related
    by column permutations, swaps of equal-length columns, or relabeling of
    the symbols normalize to the same representative.  Used for deduplication
    and zero tagging only; spans are always certified by linear algebra.
    """
    lam = check_partition(lam)
    if sum(lam) != sum(len(b) for b in m):
        raise DimensionError("shape size does not match the monomial")
    r = len(m)
    base = filling_of(lam, m)
    if _column_sorted(lam, base) is None:
        return None
    seen: dict[tuple[int, ...], int] = {}
    for relabel in permutations(range(1, r + 1)):
        fill = tuple(relabel[s - 1] for s in base)
        sorted_fill = _column_sorted(lam, fill)
        assert sorted_fill is not None  # repeats are relabel-invariant
        fill2, sign = sorted_fill
        fill3 = _sort_equal_columns(lam, fill2)
        if fill3 in seen and seen[fill3] != sign:
            return None
        seen[fill3] = sign
    rep = min(seen)
    return seen[rep], Tableau(lam, _rows_from_filling(lam, rep))


# -- the Young symmetrizer ------------------------------------------------------


@cache
def _column_group(lam: IntPartition) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All box permutations preserving columns, as (mapping, sign) pairs."""
    ct = canonical_tableau(lam)
    N = ct.size
    perms: list[tuple[tuple[int, ...], int]] = [(tuple(range(1, N + 1)), 1)]
    for col in ct.columns:
        if len(col) == 1:
            continue
        new_perms = []
        for arrangement in permutations(col):
            inv = sum(
                1
                for i in range(len(col))
                for j in range(i + 1, len(col))
                if arrangement[i] > arrangement[j]
            )
            s = -1 if inv % 2 else 1
            for base, bs in perms:
                mapping = list(base)
                for src, dst in zip(col, arrangement):
                    mapping[src - 1] = base[dst - 1]
                new_perms.append((tuple(mapping), s * bs))
        perms = new_perms
    return tuple(perms)


def _multiset_permutations(items: list[int]):
    """Distinct permutations of a multiset, via counting DFS."""
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(items)
    out: list[int] = [0] * n

    def rec(pos: int):
        if pos == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    yield from rec(0)


def _row_signature(lam: IntPartition, fill: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Sorted symbol content of each row; the row symmetrizer image depends on
    the filling only through this signature."""
    ct = canonical_tableau(lam)
    return tuple(tuple(sorted(fill[b - 1] for b in row)) for row in ct.rows)


@cache
def _row_orbit(lam: IntPartition, sig: tuple[tuple[int, ...], ...]) -> tuple[int, tuple[Blocks, ...]]:
    """All monomials obtainable by rearranging each row's content, with the
    common multiplicity prod_rows prod_s (count of s)!.

    The row symmetrizer sends any filling with row contents `sig` to
    multiplicity * (sum of these monomials): every per-row permutation lands
    on one of them, and each is hit by the same number of permutations.
    """
    ct = canonical_tableau(lam)
    r_count = max(max(row) for row in sig)
    mult = 1
    per_row: list[tuple[tuple[int, ...], ...]] = []
    for content in sig:
        cnt: dict[int, int] = {}
        for e in content:
            cnt[e] = cnt.get(e, 0) + 1
        for c in cnt.values():
            for i in range(2, c + 1):
                mult *= i
        per_row.append(tuple(_multiset_permutations(list(content))))

    images: list[Blocks] = []
    rows_boxes = ct.rows

    def rec(row_idx: int, groups: list[list[int]]):
        if row_idx == len(rows_boxes):
            images.append(canonical_blocks(tuple(g) for g in groups))
            return
        for arrangement in per_row[row_idx]:
            for b, s in zip(rows_boxes[row_idx], arrangement):
                groups[s - 1].append(b)
            rec(row_idx + 1, groups)
            for s in arrangement:
                groups[s - 1].pop()

    rec(0, [[] for _ in range(r_count)])
    return mult, tuple(images)


def young_apply(lam: IntPartition, w: WElement) -> WElement:
    """Image of w under the Young symmetrizer of the canonical tableau of lam.

    Column antisymmetrizer first, then row symmetrizer.  The column pass
    cancels eagerly; the surviving terms are grouped by per-row content
    before the row pass, since the row symmetrizer image is constant on each
    group.
    """
    lam = check_partition(lam)
    N = w.d * w.r
    if sum(lam) != N:
        raise DimensionError(f"|lambda|={sum(lam)} != N={N}")
    col_perms = _column_group(lam)
    colres: dict[Blocks, Fraction | int] = {}
    for m, c in w.terms.items():
        for mapping, sign in col_perms:
            m2 = act_blocks(mapping, m)
            nc = colres.get(m2, 0) + sign * c
            if nc:
                colres[m2] = nc
            else:
                colres.pop(m2, None)
    if not colres:
        return WElement(w.d, w.r)
    sigs: dict[tuple[tuple[int, ...], ...], Fraction | int] = {}
    for m, c in colres.items():
        sig = _row_signature(lam, filling_of(lam, m))
        nc = sigs.get(sig, 0) + c
        if nc:
            sigs[sig] = nc
        else:
            sigs.pop(sig, None)
    out: dict[Blocks, Fraction | int] = {}
    for sig, c in sigs.items():
        mult, images = _row_orbit(lam, sig)
        cm = c * mult
        for m2 in images:
            nc = out.get(m2, 0) + cm
            if nc:
                out[m2] = nc
            else:
                out.pop(m2, None)
    return WElement(w.d, w.r, out)


def circled_expand(lam: IntPartition, F: GenericFlattening):
    """Symmetrizer image of a flattening, with its signed tableau expansion.

    Returns (young_apply(lam, flattening), entries) where each entry records
    one determinant term: (sign, monomial blocks, normalize tag).  The tag is
    None for a zero tableau class, else (sign, Tableau).
    """
    w = generic_flattening(F)
    k = F.k
    entries = []
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        sign = -1 if inv % 2 else 1
        blocks = tuple(tuple(sorted(F.alphas[i] + F.betas[perm[i]])) for i in range(k))
        m = canonical_blocks(blocks + F.gammas)
        entries.append((sign, m, tableau_normalize(lam, m)))
    return young_apply(lam, w), entries


# -- multiplicities -------------------------------------------------------------


class WBasis:
    """Indexed monomial basis of the block-partition module."""

    def __init__(self, d: int, r: int):
        self.d = d
        self.r = r
        self.monomials = enumerate_generic_monomials(d, r)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)

    def coords(self, w: WElement) -> dict[int, Fraction | int]:
        return {self.index[m]: c for m, c in w.terms.items()}


def permutation_character(d: int, r: int, cycle_type: IntPartition) -> int:
    return chars.permutation_character(d, r, cycle_type)


def irreducible_character(lam: IntPartition, cycle_type: IntPartition) -> int:
    return chars.irreducible_character(tuple(lam), tuple(cycle_type))


def multiplicity(lam: IntPartition, d: int, r: int, method: str = "character") -> int:
    """Multiplicity of [lambda] in the block-partition module.

    method="character" uses the class-sum inner product; method="rank"
    computes dim span{c_lambda . m} over all monomials, deduplicated by
    normalize classes; method="both" runs the two and asserts agreement.
    """
    lam = check_partition(lam)
    if method == "character":
        return chars.module_multiplicity(lam, d, r)
    if method == "rank":
        return _multiplicity_rank(lam, d, r)
    if method == "both":
        by_rank = _multiplicity_rank(lam, d, r)
        by_char = chars.module_multiplicity(lam, d, r)
        assert by_rank == by_char, f"rank {by_rank} != character {by_char} for {lam}"
        return by_char
    raise ValueError(f"unknown method {method!r}")


def _multiplicity_rank(lam: IntPartition, d: int, r: int) -> int:
    N = d * r
    if N > FEASIBLE_N:
        raise ResourceLimitError(f"rank method materializes all monomials; N={N} > {FEASIBLE_N}")
    basis = WBasis(d, r)
    space = RowSpace(len(basis), EXACT)
    seen_classes: set = set()
    for m in basis.monomials:
        tag = tableau_normalize(lam, m)
        if tag is None:
            continue
        _, rep = tag
        if rep in seen_classes:
            continue
        seen_classes.add(rep)
        image = young_apply(lam, WElement.monomial(m, d, r))
        if image.is_zero():
            continue
        space.insert(basis.coords(image).items())
    return space.rank


# -- generic minor ideals --------------------------------------------------------


def base_flattening(k: int, a: int, b: int, d: int, r: int) -> GenericFlattening:
    """The flattening on consecutive element ranges: alpha_i, beta_i, then spectators."""
    if a + b != d:
        raise ValueError(f"a+b={a + b} != d={d}")
    if k > r:
        raise ValueError(f"k={k} > r={r}")
    pos = 1
    alphas, betas, gammas = [], [], []
    for _ in range(k):
        alphas.append(tuple(range(pos, pos + a)))
        pos += a
        betas.append(tuple(range(pos, pos + b)))
        pos += b
    for _ in range(r - k):
        gammas.append(tuple(range(pos, pos + d)))
        pos += d
    return GenericFlattening(tuple(alphas), tuple(betas), tuple(gammas))


def count_flattening_generators(k: int, a: int, b: int, d: int, r: int) -> int:
    """Ordered count N!/(a!^k b!^k k! d!^(r-k) (r-k)!); an upper bound on the
    deduplicated enumeration."""
    from math import factorial

    N = d * r
    return factorial(N) // (
        factorial(a) ** k * factorial(b) ** k * factorial(k) * factorial(d) ** (r - k) * factorial(r - k)
    )


def iter_flattening_generators(k: int, a: int, b: int, d: int, r: int):
    """All flattening generators, one per span class.

    Pairings of a fixed row-block set with a fixed column-block set differ
    only by a column permutation (a sign), so a single pairing is emitted per
    (row set, column set, spectators); for a == b the transpose duplicate is
    skipped as well.
    """
    from itertools import combinations

    N = d * r

    def families(elements: tuple[int, ...], size: int, count: int):
        """Unordered families of `count` disjoint size-`size` subsets of elements:
        the first block always takes the least remaining element."""
        if count == 0:
            yield (), elements
            return
        for combo in combinations(elements, size):
            block = tuple(combo)
            if block[0] != elements[0]:
                break
            remaining = tuple(x for x in elements if x not in set(combo))
            for others, left in families(remaining, size, count - 1):
                yield (block,) + others, left

    all_elements = tuple(range(1, N + 1))
    for alpha_support in combinations(all_elements, k * a):
        rest = tuple(x for x in all_elements if x not in set(alpha_support))
        for alphas, _ in families(alpha_support, a, k):
            for beta_support in combinations(rest, k * b):
                gamma_support = tuple(x for x in rest if x not in set(beta_support))
                for betas, _ in families(beta_support, b, k):
                    if a == b and alphas > betas:
                        continue  # transpose duplicate
                    for gammas, _ in families(gamma_support, d, r - k):
                        yield GenericFlattening(alphas, betas, gammas)


def generic_ideal_space(
    k: int,
    a: int,
    b: int,
    d: int,
    r: int,
    strategy: str = "full",
    mode=EXACT,
    seed: int = 0,
    plateau: int = 200,
    lam: IntPartition | None = None,
    max_full: int = 500_000,
):
    """Row space of the generic k x k minor ideal piece inside the module basis.

    strategy="full" enumerates every flattening generator; "orbit_sample"
    inserts random ground-set translates of the base generator until `plateau`
    consecutive dependent insertions; "hwt" spans {c_lambda . g} over sampled
    generators (requires lam), stopping early at the module multiplicity bound.
    """
    N = d * r
    basis = WBasis(d, r)
    space = RowSpace(len(basis), mode)
    if strategy == "full":
        bound = count_flattening_generators(k, a, b, d, r)
        if bound > max_full:
            raise ResourceLimitError(
                f"{bound} generators exceed the full-enumeration envelope ({max_full}); "
                "use strategy='orbit_sample'"
            )
        for F in iter_flattening_generators(k, a, b, d, r):
            space.insert(basis.coords(generic_flattening(F)).items())
        return space
    if strategy == "orbit_sample":
        rng = random.Random(seed)
        g0 = basis.coords(generic_flattening(base_flattening(k, a, b, d, r)))
        space.insert(g0.items())
        consecutive = 0
        while consecutive < plateau:
            sigma = tuple(rng.sample(range(1, N + 1), N))
            w = act(sigma, generic_flattening(base_flattening(k, a, b, d, r)))
            if space.insert(basis.coords(w).items()):
                consecutive = 0
            else:
                consecutive += 1
        return space
    if strategy == "hwt":
        if lam is None:
            raise ValueError("strategy='hwt' needs lam")
        return hwt_space(lam, k, a, b, d, r, seed=seed, plateau=plateau, mode=mode)
    raise ValueError(f"unknown strategy {strategy!r}")


def hwt_space(
    lam: IntPartition,
    k: int,
    a: int,
    b: int,
    d: int,
    r: int,
    seed: int = 0,
    plateau: int = 200,
    mode=EXACT,
    collect_elements: bool = False,
):
    """Span of c_lambda applied to sampled ideal generators.

    The dimension is bounded above by the multiplicity of [lambda] in the
    module, so sampling stops as soon as that bound is reached (or after
    `plateau` consecutive dependent insertions).

    Returns (RowSpace, bound) or (RowSpace, bound, elements) when
    collect_elements is set; elements are the inserted WElement images.
    """
    lam = check_partition(lam)
    N = d * r
    basis = WBasis(d, r)
    bound = chars.module_multiplicity(lam, d, r)
    space = RowSpace(len(basis), mode)
    elements: list[WElement] = []
    if bound == 0:
        return (space, bound, elements) if collect_elements else (space, bound)
    rng = random.Random(seed)
    base = base_flattening(k, a, b, d, r)
    base_w = generic_flattening(base)
    consecutive = 0
    first = True
    while space.rank < bound and consecutive < plateau:
        if first:
            w = base_w
            first = False
        else:
            sigma = tuple(rng.sample(range(1, N + 1), N))
            w = act(sigma, base_w)
        image = young_apply(lam, w)
        if image.is_zero():
            consecutive += 1
            continue
        if space.insert(basis.coords(image).items()):
            consecutive = 0
            if collect_elements:
                elements.append(image)
        else:
            consecutive += 1
    return (space, bound, elements) if collect_elements else (space, bound)


def check_1flattening(k: int, d: int, r: int, mode=EXACT) -> bool:
    """Dimension identity for 1-row flattenings: the ideal piece for (1, d-1)
    spans exactly the isotypic components with at least k parts."""
    if k > r:
        raise ValueError(f"k={k} > r={r}")
    N = d * r
    lhs = generic_ideal_space(k, 1, d - 1, d, r, strategy="full", mode=mode).rank
    rhs = 0
    for lam in partitions_of(N):
        if len(lam) < k:
            continue
        m = chars.module_multiplicity(lam, d, r)
        if m:
            rhs += m * irrep_dimension(lam)
    return lhs == rhs


def compare_generic(
    k: int,
    d: int,
    r: int,
    pairs: list[tuple[int, int]],
    mode=EXACT,
    seed: int = 0,
    full: bool = True,
    max_parts: int | None = None,
) -> dict:
    """Per-shape highest-weight comparison of generic ideal pieces, plus an
    optional full row-space comparison when enumeration is feasible."""
    N = d * r
    max_parts = max_parts if max_parts is not None else r
    report: dict = {"k": k, "d": d, "r": r, "pairs": list(pairs), "hwt": {}, "full": None}
    for lam in partitions_of(N, max_parts=max_parts):
        dims = {}
        for a, b in pairs:
            space, bound = hwt_space(lam, k, a, b, d, r, seed=seed, mode=mode)
            dims[(a, b)] = space.rank
        report["hwt"][lam] = {"dims": dims, "bound": chars.module_multiplicity(lam, d, r)}
    if full:
        spaces = {}
        for a, b in pairs:
            spaces[(a, b)] = generic_ideal_space(k, a, b, d, r, strategy="full", mode=mode)
        verdicts = {}
        for i, p1 in enumerate(pairs):
            for p2 in pairs[i + 1 :]:
                verdicts[(p1, p2)] = linalg.compare(spaces[p1], spaces[p2])
        report["full"] = {
            "ranks": {p: spaces[p].rank for p in pairs},
            "verdicts": verdicts,
        }
    return report


# -- specialization to catalecticant variables -----------------------------------


def specialize_weight(lam: IntPartition, w: WElement, n: int) -> Poly:
    """Replace each ground-set element by the row of its box in the canonical
    tableau of lam; blocks become degree-d multisets over {1..n}."""
    lam = check_partition(lam)
    if len(lam) > n:
        raise DimensionError(f"lambda has {len(lam)} parts > n={n}")
    N = w.d * w.r
    if sum(lam) != N:
        raise DimensionError(f"|lambda|={sum(lam)} != N={N}")
    ct = canonical_tableau(lam)
    terms: dict = {}
    for m, c in w.terms.items():
        var_list = [
            multiset_from_elements([ct.row_of(x) for x in block], n) for block in m
        ]
        mono = tuple(sorted(var_list, key=multiset_sort_key))
        nc = terms.get(mono, 0) + c
        if nc:
            terms[mono] = nc
        else:
            terms.pop(mono, None)
    return Poly(n, w.d, {m: Fraction(c) for m, c in terms.items()})


# -- dense orbit sampling for large comparisons ----------------------------------


def module_basis_permutation(basis: WBasis, sigma: tuple[int, ...]):
    """Coordinate permutation induced by a ground-set permutation: old index -> new."""
    import numpy as np

    perm = np.empty(len(basis), dtype=np.int64)
    for i, m in enumerate(basis.monomials):
        perm[i] = basis.index[act_blocks(sigma, m)]
    return perm


def orbit_sample_dense(
    k: int,
    a: int,
    b: int,
    d: int,
    r: int,
    p: int,
    seed: int = 0,
    plateau: int = 200,
    batch: int = 256,
    basis: WBasis | None = None,
    certify: bool = True,
) -> dense.DenseRowSpace:
    """Span of the ground-set orbit of the base flattening over F_p, batched.

    After the sampling plateau the span is certified complete by checking
    stability under the two standard generators of the full permutation group
    together with membership of the base generator: a stable subspace
    containing the generator contains its whole orbit span.
    """
    N = d * r
    basis = basis or WBasis(d, r)
    rng = random.Random(seed)
    space = dense.DenseRowSpace(len(basis), p)
    base_w = generic_flattening(base_flattening(k, a, b, d, r))
    g0 = basis.coords(base_w)
    space.insert_batch(dense.sparse_rows_to_dense([g0], len(basis), p))
    consecutive = 0
    while consecutive < plateau:
        rows = []
        for _ in range(batch):
            sigma = tuple(rng.sample(range(1, N + 1), N))
            rows.append(basis.coords(act(sigma, base_w)))
        added = space.insert_batch(dense.sparse_rows_to_dense(rows, len(basis), p))
        consecutive = consecutive + batch if added == 0 else 0
    if certify:
        transposition = tuple([2, 1] + list(range(3, N + 1)))
        cycle = tuple(list(range(2, N + 1)) + [1])
        for sigma in (transposition, cycle):
            perm = module_basis_permutation(basis, sigma)
            if not space.is_invariant_under(perm):
                raise ArithmeticError(
                    "sampled span is not permutation-stable; plateau stopped too early"
                )
        if space.reduce_batch(
            dense.sparse_rows_to_dense([g0], len(basis), p)
        ).any():
            raise ArithmeticError("base generator escaped the sampled span")
    return space
