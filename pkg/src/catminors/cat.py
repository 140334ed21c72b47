"""Catalecticant matrices, their minor ideals, and the 2x2 rewriting identity.

The generic catalecticant Cat(a,b;n) has rows indexed by degree-a multisets,
columns by degree-b multisets, and entry z_{alpha+beta}; for n=2 it is the
classical Hankel matrix.  Specializing the z's at the coefficients of a
degree-d form f gives Cat_f(a,b;n), whose ranks are the Hilbert function of
the apolar Gorenstein algebra of f.  Graded pieces of the k x k minor
ideals become row spaces in the degree-r monomial basis, which is where all
equalities and strict inclusions are certified.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from . import dense, linalg
from .combinat import (
    Multiset,
    binomial,
    enumerate_multisets,
    kostka_number,
    multiset_degree,
    multiset_elements,
    multiset_from_elements,
    multiset_sort_key,
    multiset_union,
    split_multiset,
)
from .errors import DegenerateInputError, DimensionError, ResourceLimitError
from .linalg import EXACT, RowSpace, SparseVector
from .poly import GradedBasis, Poly, minor_det, to_vector


class GenericCatalecticant:
    """The symbolic matrix Cat(a,b;n) with entry rule z_{rows[i] + cols[j]}."""

    def __init__(self, a: int, b: int, n: int):
        if a < 0 or b < 0 or n < 1:
            raise ValueError(f"need a,b >= 0 and n >= 1, got a={a}, b={b}, n={n}")
        self.a = a
        self.b = b
        self.n = n
        self.d = a + b
        self.rows: list[Multiset] = enumerate_multisets(n, a)
        self.cols: list[Multiset] = enumerate_multisets(n, b)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, i: int, j: int) -> Multiset:
        return multiset_union(self.rows[i], self.cols[j])

    def entries(self) -> list[list[Multiset]]:
        return [[self.entry(i, j) for j in range(len(self.cols))] for i in range(len(self.rows))]

    def minor(self, row_idx, col_idx) -> Poly:
        return minor_det(self.entry, list(row_idx), list(col_idx), self.n, self.d)

    def __repr__(self) -> str:
        return f"Cat({self.a},{self.b};{self.n})"


def build_generic(a: int, b: int, n: int) -> GenericCatalecticant:
    return GenericCatalecticant(a, b, n)


@dataclass(frozen=True)
class FormCoefficients:
    """Coefficients c_gamma of a degree-d form sum(c_gamma e^(gamma)) in divided powers."""

    n: int
    d: int
    coeffs: dict[Multiset, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {g: Fraction(c) for g, c in self.coeffs.items() if c != 0}
        for g in clean:
            if len(g) != self.n or multiset_degree(g) != self.d:
                raise DimensionError(f"coefficient key {g} is not a degree-{self.d} multiset over {self.n} symbols")
        object.__setattr__(self, "coeffs", clean)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, gamma: Multiset) -> Fraction:
        return self.coeffs.get(gamma, Fraction(0))


def power_sum_form(linear_forms, d: int) -> FormCoefficients:
    """Coefficients of sum_j (l_j)^(d) for l_j with coefficient vector t^(j).

    With the divided-power normalization l^(d) = l^d / d!, the coefficient of
    e^(gamma) in l^(d) is exactly t^gamma, so c_gamma = sum_j (t^(j))^gamma.
    """
    forms = [tuple(Fraction(x) for x in t) for t in linear_forms]
    if not forms:
        raise DegenerateInputError("need at least one linear form")
    n = len(forms[0])
    for t in forms:
        if len(t) != n:
            raise DimensionError("linear forms of unequal length")
        if all(x == 0 for x in t):
            raise DegenerateInputError("zero linear form gives a degenerate power sum")
    coeffs: dict[Multiset, Fraction] = {}
    for gamma in enumerate_multisets(n, d):
        c = Fraction(0)
        for t in forms:
            prod = Fraction(1)
            for ti, gi in zip(t, gamma):
                prod *= ti**gi
            c += prod
        if c:
            coeffs[gamma] = c
    return FormCoefficients(n, d, coeffs)


def specialize(cat: GenericCatalecticant, f: FormCoefficients) -> list[list[Fraction]]:
    """Numeric matrix Cat_f(a,b;n): entry (i,j) is c_{rows[i] + cols[j]}."""
    if f.n != cat.n or f.d != cat.d:
        raise DimensionError(f"form has (n,d)=({f.n},{f.d}), matrix expects ({cat.n},{cat.d})")
    return [[f[cat.entry(i, j)] for j in range(len(cat.cols))] for i in range(len(cat.rows))]


def matrix_rank(M: list[list[Fraction]]) -> int:
    """Exact rank of a dense rational matrix."""
    if not M:
        return 0
    rs = RowSpace(len(M[0]), EXACT)
    for row in M:
        rs.insert(enumerate(row))
    return rs.rank


def numeric_minor(M: list[list[Fraction]], rows, cols) -> Fraction:
    """Leibniz determinant of the submatrix M[rows][cols]."""
    k = len(rows)
    total = Fraction(0)
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(k):
            term *= M[rows[i]][cols[perm[i]]]
        total += term
    return total


def hilbert_function(f: FormCoefficients) -> tuple[int, ...]:
    """h_i = rank Cat_f(i, d-i; n) for i = 0..d; symmetric by Gorenstein duality."""
    if f.is_zero():
        raise DegenerateInputError("the Hilbert function of the zero form is undefined")
    d, n = f.d, f.n
    h = tuple(matrix_rank(specialize(build_generic(i, d - i, n), f)) for i in range(d + 1))
    assert all(h[i] == h[d - i] for i in range(d + 1)), f"Hilbert function not symmetric: {h}"
    return h


# -- graded pieces of minor ideals -------------------------------------------


@dataclass
class IdealPiece:
    """Degree-r piece of the ideal of k x k minors of Cat(a,b;n), as a row space."""

    k: int
    a: int
    b: int
    n: int
    r: int
    basis: GradedBasis
    space: RowSpace


def degree_basis(n: int, d: int, r: int) -> GradedBasis:
    return GradedBasis(enumerate_multisets(n, d), r)


def iter_minor_polys(cat: GenericCatalecticant, k: int):
    """All k x k minors of cat as polynomials, row-set-major order."""
    nrows, ncols = cat.shape
    if k > nrows or k > ncols:
        return
    for ri in combinations(range(nrows), k):
        for ci in combinations(range(ncols), k):
            yield cat.minor(ri, ci)


def iter_ideal_generators(k: int, a: int, b: int, n: int, r: int, basis: GradedBasis | None = None):
    """Coordinate vectors of (minor) x (degree r-k monomial) spanning the degree-r piece."""
    if r < k:
        raise ValueError(f"degree r={r} below minor size k={k}")
    cat = build_generic(a, b, n)
    basis = basis or degree_basis(n, a + b, r)
    cofactor_monos = GradedBasis(basis.variables, r - k).monomials if r > k else [()]
    for minor in iter_minor_polys(cat, k):
        if minor.is_zero():
            continue
        for extra in cofactor_monos:
            coords = {}
            for mono, c in minor.terms.items():
                key = tuple(sorted(mono + extra, key=multiset_sort_key))
                coords[basis.index[key]] = c
            yield coords


def ideal_graded_piece(k: int, a: int, b: int, n: int, r: int, mode=EXACT) -> IdealPiece:
    """Row space of the degree-r piece; the zero space if k exceeds a matrix dimension."""
    basis = degree_basis(n, a + b, r)
    space = RowSpace(len(basis), mode)
    cat = build_generic(a, b, n)
    if k <= min(cat.shape):
        for coords in iter_ideal_generators(k, a, b, n, r, basis):
            space.insert(coords.items())
    return IdealPiece(k, a, b, n, r, basis, space)


def count_ideal_generators(k: int, a: int, b: int, n: int, r: int) -> int:
    nrows = binomial(n + a - 1, a)
    ncols = binomial(n + b - 1, b)
    if k > nrows or k > ncols:
        return 0
    nvars = binomial(n + a + b - 1, a + b)
    return binomial(nrows, k) * binomial(ncols, k) * binomial(nvars + r - k - 1, r - k)


def _dense_piece(k: int, a: int, b: int, n: int, r: int, p: int, basis: GradedBasis, batch: int = 384) -> dense.DenseRowSpace:
    space = dense.DenseRowSpace(len(basis), p)
    cat = build_generic(a, b, n)
    if k > min(cat.shape):
        return space
    pending = []
    for coords in iter_ideal_generators(k, a, b, n, r, basis):
        pending.append(coords)
        if len(pending) >= batch:
            space.insert_batch(dense.sparse_rows_to_dense(pending, len(basis), p))
            pending = []
    if pending:
        space.insert_batch(dense.sparse_rows_to_dense(pending, len(basis), p))
    return space


def compare_ideals(
    k: int,
    n: int,
    d: int,
    t_list: list[int],
    r: int,
    mode: str = "modular",
    primes: list[int] | None = None,
    seed: int = 0,
    num_primes: int = 3,
) -> dict:
    """Pairwise comparison of the degree-r pieces of I_k(Cat(t, d-t; n)).

    In modular mode the verdicts are computed independently at `num_primes`
    random primes and must agree; in exact mode everything is certified over Q.
    For r = k an "equal" verdict certifies equality of the ideals themselves,
    since they are generated in degree k.
    """
    for t in t_list:
        if not 1 <= t <= d - 1:
            raise ValueError(f"t={t} outside 1..{d - 1}")
    if r < k:
        raise ValueError(f"need r >= k, got r={r} < k={k}")
    basis = degree_basis(n, d, r)
    report: dict = {
        "k": k,
        "n": n,
        "d": d,
        "r": r,
        "ambient": len(basis),
        "mode": mode,
        "primes": [],
        "ranks": {},
        "verdicts": {},
    }
    pairs = [(t1, t2) for i, t1 in enumerate(t_list) for t2 in t_list[i + 1 :]]
    if mode == "exact":
        spaces = {t: ideal_graded_piece(k, t, d - t, n, r, EXACT).space for t in t_list}
        report["ranks"] = {t: spaces[t].rank for t in t_list}
        for t1, t2 in pairs:
            report["verdicts"][(t1, t2)] = linalg.compare(spaces[t1], spaces[t2])
        return report
    if mode != "modular":
        raise ValueError(f"unknown mode {mode!r}")
    if primes is None:
        primes = linalg.random_primes(num_primes, random.Random(seed))
    report["primes"] = list(primes)
    per_prime = []
    for p in primes:
        spaces = {t: _dense_piece(k, t, d - t, n, r, p, basis) for t in t_list}
        ranks = {t: spaces[t].rank for t in t_list}
        verdicts = {}
        for t1, t2 in pairs:
            verdict, _, _, rj = dense.compare_dense(spaces[t1], spaces[t2])
            verdicts[(t1, t2)] = (verdict, rj)
        per_prime.append((ranks, verdicts))
    ranks0, verdicts0 = per_prime[0]
    for ranks, verdicts in per_prime[1:]:
        if ranks != ranks0 or verdicts != verdicts0:
            raise ArithmeticError(
                f"modular verdicts disagree across primes {primes}; rerun with fresh primes or --exact"
            )
    report["ranks"] = ranks0
    report["verdicts"] = {pair: v for pair, (v, _) in verdicts0.items()}
    report["join_ranks"] = {pair: rj for pair, (_, rj) in verdicts0.items()}
    return report


def strict_inclusion_certificate(k: int, n: int, d: int, t_small: int, t_big: int, r: int):
    """Exact witness that I_k(Cat(t_small,...))_r does not contain some minor of Cat(t_big,...).

    Returns (row_idx, col_idx, residual) where residual is the nonzero exact
    reduction of that minor against the small ideal piece, or None if every
    generator reduces to zero (i.e. containment holds).
    """
    small = ideal_graded_piece(k, t_small, d - t_small, n, r, EXACT)
    cat = build_generic(t_big, d - t_big, n)
    nrows, ncols = cat.shape
    if k > nrows or k > ncols:
        return None
    for ri in combinations(range(nrows), k):
        for ci in combinations(range(ncols), k):
            minor = cat.minor(ri, ci)
            if minor.is_zero():
                continue
            vec = to_vector(minor, small.basis)
            residual = small.space.reduce(vec.items())
            if not residual.is_zero():
                return ri, ci, residual
    return None


# -- the constructive 2x2 rewriting ------------------------------------------


def rewrite_2x2_minor(m1: Multiset, m2: Multiset, n1: Multiset, n2: Multiset):
    """Rewrite the 2x2 minor [m1,m2|n1,n2] of Cat(a,b;n) into minors of Cat(a+1,b-1;n).

    Returns a list of (sign, (row1, row2), (col1, col2)) whose signed minor sum
    equals the input minor as a polynomial.  Requires a <= d-2 (so b >= 2).
    The split sizes x, y are chosen minimal and the element splits take sorted
    elements first, so the output is deterministic.
    """
    n = len(m1)
    a = multiset_degree(m1)
    b = multiset_degree(n1)
    if multiset_degree(m2) != a or multiset_degree(n2) != b or len(m2) != n or len(n1) != n or len(n2) != n:
        raise DimensionError("row multisets must share degree a and column multisets degree b")
    if b < 2:
        raise ValueError(f"rewriting needs a <= d-2 (b >= 2), got a={a}, b={b}")

    if a <= 2 * b - 2:
        # split with x + y = a, 0 <= x, y <= b-1; signs all +1, second term transposed
        x = max(0, a - (b - 1))
        y = a - x
        u1, u2 = split_multiset(m1, y)
        v1, v2 = split_multiset(m2, x)
        a1, a2 = split_multiset(n1, x + 1)
        b1, b2 = split_multiset(n2, y + 1)
        term1 = (1, (multiset_union(u1, a1), multiset_union(v1, b1)),
                 (multiset_union(u2, a2), multiset_union(v2, b2)))
        # [u1+b2, v1+a2 | v2+a1, u2+b1] has row degree b-1; transpose it into
        # Cat(a+1, b-1) shape, which leaves the polynomial unchanged
        term2 = (1, (multiset_union(v2, a1), multiset_union(u2, b1)),
                 (multiset_union(u1, b2), multiset_union(v1, a2)))
        return [term1, term2]
    if b <= 2 * a + 2:
        # split with x + y = b, 1 <= x, y <= a+1
        x = max(1, b - (a + 1))
        y = b - x
        a1, a2 = split_multiset(n1, y)
        b1, b2 = split_multiset(n2, x)
        u1, u2 = split_multiset(m1, a + 1 - y)
        v1, v2 = split_multiset(m2, a + 1 - x)
        term1 = (1, (multiset_union(u1, a1), multiset_union(v1, b1)),
                 (multiset_union(u2, a2), multiset_union(v2, b2)))
        term2 = (1, (multiset_union(u1, b2), multiset_union(v1, a2)),
                 (multiset_union(v2, a1), multiset_union(u2, b1)))
        return [term1, term2]
    raise AssertionError("unreachable: one of a <= 2b-2, b <= 2a+2 always holds")


def minor_poly_2x2(rows: tuple[Multiset, Multiset], cols: tuple[Multiset, Multiset], n: int, d: int) -> Poly:
    """The polynomial z_{r1+c1} z_{r2+c2} - z_{r1+c2} z_{r2+c1}."""
    mat = [[multiset_union(r, c) for c in cols] for r in rows]
    return minor_det(lambda i, j: mat[i][j], [0, 1], [0, 1], n, d)


def rewrite_identity_holds(m1: Multiset, m2: Multiset, n1: Multiset, n2: Multiset) -> bool:
    """Expand both sides of the rewrite and test exact polynomial equality."""
    n = len(m1)
    d = multiset_degree(m1) + multiset_degree(n1)
    lhs = minor_poly_2x2((m1, m2), (n1, n2), n, d)
    rhs = Poly.zero(n, d)
    for sign, rows, cols in rewrite_2x2_minor(m1, m2, n1, n2):
        rhs = rhs + minor_poly_2x2(rows, cols, n, d).scale(sign)
    return lhs == rhs


# -- secant variety vanishing --------------------------------------------------


def secant_vanishing_check(k: int, f: FormCoefficients) -> dict:
    """Check that all (k+1)-minors of every Cat_f(i, d-i; n) vanish and ranks stay <= k.

    This is the containment of the (k+1)-minor ideal in the ideal of the k-th
    secant of the Veronese, evaluated at the point f built from <= k powers.
    """
    if f.is_zero():
        raise DegenerateInputError("zero form")
    d, n = f.d, f.n
    report: dict = {"k": k, "n": n, "d": d, "all_vanish": True, "per_degree": {}}
    for i in range(1, d):
        M = specialize(build_generic(i, d - i, n), f)
        nrows, ncols = len(M), len(M[0])
        nonzero = None
        checked = 0
        if k + 1 <= min(nrows, ncols):
            for ri in combinations(range(nrows), k + 1):
                for ci in combinations(range(ncols), k + 1):
                    checked += 1
                    if numeric_minor(M, ri, ci) != 0:
                        nonzero = (ri, ci)
                        break
                if nonzero:
                    break
        rk = matrix_rank(M)
        report["per_degree"][i] = {
            "rank": rk,
            "minors_checked": checked,
            "nonzero_minor": nonzero,
            "rank_le_k": rk <= k,
        }
        if nonzero is not None or rk > k:
            report["all_vanish"] = False
    return report


# -- GL-side multiplicities from weight spaces ---------------------------------


def generator_weight(coords: dict, basis: GradedBasis, n: int) -> tuple[int, ...]:
    """Common weight of a weight-homogeneous vector: sum of variable exponent vectors."""
    idx = next(iter(coords))
    mono = basis.monomials[idx]
    w = [0] * n
    for g in mono:
        for i, e in enumerate(g):
            w[i] += e
    return tuple(w)


def weight_space_dims(k: int, a: int, b: int, n: int, r: int) -> dict[tuple[int, ...], int]:
    """Dimensions of the dominant weight spaces of the degree-r minor ideal piece.

    Every generator (minor times monomial) is a weight vector, so each weight
    space is spanned by the generators of that weight.
    """
    basis = degree_basis(n, a + b, r)
    by_weight: dict[tuple[int, ...], RowSpace] = {}
    for coords in iter_ideal_generators(k, a, b, n, r, basis):
        w = generator_weight(coords, basis, n)
        if list(w) != sorted(w, reverse=True):
            continue  # only dominant weights feed the multiplicity triangle
        space = by_weight.setdefault(w, RowSpace(len(basis), EXACT))
        space.insert(coords.items())
    return {w: s.rank for w, s in by_weight.items()}


def gl_multiplicities(k: int, a: int, b: int, n: int, r: int) -> dict[tuple[int, ...], int]:
    """Multiplicity of each Schur functor S_lambda(V) in the degree-r minor ideal piece.

    Solved from dominant weight space dimensions by inverting the unitriangular
    Kostka system dim U_mu = sum_lambda K_{lambda,mu} m_lambda over all dominant
    weights of total degree r*(a+b).
    """
    from .combinat import partitions_up_to

    dims = weight_space_dims(k, a, b, n, r)
    total_degree = r * (a + b)
    lambdas = [
        tuple(lam) + (0,) * (n - len(lam))
        for lam in partitions_up_to(total_degree, n)
    ]
    lambdas.sort(reverse=True)  # descending lex refines dominance order
    mult: dict[tuple[int, ...], int] = {}
    for lam in lambdas:
        total = dims.get(lam, 0)
        for mu in lambdas:
            if mu == lam:
                break
            if mult[mu] == 0:
                continue
            mu_partition = tuple(x for x in mu if x)
            total -= mult[mu] * kostka_number(mu_partition, lam)
        assert total >= 0, f"negative multiplicity at {lam}: Kostka inversion inconsistent"
        mult[lam] = total
    return mult
