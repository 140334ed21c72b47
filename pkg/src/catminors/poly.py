"""Sparse polynomials in the variables z_gamma.

A variable is labeled by a degree-d multiset gamma (its exponent vector,
see :mod:`catminors.combinat`); a monomial of degree r is a sorted tuple of
r such labels; a polynomial is a dict from monomials to exact rational (or
integer) coefficients.  Graded pieces of ideals become coordinate vectors
through :func:`to_vector` against the monomial basis of fixed degree.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from .combinat import Multiset, multiset_degree, multiset_sort_key, multiset_union
from .errors import DimensionError

VarIndex = Multiset
PolyMonomial = tuple[VarIndex, ...]


def monomial(*vars_: VarIndex) -> PolyMonomial:
    return tuple(sorted(vars_, key=multiset_sort_key))


class Poly:
    """Sparse polynomial in the z variables with exact coefficients."""

    __slots__ = ("n", "d", "terms")

    def __init__(self, n: int, d: int, terms: dict[PolyMonomial, Fraction] | None = None):
        self.n = n
        self.d = d
        self.terms: dict[PolyMonomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    self.terms[m] = Fraction(c)

    @staticmethod
    def zero(n: int, d: int) -> "Poly":
        return Poly(n, d)

    @staticmethod
    def variable(gamma: VarIndex, n: int | None = None) -> "Poly":
        n = len(gamma) if n is None else n
        return Poly(n, multiset_degree(gamma), {(gamma,): Fraction(1)})

    def _check(self, other: "Poly") -> None:
        if (self.n, self.d) != (other.n, other.d):
            raise DimensionError(
                f"polynomials over different variable sets: (n,d)=({self.n},{self.d}) vs ({other.n},{other.d})"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Common degree of all monomials, or None if inhomogeneous/zero."""
        degs = {len(m) for m in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return Poly(self.n, self.d, out)

    def __neg__(self) -> "Poly":
        return Poly(self.n, self.d, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out: dict[PolyMonomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2, key=multiset_sort_key))
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return Poly(self.n, self.d, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.n, self.d)
        return Poly(self.n, self.d, {m: cc * c for m, cc in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.n, self.d) == (other.n, other.d) and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.d, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in sorted(self.terms.items())[:6]:
            var = "*".join("z" + "".join(map(str, g)) for g in m)
            bits.append(f"{c}*{var}")
        more = "" if len(self.terms) <= 6 else f" ... ({len(self.terms)} terms)"
        return "Poly(" + " + ".join(bits) + more + ")"

    def evaluate(self, point: dict[VarIndex, Fraction]) -> Fraction:
        """Substitute values for every variable appearing in the polynomial."""
        total = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for g in m:
                if g not in point:
                    raise KeyError(f"no value assigned to variable z_{g}")
                val *= Fraction(point[g])
            total += val
        return total

    def to_json(self) -> str:
        """Serialize as {monomial key: "num/den"}; key is the sorted exponent vectors."""
        obj = {}
        for m, c in sorted(self.terms.items()):
            key = ";".join(",".join(map(str, g)) for g in m)
            obj[key] = f"{c.numerator}/{c.denominator}"
        return json.dumps({"n": self.n, "d": self.d, "terms": obj})

    @staticmethod
    def from_json(s: str) -> "Poly":
        data = json.loads(s)
        terms = {}
        for key, val in data["terms"].items():
            mono = tuple(tuple(int(x) for x in g.split(",")) for g in key.split(";")) if key else ()
            num, den = val.split("/")
            terms[mono] = Fraction(int(num), int(den))
        return Poly(data["n"], data["d"], terms)


def poly_arith(op: str, a: Poly, b) -> Poly:
    """Dispatch table mirror of the arithmetic operators (add|sub|mul|scale)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


def minor_det(entry_of, rows, cols, n: int, d: int) -> Poly:
    """Leibniz expansion of the k x k minor with the given row/column indices.

    ``entry_of(i, j)`` must return the VarIndex at position (i, j).  Index
    lists must be duplicate-free.
    """
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("repeated row or column index in minor")
    if len(rows) != len(cols):
        raise ValueError("minor requires equally many rows and columns")
    k = len(rows)
    terms: dict[PolyMonomial, Fraction] = {}
    for perm in permutations(range(k)):
        sign = 1
        seen = list(perm)
        # sign via counting inversions
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        mono = monomial(*(entry_of(rows[i], cols[perm[i]]) for i in range(k)))
        nc = terms.get(mono, 0) + sign
        if nc:
            terms[mono] = nc
        else:
            terms.pop(mono, None)
    return Poly(n, d, {m: Fraction(c) for m, c in terms.items()})


class GradedBasis:
    """Ordered monomial basis of the degree-r piece of K[z_gamma]."""

    def __init__(self, variables: list[VarIndex], r: int):
        self.variables = list(variables)
        self.r = r
        self.monomials: list[PolyMonomial] = [
            tuple(sorted(m, key=multiset_sort_key))
            for m in combinations_with_replacement(
                sorted(variables, key=multiset_sort_key), r
            )
        ]
        self.index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)


def to_vector(p: Poly, basis: GradedBasis) -> dict[int, Fraction]:
    """Coordinates of a homogeneous polynomial in the given monomial basis."""
    out = {}
    for m, c in p.terms.items():
        idx = basis.index.get(m)
        if idx is None:
            raise DimensionError(f"monomial {m} outside the degree-{basis.r} basis")
        out[idx] = c
    return out


def from_vector(coords: dict[int, Fraction], basis: GradedBasis, n: int, d: int) -> Poly:
    return Poly(n, d, {basis.monomials[i]: Fraction(c) for i, c in coords.items() if c})
