"""Symmetric group characters and multiplicities in the block-partition module.

Irreducible characters come from the Murnaghan-Nakayama rule in its beta-set
form.  The character of the permutation module on partitions of {1..N} into
r blocks of size d is the number of fixed block partitions, counted by a
divisor argument over the cycle type (a permutation fixes a block partition
iff it permutes the blocks, so each block orbit is glued from whole cycles).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial

from .combinat import IntPartition, check_partition, count_generic_monomials, partitions_of


def cycle_type_centralizer(mu: IntPartition) -> int:
    """z_mu = prod_i i^{m_i} m_i!; the class of type mu has N!/z_mu elements."""
    z = 1
    counts: dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    for length, m in counts.items():
        z *= length**m * factorial(m)
    return z


def _beta_set(lam: IntPartition) -> tuple[int, ...]:
    L = len(lam)
    return tuple(lam[i] + (L - 1 - i) for i in range(L))


def _beta_to_partition(beta: tuple[int, ...]) -> IntPartition:
    dec = sorted(beta, reverse=True)
    L = len(dec)
    lam = tuple(dec[i] - (L - 1 - i) for i in range(L))
    return tuple(x for x in lam if x > 0)


@cache
def irreducible_character(lam: IntPartition, mu: IntPartition) -> int:
    """chi_lambda evaluated on the class of cycle type mu (Murnaghan-Nakayama)."""
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|lambda|={sum(lam)} != |mu|={sum(mu)}")
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    beta = _beta_set(lam)
    beta_set = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        if b - k < 0 or (b - k) in beta_set:
            continue
        # height of the strip = number of beta elements strictly between b-k and b
        height = sum(1 for x in beta if b - k < x < b)
        new_beta = tuple(x if x != b else b - k for x in beta)
        sign = -1 if height % 2 else 1
        total += sign * irreducible_character(_beta_to_partition(new_beta), rest)
    return total


def _fixed_partition_count(cycles: tuple[int, ...], d: int, blocks_left: int, memo: dict) -> int:
    """Number of ways to glue the given cycles into size-d blocks permuted cyclically.

    Each block orbit of length c is a set of whole cycles with total size c*d,
    every cycle length divisible by c; the relative phases contribute a factor
    c^(#cycles in the orbit - 1).
    """
    if not cycles:
        return 1 if blocks_left == 0 else 0
    key = (cycles, blocks_left)
    if key in memo:
        return memo[key]
    first, rest = cycles[0], cycles[1:]
    m = len(rest)
    total = 0
    for mask in range(1 << m):
        group = [first]
        remaining = []
        for i in range(m):
            (group if mask >> i & 1 else remaining).append(rest[i])
        size = sum(group)
        if size % d:
            continue
        c = size // d
        if c > blocks_left or any(length % c for length in group):
            continue
        total += c ** (len(group) - 1) * _fixed_partition_count(
            tuple(remaining), d, blocks_left - c, memo
        )
    memo[key] = total
    return total


def permutation_character(d: int, r: int, cycle_type: IntPartition) -> int:
    """Number of partitions of {1..N} into r blocks of size d fixed by a permutation
    of the given cycle type (N = d*r)."""
    cycle_type = check_partition(cycle_type)
    if sum(cycle_type) != d * r:
        raise ValueError(f"cycle type of size {sum(cycle_type)}, expected N={d * r}")
    return _fixed_partition_count(tuple(cycle_type), d, r, {})


def module_multiplicity(lam: IntPartition, d: int, r: int) -> int:
    """Multiplicity of the irreducible [lambda] in the block-partition module,
    by the character inner product over conjugacy classes."""
    N = d * r
    lam = check_partition(lam)
    if sum(lam) != N:
        raise ValueError(f"|lambda|={sum(lam)} != N={N}")
    total = Fraction(0)
    for mu in partitions_of(N):
        chi_w = permutation_character(d, r, mu)
        if chi_w == 0:
            continue
        total += Fraction(chi_w * irreducible_character(lam, mu), cycle_type_centralizer(mu))
    assert total.denominator == 1, f"character inner product not integral: {total}"
    return int(total)


def module_dimension(d: int, r: int) -> int:
    return count_generic_monomials(d, r)
