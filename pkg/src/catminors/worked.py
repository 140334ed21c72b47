"""Canned worked examples for the generic tableau calculus.

Three scripted checks, all in exact arithmetic:

* the 3x3 flattening on blocks ({1,2},{4,6},{5,8} | {3},{7},{9}) expands to
  exactly six signed monomials;
* with shape (5,3,1), the symmetrizer image of that flattening equals the
  symmetrizer image of its diagonal monomial (the five companion terms are
  zero classes);
* the subtableau construction: for every 3-part shape with at least two
  boxes in the second column, the symmetrizer image of a flattening whose
  row blocks are pinned to the first two columns equals the image of the
  underlying monomial.
"""

from __future__ import annotations

from .combinat import IntPartition, partitions_of
from .symgrp import (
    GenericFlattening,
    WElement,
    circled_expand,
    generic_flattening,
    tableau_normalize,
    young_apply,
)

EXAMPLE_D = GenericFlattening(((1, 2), (4, 6), (5, 8)), ((3,), (7,), (9,)))
EXAMPLE_D_SHAPE: IntPartition = (5, 3, 1)


def example_d_terms() -> dict:
    """The six signed monomials of the worked 3x3 flattening."""
    w = generic_flattening(EXAMPLE_D)
    return dict(w.terms)


def circled_example_check() -> dict:
    """Symmetrizer image of the worked flattening vs its diagonal monomial."""
    image, entries = circled_expand(EXAMPLE_D_SHAPE, EXAMPLE_D)
    m = EXAMPLE_D.monomial_blocks()
    t_image = young_apply(EXAMPLE_D_SHAPE, WElement.monomial(m))
    companions = [e for e in entries if e[1] != m]
    return {
        "num_terms": len(entries),
        "identity_nonzero": tableau_normalize(EXAMPLE_D_SHAPE, m) is not None,
        "companions_zero": all(tag is None for _, blocks, tag in companions),
        "num_companions": len(companions),
        "image_equals_monomial_image": image == t_image,
        "image_nonzero": not image.is_zero(),
    }


def subtableau_flattening(lam: IntPartition, d: int, a: int) -> tuple[GenericFlattening, tuple]:
    """The pinned flattening of the subtableau construction for a 3-part shape.

    The monomial blocks c_1, c_2, c_3 contain {1,2}, {lam_1+1, lam_1+2} and
    {lam_1+lam_2+1} respectively (the five boxes of the first two columns),
    remaining elements filled in increasing order.  The row blocks take
    alpha_1 containing 1,2; alpha_2 containing lam_1+1 but not lam_1+2; and
    alpha_3 avoiding lam_1+lam_2+1.
    """
    if len(lam) != 3 or lam[1] < 2:
        raise ValueError("construction needs a 3-part shape with at least 2 boxes in column 2")
    if a < 2:
        raise ValueError("row blocks need size at least 2 to pin the top-left boxes")
    N = 3 * d
    b = d - a
    l1, l2 = lam[0], lam[1]
    pinned = {1, 2, l1 + 1, l1 + 2, l1 + l2 + 1}
    free = [x for x in range(1, N + 1) if x not in pinned]
    c1 = [1, 2] + free[: d - 2]
    free = free[d - 2 :]
    c2 = [l1 + 1, l1 + 2] + free[: d - 2]
    free = free[d - 2 :]
    c3 = [l1 + l2 + 1] + free
    assert len(c3) == d

    alpha1 = tuple(sorted(c1[:a]))  # contains 1, 2
    rest2 = [x for x in c2 if x not in (l1 + 1, l1 + 2)]
    alpha2 = tuple(sorted([l1 + 1] + rest2[: a - 1]))  # avoids l1+2
    rest3 = [x for x in c3 if x != l1 + l2 + 1]
    alpha3 = tuple(sorted(rest3[:a]))  # avoids l1+l2+1
    beta1 = tuple(sorted(set(c1) - set(alpha1)))
    beta2 = tuple(sorted(set(c2) - set(alpha2)))
    beta3 = tuple(sorted(set(c3) - set(alpha3)))
    F = GenericFlattening((alpha1, alpha2, alpha3), (beta1, beta2, beta3))
    assert F.a == a and F.b == b
    return F, (tuple(sorted(c1)), tuple(sorted(c2)), tuple(sorted(c3)))


def subtableau_check(lam: IntPartition, d: int, a: int) -> dict:
    F, blocks = subtableau_flattening(lam, d, a)
    image, entries = circled_expand(lam, F)
    m = F.monomial_blocks()
    t_image = young_apply(lam, WElement.monomial(m))
    companions = [e for e in entries if e[1] != m]
    return {
        "lam": lam,
        "companions_zero": all(tag is None for _, _, tag in companions),
        "num_companions": len(companions),
        "image_equals_monomial_image": image == t_image,
        "monomial_nonzero": tableau_normalize(lam, m) is not None,
    }


def subtableau_shapes(d: int) -> list[IntPartition]:
    """All 3-part shapes of 3d with at least two boxes in the second column."""
    return [lam for lam in partitions_of(3 * d, max_parts=3) if len(lam) == 3 and lam[1] >= 2]


def worked_examples_report() -> dict:
    """All worked-example checks; feeds `verify examples` and the test suite."""
    terms = example_d_terms()
    d_ok = len(terms) == 6 and sorted(terms.values()) == [-1, -1, -1, 1, 1, 1]
    circled = circled_example_check()
    # the image itself is the zero class here: shape (5,3,1) has multiplicity 0
    # in W(3,3), so equality of the two images is the entire content
    circled_ok = (
        circled["companions_zero"]
        and circled["image_equals_monomial_image"]
        and circled["num_companions"] == 5
    )
    sub_results = []
    for d, a in ((3, 2), (4, 2)):
        for lam in subtableau_shapes(d):
            sub_results.append(subtableau_check(lam, d, a))
    sub_ok = all(s["companions_zero"] and s["image_equals_monomial_image"] for s in sub_results)
    return {
        "example_d_terms": len(terms),
        "example_d_ok": d_ok,
        "circled": circled,
        "circled_ok": circled_ok,
        "subtableau": [
            {"lam": list(s["lam"]), "ok": s["image_equals_monomial_image"] and s["companions_zero"]}
            for s in sub_results
        ],
        "subtableau_ok": sub_ok,
        "all_ok": d_ok and circled_ok and sub_ok,
    }
