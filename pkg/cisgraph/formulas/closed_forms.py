"""
Closed form totals N(G) of the named families, pure integer arithmetic.
"""
from math import comb
from typing import Callable, Dict

from cisgraph.exceptions import NoClosedFormError
from cisgraph.graphs import Family, FamilySpec


def _tadpole(p: int, q: int) -> int:
    return comb(p, 2) + comb(q + 1, 2) + (q + 1) * (p * p - p + 2) // 2


def _banner(n: int) -> int:
    return 2 + n + 7 * 2 ** (n - 4)


CLOSED_FORMS: Dict[Family, Callable[[FamilySpec], int]] = {
    Family.EDGELESS: lambda spec: spec.n,  # type: ignore
    Family.PATH: lambda spec: comb(spec.n + 1, 2),  # type: ignore
    Family.CYCLE: lambda spec: spec.n * spec.n - spec.n + 1,  # type: ignore
    Family.STAR: lambda spec: spec.n - 1 + 2 ** (spec.n - 1),  # type: ignore
    Family.COMPLETE: lambda spec: 2 ** spec.n - 1,  # type: ignore
    Family.TADPOLE: lambda spec: _tadpole(spec.p, spec.q),  # type: ignore
    Family.BANNER: lambda spec: _banner(spec.n),  # type: ignore
    Family.Q_GRAPH: lambda spec: spec.n + 2 ** (spec.n - 1),  # type: ignore
}


def has_closed_form(spec: FamilySpec) -> bool:
    return spec.family in CLOSED_FORMS


def closed_form_total(spec: FamilySpec) -> int:
    """
    Returns the exact number of connected induced subgraphs of the family member.

    :raises NoClosedFormError: for complete_minus_matching
    :param spec: validated family spec
    :type spec: FamilySpec
    :return: N(G)
    :rtype: int
    """
    if spec.family not in CLOSED_FORMS:
        raise NoClosedFormError(
            f"No closed form total for {spec.family.value}, count it instead"
        )
    return CLOSED_FORMS[spec.family](spec)
