import pytest

from cisgraph import NoClosedFormError
from cisgraph.counting import count_profile
from cisgraph.formulas import (
    BoundSpec,
    CLOSED_FORMS,
    bound_value,
    closed_form_total,
    has_closed_form,
)
from cisgraph.graphs import FAMILY_PARAMETERS, Family, FamilySpec, construct


def members(family: Family, highest: int):
    names, minimum = FAMILY_PARAMETERS[family]
    if family == Family.TADPOLE:
        return [
            FamilySpec.of("tadpole", p, n - p)
            for n in range(3, highest + 1)
            for p in range(3, n + 1)
        ]
    return [FamilySpec.of(family.value, n) for n in range(minimum, highest + 1)]


@pytest.mark.parametrize("family", list(CLOSED_FORMS))
def test_closed_forms_match_enumeration(family):
    for spec in members(family, 14):
        assert closed_form_total(spec) == count_profile(construct(spec)).total, spec


@pytest.mark.parametrize(
    "family, params, total",
    [
        ("cycle", (3,), 7),
        ("cycle", (4,), 13),
        ("cycle", (5,), 21),
        ("banner", (5,), 21),
        ("q_graph", (5,), 21),
        ("q_graph", (6,), 38),
        ("tadpole", (3, 2), 18),
        ("tadpole", (3, 3), 25),
        ("star", (5,), 20),
        ("path", (6,), 21),
        ("complete", (10,), 1023),
        ("edgeless", (7,), 7),
    ],
)
def test_known_values(family, params, total):
    assert closed_form_total(FamilySpec.of(family, *params)) == total


def test_complete_minus_matching_has_no_closed_form():
    spec = FamilySpec.of("complete_minus_matching", 6, 2)
    assert not has_closed_form(spec)
    assert has_closed_form(FamilySpec.of("path", 2))
    with pytest.raises(NoClosedFormError):
        closed_form_total(spec)


def test_values_stay_exact_for_large_orders():
    assert closed_form_total(FamilySpec.of("complete", 64)) == 2 ** 64 - 1
    assert closed_form_total(FamilySpec.of("star", 64)) == 63 + 2 ** 63


@pytest.mark.parametrize("n", range(3, 31))
def test_smallest_tadpole_meets_the_unicyclic_minimum(n):
    tadpole = closed_form_total(FamilySpec.of("tadpole", 3, n - 3))
    assert tadpole == (n - 1) * (n + 4) // 2
    assert tadpole == bound_value(BoundSpec.of("min_total_unicyclic", n))


@pytest.mark.parametrize("n", range(4, 31))
def test_cycle_exceeds_the_unicyclic_minimum(n):
    cycle = closed_form_total(FamilySpec.of("cycle", n))
    assert cycle > bound_value(BoundSpec.of("min_total_unicyclic", n))


@pytest.mark.parametrize("n", range(5, 31))
def test_banner_against_q_graph(n):
    banner = closed_form_total(FamilySpec.of("banner", n))
    q_graph = closed_form_total(FamilySpec.of("q_graph", n))
    if n == 5:
        assert banner == q_graph == closed_form_total(FamilySpec.of("cycle", 5))
    else:
        assert banner < q_graph
