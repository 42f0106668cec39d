"""
Registry of verified claims. Every claim sweeps a range of orders bounded by
the Caps and compares scans, counts and formulas exactly.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Awaitable, Callable, Dict, Iterable, List, Set

from cisgraph.atlas import (
    ALL,
    CONNECTED,
    GraphClass,
    TREE,
    UNICYCLIC,
    canonical_form,
    catalog_size,
    generate_with_codes,
    r_components,
)
from cisgraph.counting import (
    count_by_deletion,
    count_containing,
    count_containing_pair,
    count_profile,
    is_biconnected,
    naive_count_profile,
    non_cut_vertex_count,
    rooted_subtree_count,
)
from cisgraph.formulas import (
    BoundSpec,
    CLOSED_FORMS,
    Extremizer,
    Objective,
    Sense,
    bound_value,
    closed_form_total,
    expected_extremizers,
)
from cisgraph.graphs import (
    FAMILY_PARAMETERS,
    Family,
    FamilySpec,
    construct,
    emit_graph6,
)
from cisgraph.scan.extremal import Scanner
from cisgraph.scan.reports import Caps, ClaimResult, ClaimStatus, ScanReport

logger = logging.getLogger(__name__)

UNICYCLIC_SEQUENCE = (1, 2, 5, 13, 33, 89, 240, 657, 1806)

TOTAL = Objective.total()


@dataclass
class ClaimContext:
    scanner: Scanner
    caps: Caps


@dataclass
class Claim:
    claim: str
    description: str
    check: Callable[[ClaimContext], Awaitable[ClaimResult]]


CLAIMS: Dict[str, Claim] = {}


def claim(claim_id: str, description: str) -> Callable:
    """
    Registers the decorated coroutine as the check of a claim.

    :param claim_id: stable claim id used in reports
    :type claim_id: str
    :param description: one line statement of the claim
    :type description: str
    :return: returns the original function untouched
    :rtype: Callable
    """

    def _decorator(func: Callable) -> Callable:
        CLAIMS[claim_id] = Claim(claim=claim_id, description=description, check=func)
        return func

    return _decorator


@dataclass
class Tally:
    """
    Collects checks, counterexamples and messages of a running claim.
    """

    claim: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    counterexamples: List[str] = field(default_factory=list)
    details: List[str] = field(default_factory=list)

    def fail(self, codes: Iterable[str], detail: str) -> None:
        for code in codes:
            if code not in self.counterexamples:
                self.counterexamples.append(code)
        self.details.append(detail)
        logger.warning("%s: %s", self.claim, detail)

    def expect(self, condition: bool, codes: Iterable[str], detail: str) -> None:
        self.checked += 1
        if not condition:
            self.fail(codes, detail)

    def result(self) -> ClaimResult:
        if not self.checked:
            return skipped(self.claim, self.parameters, "caps leave nothing to check")
        status = ClaimStatus.FAIL if self.counterexamples else ClaimStatus.PASS
        return ClaimResult(
            claim=self.claim,
            description=CLAIMS[self.claim].description,
            status=status,
            parameters=self.parameters,
            checked=self.checked,
            counterexamples=self.counterexamples,
            details=self.details,
        )


def skipped(claim_id: str, parameters: Dict[str, Any], reason: str) -> ClaimResult:
    logger.warning("%s skipped: %s", claim_id, reason)
    return ClaimResult(
        claim=claim_id,
        description=CLAIMS[claim_id].description,
        status=ClaimStatus.SKIPPED,
        parameters=parameters,
        details=[reason],
    )


def extremizer_codes(extremizers: Iterable[Extremizer]) -> Set[str]:
    return {canonical_form(extremizer.build()) for extremizer in extremizers}


def compare_extremizers(
    tally: Tally,
    report: ScanReport,
    graph_class: GraphClass,
    objective: Objective,
    sense: Sense,
) -> None:
    """
    Requires the scanned extremizer set to equal the predicted one exactly.
    """
    expected = expected_extremizers(
        graph_class, report.order, objective.with_sense(sense)
    )
    found = set(report.minimizers if sense == Sense.MIN else report.maximizers)
    wanted = extremizer_codes(expected)
    tally.expect(
        found == wanted,
        sorted(found ^ wanted),
        f"{report.graph_class} n={report.order} {report.objective}_{sense.value}: "
        f"found {sorted(found)}, expected {[e.label for e in expected]}",
    )


def compare_value(
    tally: Tally, report: ScanReport, sense: Sense, bound: BoundSpec
) -> None:
    value = report.min_value if sense == Sense.MIN else report.max_value
    codes = report.minimizers if sense == Sense.MIN else report.maximizers
    expected = bound_value(bound)
    tally.expect(
        value == expected,
        codes,
        f"{report.graph_class} n={report.order} {report.objective}_{sense.value} "
        f"is {value}, {bound.bound.value}{bound.params} is {expected}",
    )


@claim("PROP-2.1", "n <= N(G) <= 2^n - 1, equality exactly at E_n and K_n")
async def check_all_graph_totals(context: ClaimContext) -> ClaimResult:
    tally = Tally("PROP-2.1", {"class": "all", "n": [1, context.caps.all_graphs]})
    for n in range(1, context.caps.all_graphs + 1):
        report = await context.scanner.scan(ALL, n, TOTAL)
        compare_value(tally, report, Sense.MIN, BoundSpec.of("min_total_graph", n))
        compare_value(tally, report, Sense.MAX, BoundSpec.of("max_total_graph", n))
        compare_extremizers(tally, report, ALL, TOTAL, Sense.MIN)
        compare_extremizers(tally, report, ALL, TOTAL, Sense.MAX)
    return tally.result()


@claim("SEC-1-EDGE", "adding an edge increases N(G) by at least one")
async def check_edge_addition(context: ClaimContext) -> ClaimResult:
    tally = Tally("SEC-1-EDGE", {"class": "all", "n": [2, context.caps.all_graphs]})
    if context.caps.all_graphs < 2:
        return skipped("SEC-1-EDGE", tally.parameters, "all graphs cap below 2")
    for n in range(2, context.caps.all_graphs + 1):
        for entry in await context.scanner.scanned_graphs(ALL, n):
            total = entry.profile.total
            for u in range(n):
                for v in range(u + 1, n):
                    if entry.graph.has_edge(u, v):
                        continue
                    grown = count_profile(entry.graph.add_edge(u, v)).total
                    tally.expect(
                        grown >= total + 1,
                        [entry.code],
                        f"adding {u}-{v} to {entry.code} gives {grown} <= {total}",
                    )
    return tally.result()


@claim("IDENT-DELETION", "N(G) = N(G)_v + N(G - v) summed down to one vertex")
async def check_deletion_identity(context: ClaimContext) -> ClaimResult:
    tally = Tally("IDENT-DELETION", {"class": "all", "n": [1, context.caps.all_graphs]})
    for n in range(1, context.caps.all_graphs + 1):
        for entry in await context.scanner.scanned_graphs(ALL, n):
            by_deletion = count_by_deletion(entry.graph)
            tally.expect(
                by_deletion == entry.profile.total,
                [entry.code],
                f"{entry.code}: deletion total {by_deletion} != {entry.profile.total}",
            )
    return tally.result()


@claim("ORACLE-NAIVE", "enumeration counts equal the all subsets oracle")
async def check_naive_oracle(context: ClaimContext) -> ClaimResult:
    tally = Tally("ORACLE-NAIVE", {"class": "all", "n": [1, context.caps.all_graphs]})
    for n in range(1, context.caps.all_graphs + 1):
        for entry in await context.scanner.scanned_graphs(ALL, n):
            naive = naive_count_profile(entry.graph)
            tally.expect(
                naive.per_order == entry.profile.per_order,
                [entry.code],
                f"{entry.code}: {entry.profile.per_order} != naive {naive.per_order}",
            )
    return tally.result()


@claim("THM-1.1", "trees: P_n has the fewest subtrees, S_n the most")
async def check_tree_totals(context: ClaimContext) -> ClaimResult:
    tally = Tally("THM-1.1", {"class": "tree", "n": [1, context.caps.trees]})
    for n in range(1, context.caps.trees + 1):
        report = await context.scanner.scan(TREE, n, TOTAL)
        compare_value(tally, report, Sense.MIN, BoundSpec.of("min_total_tree", n))
        compare_value(tally, report, Sense.MAX, BoundSpec.of("max_total_tree", n))
        compare_extremizers(tally, report, TREE, TOTAL, Sense.MIN)
        compare_extremizers(tally, report, TREE, TOTAL, Sense.MAX)
    return tally.result()


@claim("LEM-1.2", "trees: P_n uniquely has the fewest subtrees of order k, 2 < k < n")
async def check_tree_orders(context: ClaimContext) -> ClaimResult:
    tally = Tally("LEM-1.2", {"class": "tree", "n": [4, context.caps.trees]})
    if context.caps.trees < 4:
        return skipped("LEM-1.2", tally.parameters, "trees cap below 4")
    for n in range(4, context.caps.trees + 1):
        for k in range(3, n):
            objective = Objective.order(k)
            report = await context.scanner.scan(TREE, n, objective)
            compare_value(tally, report, Sense.MIN, BoundSpec.of("min_Nk_tree", n, k=k))
            compare_extremizers(tally, report, TREE, objective, Sense.MIN)
    return tally.result()


@claim("THM-2.2", "connected: N_k(G) >= n - k + 1, equality only for P_n when 2 < k < n")
async def check_connected_orders(context: ClaimContext) -> ClaimResult:
    tally = Tally("THM-2.2", {"class": "connected", "n": [1, context.caps.connected]})
    for n in range(1, context.caps.connected + 1):
        for k in range(1, n + 1):
            objective = Objective.order(k)
            report = await context.scanner.scan(CONNECTED, n, objective)
            compare_value(
                tally, report, Sense.MIN, BoundSpec.of("min_Nk_connected", n, k=k)
            )
            if 2 < k < n:
                compare_extremizers(tally, report, CONNECTED, objective, Sense.MIN)
    return tally.result()


@claim("CONNECTED-TOTALS", "connected: C(n+1,2) <= N(G) <= 2^n - 1, minimum grows with n")
async def check_connected_totals(context: ClaimContext) -> ClaimResult:
    tally = Tally(
        "CONNECTED-TOTALS", {"class": "connected", "n": [1, context.caps.connected]}
    )
    previous = 0
    for n in range(1, context.caps.connected + 1):
        report = await context.scanner.scan(CONNECTED, n, TOTAL)
        compare_value(tally, report, Sense.MIN, BoundSpec.of("min_total_connected", n))
        compare_value(tally, report, Sense.MAX, BoundSpec.of("max_total_connected", n))
        compare_extremizers(tally, report, CONNECTED, TOTAL, Sense.MIN)
        compare_extremizers(tally, report, CONNECTED, TOTAL, Sense.MAX)
        tally.expect(
            report.min_value >= previous,
            report.minimizers,
            f"minimum total drops from {previous} to {report.min_value} at n={n}",
        )
        previous = report.min_value
    return tally.result()


@claim(
    "PROP-2.3",
    "connected: N_k(G) <= C(n,k) for k >= 3, attained by K_n minus any matching",
)
async def check_connected_maximizers(context: ClaimContext) -> ClaimResult:
    tally = Tally("PROP-2.3", {"class": "connected", "n": [3, context.caps.connected]})
    if context.caps.connected < 3:
        return skipped("PROP-2.3", tally.parameters, "connected cap below 3")
    for n in range(3, context.caps.connected + 1):
        members = {
            canonical_form(construct(FamilySpec.of("complete_minus_matching", n, l)))
            for l in range(n // 2 + 1)  # noqa: E741
        }
        for k in range(3, n + 1):
            objective = Objective.order(k)
            report = await context.scanner.scan(CONNECTED, n, objective)
            compare_value(
                tally, report, Sense.MAX, BoundSpec.of("max_Nk_connected", n, k=k)
            )
            missing = members - set(report.maximizers)
            tally.expect(
                not missing,
                sorted(missing),
                f"n={n} k={k}: matching complements {sorted(missing)} "
                f"miss the maximum {report.max_value}",
            )
            if k == 3:
                compare_extremizers(tally, report, CONNECTED, objective, Sense.MAX)
    return tally.result()


@claim(
    "SEC-2-NONCUT",
    "connected: N_{n-1}(G) counts non cut vertices, equals n iff 2-connected",
)
async def check_non_cut_identity(context: ClaimContext) -> ClaimResult:
    tally = Tally(
        "SEC-2-NONCUT", {"class": "connected", "n": [3, context.caps.connected]}
    )
    if context.caps.connected < 3:
        return skipped("SEC-2-NONCUT", tally.parameters, "connected cap below 3")
    for n in range(3, context.caps.connected + 1):
        for entry in await context.scanner.scanned_graphs(CONNECTED, n):
            below = entry.profile.count(n - 1)
            non_cut = non_cut_vertex_count(entry.graph)
            tally.expect(
                below == non_cut,
                [entry.code],
                f"{entry.code}: N_(n-1)={below} but {non_cut} non cut vertices",
            )
            tally.expect(
                below <= n and (below == n) == is_biconnected(entry.graph),
                [entry.code],
                f"{entry.code}: N_(n-1)={below} disagrees with 2-connectivity",
            )
    return tally.result()


def _family_members(family: Family, cap: int) -> List[FamilySpec]:
    _, minimum = FAMILY_PARAMETERS[family]
    if family == Family.TADPOLE:
        return [
            FamilySpec(family=family, p=p, q=q)
            for p in range(minimum, cap + 1)
            for q in range(0, cap - p + 1)
        ]
    return [FamilySpec(family=family, n=n) for n in range(minimum, cap + 1)]


@claim("CLOSED-FORMS", "closed form totals equal enumeration for every named family")
async def check_closed_forms(context: ClaimContext) -> ClaimResult:
    cap = context.caps.closed_forms
    tally = Tally("CLOSED-FORMS", {"order": [1, cap]})
    for family in CLOSED_FORMS:
        for spec in _family_members(family, cap):
            graph = construct(spec)
            counted = count_profile(graph).total
            formula = closed_form_total(spec)
            tally.expect(
                counted == formula,
                [emit_graph6(graph)],
                f"{spec.label}: enumeration {counted}, closed form {formula}",
            )
    for n in range(3, 31):
        tadpole = closed_form_total(FamilySpec.of("tadpole", 3, n - 3))
        tally.expect(
            tadpole == (n - 1) * (n + 4) // 2
            and tadpole == bound_value(BoundSpec.of("min_total_unicyclic", n)),
            [f"G_{{3,{n - 3}}}"],
            f"n={n}: G_(3,n-3) total {tadpole} is not the unicyclic minimum",
        )
        if n >= 4:
            cycle = closed_form_total(FamilySpec.of("cycle", n))
            tally.expect(
                cycle > tadpole, [f"C_{n}"], f"C_{n} total {cycle} <= {tadpole}"
            )
        if n >= 5:
            banner = closed_form_total(FamilySpec.of("banner", n))
            q_graph = closed_form_total(FamilySpec.of("q_graph", n))
            relation = banner == q_graph if n == 5 else banner < q_graph
            tally.expect(
                relation, [f"B_{n}"], f"n={n}: banner {banner}, Q_n {q_graph}"
            )
    return tally.result()


@claim("SEQ-UNICYCLIC", "unicyclic catalog sizes follow 1, 2, 5, 13, 33, 89, 240, ...")
async def check_unicyclic_sequence(context: ClaimContext) -> ClaimResult:
    cap = min(context.caps.unicyclic, 2 + len(UNICYCLIC_SEQUENCE))
    tally = Tally("SEQ-UNICYCLIC", {"class": "unicyclic", "n": [3, cap]})
    if cap < 3:
        return skipped("SEQ-UNICYCLIC", tally.parameters, "unicyclic cap below 3")
    for n in range(3, cap + 1):
        size = catalog_size(UNICYCLIC, n)
        tally.expect(
            size == UNICYCLIC_SEQUENCE[n - 3],
            [f"unicyclic n={n}"],
            f"n={n}: {size} unicyclic graphs, expected {UNICYCLIC_SEQUENCE[n - 3]}",
        )
        for code, graph in generate_with_codes(UNICYCLIC, n):
            tally.expect(
                UNICYCLIC.contains(graph), [code], f"{code} is not unicyclic"
            )
    return tally.result()


@claim("THM-3.4", "unicyclic: N(G) >= (n^2 + 3n - 4) / 2, equality iff G_{3,n-3}")
async def check_unicyclic_minimum(context: ClaimContext) -> ClaimResult:
    tally = Tally("THM-3.4", {"class": "unicyclic", "n": [3, context.caps.unicyclic]})
    if context.caps.unicyclic < 3:
        return skipped("THM-3.4", tally.parameters, "unicyclic cap below 3")
    for n in range(3, context.caps.unicyclic + 1):
        report = await context.scanner.scan(UNICYCLIC, n, TOTAL)
        compare_value(tally, report, Sense.MIN, BoundSpec.of("min_total_unicyclic", n))
        compare_extremizers(tally, report, UNICYCLIC, TOTAL, Sense.MIN)
    return tally.result()


@claim("THM-3.5", "unicyclic: N(G) <= n + 2^(n-1), equality iff Q_n for n > 5")
async def check_unicyclic_maximum(context: ClaimContext) -> ClaimResult:
    tally = Tally("THM-3.5", {"class": "unicyclic", "n": [3, context.caps.unicyclic]})
    if context.caps.unicyclic < 3:
        return skipped("THM-3.5", tally.parameters, "unicyclic cap below 3")
    for n in range(3, context.caps.unicyclic + 1):
        report = await context.scanner.scan(UNICYCLIC, n, TOTAL)
        compare_value(tally, report, Sense.MAX, BoundSpec.of("max_total_unicyclic", n))
        compare_extremizers(tally, report, UNICYCLIC, TOTAL, Sense.MAX)
    return tally.result()


def _is_center(graph_degree: int, n: int) -> bool:
    return graph_degree == n - 1


@claim(
    "LEM-3.3",
    "rooted trees: N(T)_r >= n, equality iff T is a path rooted at an end",
)
async def check_rooted_minimum(context: ClaimContext) -> ClaimResult:
    tally = Tally("LEM-3.3", {"class": "tree", "n": [1, context.caps.rooted]})
    for n in range(1, context.caps.rooted + 1):
        lower = bound_value(BoundSpec.of("min_rooted_subtrees", n))
        for code, tree in generate_with_codes(TREE, n):
            is_path = max(tree.degrees()) <= 2
            for root in range(n):
                containing = count_containing(tree, root)
                tally.expect(
                    containing == rooted_subtree_count(tree, root),
                    [code],
                    f"{code} root {root}: product count disagrees with {containing}",
                )
                tally.expect(
                    containing >= lower
                    and (containing == lower) == (is_path and tree.degree(root) <= 1),
                    [code],
                    f"{code} root {root}: {containing} subtrees, bound {lower}",
                )
    return tally.result()


@claim("PROP-3.6", "rooted trees: N(T)_r <= 2^(n-1), equality iff star rooted at its center")
async def check_rooted_maximum(context: ClaimContext) -> ClaimResult:
    tally = Tally("PROP-3.6", {"class": "tree", "n": [1, context.caps.rooted]})
    for n in range(1, context.caps.rooted + 1):
        upper = bound_value(BoundSpec.of("max_rooted_subtrees", n))
        for code, tree in generate_with_codes(TREE, n):
            for root in range(n):
                containing = rooted_subtree_count(tree, root)
                tally.expect(
                    containing <= upper
                    and (containing == upper) == _is_center(tree.degree(root), n),
                    [code],
                    f"{code} root {root}: {containing} subtrees, bound {upper}",
                )
    return tally.result()


@claim(
    "PROP-3.8",
    "rooted trees: N(T)_{r,v} <= 2^(n-2) for a leaf v, equality iff star center root",
)
async def check_rooted_leaf_maximum(context: ClaimContext) -> ClaimResult:
    tally = Tally("PROP-3.8", {"class": "tree", "n": [2, context.caps.rooted]})
    if context.caps.rooted < 2:
        return skipped("PROP-3.8", tally.parameters, "rooted cap below 2")
    for n in range(2, context.caps.rooted + 1):
        upper = bound_value(BoundSpec.of("max_rooted_leaf_subtrees", n))
        for code, tree in generate_with_codes(TREE, n):
            for root in range(n):
                for leaf in tree.leaves():
                    if leaf == root:
                        continue
                    pair = count_containing_pair(tree, root, leaf)
                    tally.expect(
                        pair <= upper
                        and (pair == upper) == _is_center(tree.degree(root), n),
                        [code],
                        f"{code} root {root} leaf {leaf}: {pair} subtrees, "
                        f"bound {upper}",
                    )
    return tally.result()


def _r_range(caps: Caps) -> List[int]:
    return list(range(2, caps.r_components_max_r + 1))


async def _check_components(
    context: ClaimContext, claim_id: str, sense: Sense
) -> ClaimResult:
    caps = context.caps
    tally = Tally(
        claim_id,
        {"n": [2, caps.r_components_order], "r": [2, caps.r_components_max_r]},
    )
    if caps.r_components_order < 2 or caps.r_components_max_r < 2:
        return skipped(claim_id, tally.parameters, "r components caps below 2")
    bound = "min_total_r_components" if sense == Sense.MIN else "max_total_r_components"
    for n in range(2, caps.r_components_order + 1):
        for r in _r_range(caps):
            if r > n:
                continue
            graph_class = r_components(r)
            report = await context.scanner.scan(graph_class, n, TOTAL)
            compare_value(tally, report, sense, BoundSpec.of(bound, n, r=r))
            compare_extremizers(tally, report, graph_class, TOTAL, sense)
    return tally.result()


@claim("SEC-4-MIN", "r components: unique minimum at the near equal union of paths")
async def check_components_minimum(context: ClaimContext) -> ClaimResult:
    return await _check_components(context, "SEC-4-MIN", Sense.MIN)


@claim("SEC-4-MAX", "r components: unique maximum at (r-1) E_1 + K_(n-r+1)")
async def check_components_maximum(context: ClaimContext) -> ClaimResult:
    return await _check_components(context, "SEC-4-MAX", Sense.MAX)

