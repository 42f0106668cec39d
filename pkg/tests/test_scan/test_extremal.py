from typing import Any, List

import pytest

from cisgraph import ParameterRangeError, UnsupportedClassError
from cisgraph.atlas import TREE, UNICYCLIC, canonical_form, r_components
from cisgraph.formulas import Objective
from cisgraph.graphs import FamilySpec, construct, disjoint_union
from cisgraph.scan import ScanPool, ScanReport, Scanner, count_chunk, extremal_scan
from cisgraph.signals import on_scan_finished, on_scan_started
from tests.settings import TEST_JOBS


def code(family: str, *params: int) -> str:
    return canonical_form(construct(FamilySpec.of(family, *params)))


def without_elapsed(report: ScanReport) -> dict:
    return report.dict(exclude={"elapsed"})


@pytest.mark.asyncio
async def test_unicyclic_maximum_at_order_five():
    report = await extremal_scan(UNICYCLIC, 5, Objective.parse("total"))
    assert report.graphs_scanned == 5
    assert report.max_value == 21
    assert report.min_value == 18
    assert report.maximizers == sorted(
        {code("cycle", 5), code("banner", 5), code("q_graph", 5)}
    )
    assert report.minimizers == [code("tadpole", 3, 2)]
    assert report.objective == "total"
    assert report.graph_class == "unicyclic"


@pytest.mark.asyncio
async def test_unicyclic_minimum_at_order_seven():
    report = await extremal_scan(UNICYCLIC, 7, Objective.parse("total_min"))
    assert report.min_value == 33
    assert report.minimizers == [code("tadpole", 3, 4)]
    assert report.max_value == 7 + 2 ** 6
    assert report.maximizers == [code("q_graph", 7)]


@pytest.mark.asyncio
async def test_components_maximum():
    report = await extremal_scan(r_components(2), 5, Objective.parse("total"))
    complete = construct(FamilySpec.of("complete", 4))
    single = construct(FamilySpec.of("edgeless", 1))
    assert report.max_value == 16
    assert report.maximizers == [canonical_form(disjoint_union([complete, single]))]


@pytest.mark.asyncio
async def test_order_objectives_on_trees():
    report = await extremal_scan(TREE, 6, Objective.parse("order_3"))
    assert report.min_value == 4
    assert report.minimizers == [code("path", 6)]
    assert report.max_value == 10
    assert report.maximizers == [code("star", 6)]


@pytest.mark.asyncio
async def test_worker_processes_give_identical_reports():
    in_process = await extremal_scan(TREE, 9, Objective.parse("total"), jobs=1)
    pooled = await extremal_scan(TREE, 9, Objective.parse("total"), jobs=TEST_JOBS)
    assert without_elapsed(in_process) == without_elapsed(pooled)


@pytest.mark.asyncio
async def test_pool_keeps_input_order():
    graphs = [construct(FamilySpec.of("path", n)) for n in range(1, 12)]
    async with ScanPool(jobs=TEST_JOBS, chunk_size=3) as pool:
        profiles = await pool.profiles(graphs)
    assert [profile.total for profile in profiles] == [
        n * (n + 1) // 2 for n in range(1, 12)
    ]
    assert count_chunk(graphs[:2]) == [[1], [2, 1]]


def test_pool_validates_its_size():
    with pytest.raises(ParameterRangeError):
        ScanPool(jobs=0)
    with pytest.raises(ParameterRangeError):
        ScanPool(chunk_size=0)


@pytest.mark.asyncio
async def test_scanner_caches_profiles_and_sends_signals():
    started: List[Any] = []
    finished: List[ScanReport] = []
    async with ScanPool() as pool:
        scanner = Scanner(pool)

        @on_scan_started(scanner)
        async def before_scan(sender: Scanner, **kwargs: Any) -> None:
            started.append((kwargs["graph_class"].label, kwargs["order"]))

        @on_scan_finished(scanner)
        async def after_scan(sender: Scanner, report: ScanReport, **kwargs: Any) -> None:
            assert sender is scanner
            finished.append(report)

        first = await scanner.scanned_graphs(TREE, 7)
        assert await scanner.scanned_graphs(TREE, 7) is first
        await scanner.scan(TREE, 7, Objective.parse("total"))
        await scanner.scan(TREE, 7, Objective.parse("order_2"))
    assert started == [("tree", 7), ("tree", 7)]
    assert [report.objective for report in finished] == ["total", "order_2"]
    assert finished[1].min_value == finished[1].max_value == 6


@pytest.mark.asyncio
async def test_scan_errors():
    with pytest.raises(ParameterRangeError):
        await extremal_scan(TREE, 4, Objective.parse("order_5"))
    with pytest.raises(UnsupportedClassError):
        await extremal_scan(TREE, 12, Objective.parse("total"))
    with pytest.raises(ParameterRangeError):
        await extremal_scan(r_components(4), 3, Objective.parse("total"))
    with pytest.raises(ParameterRangeError):
        await extremal_scan(UNICYCLIC, 2, Objective.parse("total"))
