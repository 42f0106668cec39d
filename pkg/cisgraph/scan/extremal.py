import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from cisgraph.atlas import CanonicalCode, GraphClass, generate_with_codes
from cisgraph.counting import CountProfile
from cisgraph.exceptions import ParameterRangeError
from cisgraph.formulas import Objective
from cisgraph.graphs import Graph
from cisgraph.scan.pool import ScanPool
from cisgraph.scan.reports import ScanReport
from cisgraph.signals import SignalEmitter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScannedGraph:
    code: CanonicalCode
    graph: Graph
    profile: CountProfile


class Scanner:
    """
    Runs extremal scans over generated catalogs.

    Profiles of a (class, order) catalog are counted once and cached, so per
    order scans of one catalog share a single count per graph. Emits
    ``scan_started`` and ``scan_finished`` on its ``signals``.
    """

    def __init__(self, pool: ScanPool) -> None:
        self.pool = pool
        self.signals = SignalEmitter()
        self._profiles: Dict[Tuple[str, int], List[ScannedGraph]] = {}

    async def scanned_graphs(
        self, graph_class: GraphClass, order: int
    ) -> List[ScannedGraph]:
        """
        Generates the catalog and counts every graph in it.

        :raises UnsupportedClassError: for orders above the class cap
        :param graph_class: class to scan
        :type graph_class: GraphClass
        :param order: number of vertices
        :type order: int
        :return: catalog entries with their profiles, sorted by code
        :rtype: List[ScannedGraph]
        """
        key = (graph_class.label, order)
        if key not in self._profiles:
            entries = list(generate_with_codes(graph_class, order))
            profiles = await self.pool.profiles([graph for _, graph in entries])
            self._profiles[key] = [
                ScannedGraph(code=code, graph=graph, profile=profile)
                for (code, graph), profile in zip(entries, profiles)
            ]
            logger.debug(
                "counted %d %s graphs of order %d", len(entries), graph_class, order
            )
        return self._profiles[key]

    async def scan(
        self, graph_class: GraphClass, order: int, objective: Objective
    ) -> ScanReport:
        """
        Finds the exact minimum and maximum of the objective over the class,
        with all graphs attaining them.

        :raises UnsupportedClassError: for orders above the class cap
        :raises ParameterRangeError: for empty catalogs or k > n
        :param graph_class: class to scan
        :type graph_class: GraphClass
        :param order: number of vertices
        :type order: int
        :param objective: total or N_k
        :type objective: Objective
        :return: report of the scan
        :rtype: ScanReport
        """
        graph_class.check_order(order)
        objective.check_order(order)
        await self.signals.scan_started.send(
            sender=self, graph_class=graph_class, order=order, objective=objective
        )
        started = time.perf_counter()
        scanned = await self.scanned_graphs(graph_class, order)
        if not scanned:
            raise ParameterRangeError(
                f"There are no {graph_class.label} graphs of order {order}"
            )
        values = [(objective.value_of(entry.profile), entry.code) for entry in scanned]
        low = min(value for value, _ in values)
        high = max(value for value, _ in values)
        report = ScanReport(
            graph_class=graph_class.label,
            order=order,
            objective=objective.label,
            min_value=low,
            max_value=high,
            minimizers=sorted(code for value, code in values if value == low),
            maximizers=sorted(code for value, code in values if value == high),
            graphs_scanned=len(scanned),
            elapsed=time.perf_counter() - started,
        )
        logger.info(
            "scanned %d %s graphs of order %d for %s: min %d, max %d",
            report.graphs_scanned,
            report.graph_class,
            order,
            report.objective,
            low,
            high,
        )
        await self.signals.scan_finished.send(sender=self, report=report)
        return report


async def extremal_scan(
    graph_class: GraphClass,
    order: int,
    objective: Objective,
    jobs: int = 1,
    scanner: Optional[Scanner] = None,
) -> ScanReport:
    """
    Convenience wrapper running a single scan with its own pool unless a
    scanner is given.

    :param graph_class: class to scan
    :type graph_class: GraphClass
    :param order: number of vertices
    :type order: int
    :param objective: total or N_k
    :type objective: Objective
    :param jobs: number of worker processes
    :type jobs: int
    :param scanner: optional scanner reusing its pool and profile cache
    :type scanner: Optional[Scanner]
    :return: report of the scan
    :rtype: ScanReport
    """
    if scanner is not None:
        return await scanner.scan(graph_class, order, objective)
    async with ScanPool(jobs=jobs) as pool:
        return await Scanner(pool).scan(graph_class, order, objective)
