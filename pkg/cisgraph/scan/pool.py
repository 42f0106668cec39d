import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import Any, List, Optional, Sequence

from cisgraph.counting import CountProfile, count_profile
from cisgraph.exceptions import ParameterRangeError
from cisgraph.graphs import Graph

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_SIZE = 64


def count_chunk(graphs: Sequence[Graph]) -> List[List[int]]:
    """
    Worker entry point, returns the per order counts of every graph in order.
    """
    return [count_profile(graph).per_order for graph in graphs]


class ScanPool:
    """
    Async context manager owning an optional process pool.

    ``jobs == 1`` counts in process, otherwise chunks of the catalog are sent
    to ``jobs`` worker processes. Results always come back in input order.
    """

    def __init__(self, jobs: int = 1, chunk_size: int = DEFAULT_CHUNK_SIZE) -> None:
        if jobs < 1:
            raise ParameterRangeError(f"jobs has to be >= 1, got {jobs}")
        if chunk_size < 1:
            raise ParameterRangeError(f"chunk_size has to be >= 1, got {chunk_size}")
        self.jobs = jobs
        self.chunk_size = chunk_size
        self._executor: Optional[Executor] = None

    async def __aenter__(self) -> "ScanPool":
        if self.jobs > 1:
            logger.debug("starting %d worker processes", self.jobs)
            self._executor = ProcessPoolExecutor(max_workers=self.jobs)
        return self

    async def __aexit__(self, *args: Any) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    async def profiles(self, graphs: Sequence[Graph]) -> List[CountProfile]:
        """
        Counts profiles of all graphs.

        :param graphs: graphs to count
        :type graphs: Sequence[Graph]
        :return: profiles in the order of graphs
        :rtype: List[CountProfile]
        """
        chunks = [
            list(graphs[start : start + self.chunk_size])
            for start in range(0, len(graphs), self.chunk_size)
        ]
        if self._executor is None:
            counted = [count_chunk(chunk) for chunk in chunks]
        else:
            loop = asyncio.get_running_loop()
            counted = await asyncio.gather(
                *[
                    loop.run_in_executor(self._executor, count_chunk, chunk)
                    for chunk in chunks
                ]
            )
        return [
            CountProfile(order=graph.order, per_order=per_order)
            for graph, per_order in zip(
                graphs, (row for chunk in counted for row in chunk)
            )
        ]
