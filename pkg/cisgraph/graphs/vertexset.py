from dataclasses import dataclass
from typing import Iterable, Iterator, List, Union

from cisgraph.exceptions import EmptyVertexSetError


def popcount(mask: int) -> int:
    """
    Counts members of a bitmask.

    :param mask: bitmask of vertex ids
    :type mask: int
    :return: number of set bits
    :rtype: int
    """
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """
    Iterates vertex ids of a bitmask in ascending order.

    :param mask: bitmask of vertex ids
    :type mask: int
    :return: generator of vertex ids
    :rtype: Iterator[int]
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for vertex in vertices:
        mask |= 1 << vertex
    return mask


@dataclass(frozen=True, order=True)
class VertexSet:
    """
    Immutable set of vertex ids backed by a single integer bitmask,
    bit ``v`` set means vertex ``v`` is a member.

    Ordering of VertexSets is the ordering of their masks.
    """

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        """
        Builds a VertexSet from vertex ids.

        :param vertices: vertex ids, duplicates are ignored
        :type vertices: Iterable[int]
        :return: set with given members
        :rtype: VertexSet
        """
        return cls(mask_of(vertices))

    @classmethod
    def full(cls, order: int) -> "VertexSet":
        return cls((1 << order) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, vertex: object) -> bool:
        return isinstance(vertex, int) and vertex >= 0 and bool(self.mask >> vertex & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def union(self, other: "VertexSet") -> "VertexSet":
        return self | other

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return self & other

    def difference(self, other: "VertexSet") -> "VertexSet":
        return self - other

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    @property
    def min(self) -> int:  # noqa: A003
        """
        Lowest member of the set.

        :raises EmptyVertexSetError: if set is empty
        :return: lowest vertex id
        :rtype: int
        """
        if not self.mask:
            raise EmptyVertexSetError("Lowest member of an empty VertexSet")
        return (self.mask & -self.mask).bit_length() - 1

    def to_list(self) -> List[int]:
        return list(iter_bits(self.mask))

    def __str__(self) -> str:
        return ",".join(str(vertex) for vertex in self)

    def __repr__(self) -> str:
        return f"VertexSet({{{str(self)}}})"


VertexSetLike = Union[VertexSet, int, Iterable[int]]


def as_mask(vertices: VertexSetLike) -> int:
    """
    Normalizes the accepted vertex set representations to a bitmask.

    :param vertices: VertexSet, raw bitmask or iterable of vertex ids
    :type vertices: VertexSetLike
    :return: bitmask
    :rtype: int
    """
    if isinstance(vertices, VertexSet):
        return vertices.mask
    if isinstance(vertices, int):
        return vertices
    return mask_of(vertices)
