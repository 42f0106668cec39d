from typing import List, Tuple

from cisgraph.exceptions import NotATreeError, ParameterRangeError
from cisgraph.graphs import Graph, iter_bits


def _rooted_order(tree: Graph, root: int) -> Tuple[List[int], List[int]]:
    """
    Orders tree vertices so that every child comes after its parent.

    :return: visiting order and parent of every vertex (-1 for the root)
    :rtype: Tuple[List[int], List[int]]
    """
    parent = [-1] * tree.order
    order = [root]
    stack = [root]
    while stack:
        vertex = stack.pop()
        for child in iter_bits(tree.adjacency[vertex]):
            if child != parent[vertex]:
                parent[child] = vertex
                order.append(child)
                stack.append(child)
    return order, parent


def _subtree_products(tree: Graph, root: int) -> List[int]:
    """
    Runs the bottom up product f(v) = prod over children (1 + f(child)), the
    number of subtrees whose top vertex is v.
    """
    if not tree.is_tree():
        raise NotATreeError(f"Expected a tree, got {tree!r}")
    if not 0 <= root < tree.order:
        raise ParameterRangeError(f"Root {root} not in 0..{tree.order - 1}")
    order, parent = _rooted_order(tree, root)
    products = [1] * tree.order
    for vertex in reversed(order):
        if parent[vertex] >= 0:
            products[parent[vertex]] *= 1 + products[vertex]
    return products


def rooted_subtree_count(tree: Graph, root: int) -> int:
    """
    Counts subtrees of a tree that contain the root, in time linear in n.

    :raises NotATreeError: if the graph is not a tree
    :raises ParameterRangeError: for a root outside of the tree
    :param tree: tree to count in
    :type tree: Graph
    :param root: vertex every counted subtree contains
    :type root: int
    :return: number of subtrees containing root
    :rtype: int
    """
    return _subtree_products(tree, root)[root]


def subtree_count(tree: Graph) -> int:
    """
    Counts all subtrees of a tree, every subtree is counted once at its top
    vertex of a tree rooted at 0.

    :raises NotATreeError: if the graph is not a tree
    :param tree: tree to count in
    :type tree: Graph
    :return: total number of subtrees
    :rtype: int
    """
    return sum(_subtree_products(tree, 0))
