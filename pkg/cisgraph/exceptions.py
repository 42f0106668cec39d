"""
Gathers all exceptions thrown by cisgraph.

Every exception carries a stable ``code`` (printed by the command line frontend
as ``error[CODE]: message``) and the ``exit_code`` the frontend returns for it.
"""


class CisGraphException(Exception):
    """
        Base cisgraph Exception
    """

    code = "E-CISGRAPH"
    exit_code = 3


class GraphDefinitionError(CisGraphException):
    """
        Raised for adjacency data that does not describe a simple graph:

        * neighbor ids outside of 0..order-1
        * a vertex listed as its own neighbor (loops)
        * u listed as neighbor of v but not the other way round
    """

    code = "E-GRAPH"


class Graph6FormatError(CisGraphException):
    """
        Raised when a graph6 string cannot be decoded:

        * malformed or unsupported size header
        * characters outside of the printable 63..126 range
        * truncated or overlong bit body, non zero padding bits
    """

    code = "E-GRAPH6"
    exit_code = 2


class EdgeListFormatError(CisGraphException):
    """
        Raised when an edge list text of the form ``n; u-v, u-v`` is malformed.
    """

    code = "E-EDGELIST"
    exit_code = 2


class ParameterRangeError(CisGraphException):
    """
        Raised for parameters outside of the documented ranges:

        * family parameters (cycle with n < 3, more removed edges than n/2 etc.)
        * bound parameters (k outside 1..n, r outside 1..n etc.)
        * vertex ids outside of the graph, repeated anchor vertices
    """

    code = "E-RANGE"


class CapacityExceededError(CisGraphException):
    """
        Raised when a graph would exceed the supported order, either the global
        MAX_ORDER or the canonical form limit.
    """

    code = "E-CAPACITY"


class EmptyVertexSetError(CisGraphException):
    """
        Raised when an induced subgraph of the empty vertex set is requested,
        the empty graph is not a graph here.
    """

    code = "E-EMPTY"


class NotATreeError(CisGraphException):
    """
        Raised when an operation defined only on trees receives another graph.
    """

    code = "E-NOT-TREE"


class DisconnectedGraphError(CisGraphException):
    """
        Raised when an operation that requires a connected graph
        receives a disconnected one.
    """

    code = "E-DISCONNECTED"


class UnsupportedClassError(CisGraphException):
    """
        Raised when a graph class is requested for an order above its
        generation cap.
    """

    code = "E-CAP"


class UncharacterizedError(CisGraphException):
    """
        Raised when no extremizer characterization is known for a
        class / objective / order combination.
    """

    code = "E-UNCHARACTERIZED"


class NoClosedFormError(CisGraphException):
    """
        Raised when a closed form total is requested for a family without one.
    """

    code = "E-NO-FORMULA"


class SignalDefinitionError(CisGraphException):
    """
        Raised when non callable receiver is passed as signal callback.
    """

    code = "E-SIGNAL"


class ArgumentsError(CisGraphException):
    """
        Raised by the command line frontend for malformed or conflicting flags.
    """

    code = "E-ARGS"
    exit_code = 2
