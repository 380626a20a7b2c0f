"""Domain error hierarchy shared by all engines.

Every error carries enough context to name the offending element; the CLI
maps any PhysarumError to exit code 1 with a one-line diagnostic.
"""


class PhysarumError(Exception):
    """Base class for all domain errors raised by this package."""


# -- graph construction / validation -----------------------------------------

class DuplicateEdge(PhysarumError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge between {u!r} and {v!r}")
        self.u, self.v = u, v


class InvalidEdge(PhysarumError):
    """Non-positive length, self loop, or otherwise malformed edge."""


class Disconnected(PhysarumError):
    def __init__(self, vertex):
        super().__init__(f"graph is not connected: vertex {vertex!r} unreachable")
        self.vertex = vertex


class UnknownTerminal(PhysarumError):
    def __init__(self, vertex, reason="is not a vertex of the network"):
        super().__init__(f"terminal {vertex!r} {reason}")
        self.vertex = vertex


class UnbalancedFlow(PhysarumError):
    def __init__(self, inflow, outflow):
        super().__init__(f"total inflow {inflow} != total outflow {outflow}")
        self.inflow, self.outflow = inflow, outflow


# -- flow solve / adaptation --------------------------------------------------

class SingularSystem(PhysarumError):
    """Pressure system has no solution (zero-conductivity cut or solver failure)."""


class PruneDisconnectsTerminals(PhysarumError):
    def __init__(self, source):
        super().__init__(f"pruning separates source {source!r} from every sink")
        self.source = source


class EmptyNetwork(PhysarumError):
    """No edge survived pruning."""


# -- strategies ----------------------------------------------------------------

class TooFewTerminals(PhysarumError):
    def __init__(self, mode, count):
        super().__init__(f"strategy {mode} needs more terminals than {count}")
        self.mode, self.count = mode, count


class DisconnectedTerminals(PhysarumError):
    """Surviving subgraph fails to connect the full terminal set."""


# -- hex lattice / competition --------------------------------------------------

class OutOfGrid(PhysarumError):
    def __init__(self, coord):
        super().__init__(f"cell {coord} lies outside the grid")
        self.coord = coord


class EmptyFrontier(PhysarumError):
    def __init__(self, agent_id):
        super().__init__(f"agent {agent_id} is fully enclosed (no frontier)")
        self.agent_id = agent_id


class InvalidConfig(PhysarumError):
    """Simulation or run configuration violates its invariants."""


# -- parsing --------------------------------------------------------------------

class ParseError(PhysarumError):
    def __init__(self, message, line=None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line


class RaggedRows(ParseError):
    pass


class MultipleSources(ParseError):
    pass


class MultipleSinks(ParseError):
    pass


class MissingTerminal(ParseError):
    pass


class NoPath(PhysarumError):
    """Maze source and sink are not corridor-connected."""
