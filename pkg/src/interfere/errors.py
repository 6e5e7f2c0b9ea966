"""Exception hierarchy shared across the toolkit."""


class InterfereError(Exception):
    """Base class for all toolkit-specific errors."""


class GraphFormatError(InterfereError):
    """Malformed external input: edge-list text, graph6 line, family spec, labeling JSON."""


class CapExceededError(InterfereError):
    """An exact-enumeration routine was asked to exceed its hard size cap."""


class SearchBudgetExceeded(InterfereError):
    """The backtracking search ran out of its node budget before reaching a verdict."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


class NoDominatingSetError(InterfereError):
    """The requested index is undefined: some target set fails to dominate the graph."""


class HypothesisViolation(InterfereError):
    """Inputs violate the structural hypotheses a criterion needs to be meaningful."""
