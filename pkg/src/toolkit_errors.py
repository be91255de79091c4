"""Exceptions shared by every toolkit module.

The CLI maps all of them to exit code 2 (usage / parse / parameter domain).
"""


class ToolkitError(Exception):
    """Base class for errors raised by the toolkit."""


class ParameterDomainError(ToolkitError, ValueError):
    """Parameters outside the admissible domain; the message names the bound."""


class WrongCaseError(ParameterDomainError):
    """A case constructor was called on an instance of another case."""


class GraphError(ToolkitError, ValueError):
    """Loops, parallel edges, unknown vertices or a disconnected search target."""


class EmptyGraphError(GraphError):
    pass


class LabelingError(ToolkitError, ValueError):
    """Malformed labeling: non-integer or non-positive labels, foreign vertices."""


class UnlabeledVertexError(LabelingError):
    pass


class DocumentError(ToolkitError, ValueError):
    """JSON parse or schema failure; the message starts with the offending field."""
