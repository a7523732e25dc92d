class CritlabError(Exception):
    """Base exception for all critlab errors"""

    def __init__(self, message: str = ""):
        super().__init__(message)
        self.message = message


class Graph6ParseError(CritlabError):
    """Raised when a graph6 line cannot be decoded"""


class Graph6HeaderError(Graph6ParseError):
    """The size header is empty, malformed or uses characters outside 63..126"""


class Graph6TruncatedError(Graph6ParseError):
    """The adjacency body is shorter than the header requires"""


class Graph6SizeError(Graph6ParseError):
    """The encoded vertex count exceeds the supported maximum"""


class Graph6BodyError(Graph6ParseError):
    """The adjacency body has invalid characters or trailing bytes"""


class EdgeListParseError(CritlabError):
    """Raised when an edge-list document is malformed"""


class ContractViolation(CritlabError):
    """Raised when an operation receives arguments outside its contract"""


class PreconditionViolation(CritlabError):
    """Raised when the mathematical precondition of an operation does not hold"""


class BudgetExceeded(CritlabError):
    """Raised when an exhaustive walk would exceed its node budget"""


class UnsupportedRange(CritlabError):
    """Raised when internal enumeration is asked for an unsupported order"""


class ConfigError(CritlabError):
    """Raised when configuration values violate their invariants"""


class InvariantViolation(CritlabError):
    """Raised when a constructed value breaks a structural invariant"""
