"""Exception hierarchy shared by every module.

Domain errors derive from :class:`SymconfError`; the CLI maps them to exit
code 1.
"""


class SymconfError(Exception):
    """Base class for domain errors."""


class ParseError(SymconfError):
    pass


class UnknownSymbol(ParseError):
    pass


class TokenLength(ParseError):
    pass


class ValidationFailed(SymconfError):
    """Raised when a candidate block list breaks the configuration axioms.

    The full :class:`~symconf.core.ValidationReport` is kept on ``report``.
    """

    def __init__(self, report, message=None):
        self.report = report
        if message is None:
            rules = sorted({rule for rule, _ in report.violations})
            message = "invalid configuration: " + ", ".join(rules)
        super().__init__(message)


class PointCountMismatch(ValidationFailed):
    pass


class TooManyPoints(SymconfError):
    pass


class NotCubic(SymconfError):
    pass


class NotBipartite(SymconfError):
    pass


class GirthTooSmall(SymconfError):
    pass


class UnequalSides(SymconfError):
    pass


class InfeasiblePair(SymconfError):
    pass


class NoSuchSeed(SymconfError):
    pass


class NoTenCycle(SymconfError):
    pass


class BadCycle(SymconfError):
    pass


class PostconditionFailed(SymconfError):
    pass


class NoSuchConfiguration(SymconfError):
    pass


class NTooSmall(SymconfError):
    pass


class InvalidTriple(SymconfError):
    pass


class Disconnected(InvalidTriple):
    pass


class UnsupportedV(SymconfError):
    pass


class VTooSmall(SymconfError):
    pass
