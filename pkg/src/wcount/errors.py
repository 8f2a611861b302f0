"""Exception types shared across the package."""


class WcountError(Exception):
    """Base class for all package-specific errors."""


class CapExceeded(WcountError):
    """Path or scenario enumeration would exceed the configured cap."""


class ExactUnavailable(WcountError):
    """The oracle carries no exact weight map."""


class MissingBound(WcountError):
    """An operation needs a size or magnitude bound that was not supplied."""


class NoUniqueRational(WcountError):
    """The interval's minimal-denominator rational does not fit the bit budget."""


class PromiseViolated(WcountError):
    """A caller-asserted promise failed during evaluation."""


class BoundViolated(WcountError):
    """A weight fell outside the bound the caller promised."""


class TagMismatch(WcountError):
    """A problem with the wrong range tag was passed; retag explicitly if intended."""


class DomainViolation(WcountError):
    """Argument lies outside the certified domain."""


class EmptyList(WcountError):
    """A combinator received no operands."""


class ZeroEvidence(WcountError):
    """Conditioning event has probability zero."""


class MalformedFormula(WcountError):
    """Propositional formula failed to parse or validate."""


class ParseError(WcountError):
    """Input file is syntactically invalid."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class InvariantViolation(WcountError):
    """A structural invariant failed during validation."""
