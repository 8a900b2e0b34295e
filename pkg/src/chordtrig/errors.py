"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the operation's domain."""


class DegenerateArcError(DomainError):
    """Both endpoints of an arc or chord coincide (or the arc is too small
    to be split into representable ordinates)."""


class CapacityError(DomainError):
    """A size parameter exceeds what the implementation can materialize."""


class ConvergenceError(RuntimeError):
    """The iteration cap was reached before the requested tolerance.

    Carries the last bracket (``enclosure``) and, where available, the full
    iteration report so callers can inspect how far the run got.
    """

    def __init__(self, message, enclosure=None, report=None):
        super().__init__(message)
        self.enclosure = enclosure
        self.report = report
