"""Exception hierarchy.  Everything the CLI maps to exit status 1 derives from LegrackError."""


class LegrackError(Exception):
    pass


class MalformedTableError(LegrackError, ValueError):
    """Operation table has the wrong shape or out-of-range entries."""


class RackAxiomError(LegrackError, ValueError):
    """A well-formed table that fails a rack axiom."""


class GroupError(LegrackError, ValueError):
    pass


class OrderBoundError(LegrackError, ValueError):
    pass


class PermutationError(LegrackError, ValueError):
    pass


class TSRackError(LegrackError, ValueError):
    pass


class DiagramSyntaxError(LegrackError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class DiagramError(LegrackError, ValueError):
    def __init__(self, message, event=None):
        if event is not None:
            message = f"{message} (event {event})"
        super().__init__(message)
        self.event = event


class EquationError(LegrackError, ValueError):
    pass
