"""Exception hierarchy shared by the planners and the CLI."""


class PlannerError(Exception):
    """Base class for all planner errors."""


class InvalidInputError(PlannerError, ValueError):
    """Malformed or geometrically invalid input."""


class DomainError(PlannerError, ValueError):
    """Argument outside the domain where a formula is defined."""


class PreconditionError(PlannerError, ValueError):
    """Input is valid but not accepted by the chosen algorithm."""


class CapacityError(PlannerError):
    """Instance exceeds the size an exact routine is allowed to handle."""


class InternalInvariantError(PlannerError, RuntimeError):
    """An invariant guaranteed by upstream construction was violated."""
