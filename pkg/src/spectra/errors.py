"""Exception taxonomy shared across the engine.

Grouping rule: DomainError covers bad arguments to otherwise total operations
(callers can always avoid them); precondition failures of the decision
procedures get their own classes because the CLI maps them to a distinct exit
code.
"""

from __future__ import annotations


class SpectraError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SpectraError):
    """An argument lies outside the operation's domain."""


class NoPredecessorError(DomainError):
    """Predecessor requested for zero or a limit ordinal."""


class NotLimitError(DomainError):
    """Fundamental sequence requested for a non-limit ordinal."""


class SubtractionError(DomainError):
    """left_subtract(a, g) called with g > a."""


class NotCountableError(DomainError):
    """A countable set was required (diagonal realization, iso supply)."""


class EmptySetError(DomainError):
    """A nonempty set was required."""


class CircleMeetsSetError(DomainError):
    """A split radius was supplied whose circle touches the set."""


class NotStageInvertibleError(SpectraError):
    """Decomposition requested for a model that fails the stage test.

    Carries the model kind and stage so the CLI can echo them; mapped to
    exit code 3.
    """


class SearchExhaustedError(SpectraError):
    """A bounded geometric search ran out of refinement budget.

    Raised instead of returning a wrong answer; does not occur for the
    separated block geometries the engine itself produces.
    """


class ParseError(SpectraError):
    """Syntax error in the expression DSL, with position information."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col
        self.bare_message = message


class ModelValidationError(SpectraError):
    """A parsed expression is well-formed but violates a model invariant."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
