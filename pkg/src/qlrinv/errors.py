"""Exception hierarchy.

Every error raised by the constructive algorithms derives from
:class:`TableauError`, so callers (the CLI in particular) can map whole
families onto exit codes without string matching.
"""


class TableauError(Exception):
    """Base class for all errors raised by this package."""


class InvariantViolation(TableauError):
    """An algorithmic invariant failed; the inputs were outside the map's domain."""


class NotACorner(InvariantViolation):
    """A slack row does not end in a removable corner when it is processed."""


class DominanceViolation(InvariantViolation):
    """A column cannot be literally prepended to a tableau."""


class InvalidTarget(InvariantViolation):
    """A target column length is incompatible with the column being expanded."""


class NegativeGap(InvariantViolation):
    """The explicit gap formula produced a negative gap length."""


class NonzeroSlack(InvariantViolation):
    """A null-slack shortcut was requested for a recording tableau with slack."""


class MalformedLRS(InvariantViolation):
    """An LR-Sundaram tableau could not be decomposed into vertical strips."""


class ShapeMismatch(TableauError):
    """Two tableaux that must share a boundary shape do not."""


class NotFound(TableauError):
    """A lookup in an audit table found no entry."""


class ParseError(TableauError):
    """A serialized tableau document could not be read."""
