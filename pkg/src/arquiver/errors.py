"""Exception taxonomy shared by all modules.

The CLI maps these onto exit codes: parse/validation problems exit with 2,
violated domain preconditions with 3, and internal invariant breaches with 4.
"""


class ArquiverError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ArquiverError):
    """Malformed input: bad syntax, bad labels, bad documents.  Exit code 2."""


class PreconditionError(ArquiverError):
    """Structurally valid input outside an operation's domain.  Exit code 3."""


class InternalInvariantError(ArquiverError):
    """A consistency check that should never fail did fail.  Exit code 4."""


class HereditaryCase(PreconditionError):
    """Both cycle counts are zero; that derived category is not handled here."""


class InvalidParameters(PreconditionError):
    """Parameter quadruple violates r1+r2 > 0 or s1+s2 > 0."""


class DuplicateLabel(ValidationError):
    """A user label was assigned twice, or collides with a canonical name."""


class UnknownEntity(ValidationError):
    """A label map or token refers to a vertex/arrow that does not exist."""


class StringSyntaxError(ValidationError):
    """A string expression does not follow the token grammar."""


class NotAString(ValidationError):
    """Tokens parse individually but do not form a valid homotopy string."""


class EmptyString(PreconditionError):
    """Operation undefined for the empty homotopy string."""


class IndexOutOfRange(PreconditionError):
    """Prefix or letter index outside [0, L]."""


class BothEmpty(InternalInvariantError):
    """Both mesh successors vanished; no homotopy string behaves this way."""


class NotAnEdgeComponent(PreconditionError):
    """Component id has no edge (central or special or band component)."""


class NoSuchComponent(PreconditionError):
    """Requested component family does not exist for these parameters."""


class NoWalkStep(PreconditionError):
    """The requested walk is not defined at this vertex."""
