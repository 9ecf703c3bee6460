class TsirelsonError(Exception):
    """Base class for errors raised by the tsirelson app."""


class InputError(TsirelsonError, ValueError):
    """Malformed scalar, polynomial, JSON document or array shape."""


class SolverError(TsirelsonError, RuntimeError):
    """A numeric solver broke down or hit its iteration cap."""
