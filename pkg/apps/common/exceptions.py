"""
Error hierarchy shared by every app.

``InputError`` marks bad or inconsistent input (command exit code 2); ``InfeasibleError`` marks
well-formed requests that have no solution on the given instance (command exit code 3).
"""


class StableError(Exception):
    """Base class for all domain errors."""


class InputError(StableError, ValueError):
    pass


class InfeasibleError(StableError):
    pass


# --- gf2 ---
class DimensionMismatch(InputError):
    pass


class Singular(InputError):
    pass


class InsufficientRank(InputError):
    pass


# --- stab ---
class InvalidTableau(InputError):
    pass


# --- graphs ---
class NodeOutOfRange(InputError):
    pass


class PathInvalid(InputError):
    pass


class LinkAlreadyPresent(InputError):
    pass


class LinkMissing(InputError):
    pass


class Disconnected(InputError):
    pass


# --- codes ---
class InvalidDistance(InputError):
    pass


class InconsistentLattice(InputError):
    pass


class TooSmall(InfeasibleError):
    pass


class NoValidAssignment(InfeasibleError):
    pass


class NoValidLayout(InfeasibleError):
    pass


# --- noise ---
class OutOfRange(InputError):
    pass


# --- le ---
class InvalidState(InputError):
    pass


class InvalidWitness(InputError):
    pass


class TooLarge(InputError):
    pass


class InsufficientData(InputError):
    pass


class NonpositiveValues(InputError):
    pass
