"""Exception types shared across the package."""


class GGError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidSpecialPartition(GGError):
    """An overline sits on a value that is not the largest odd part."""


class MissingEntryError(GGError):
    """A surgery referenced a (value, mark) pair that the marking does not contain.

    Raised whenever a map step cannot find the part it is supposed to move;
    this is the well-definedness failure mode of the whole construction, so it
    carries enough context to reconstruct the offending step.
    """

    def __init__(self, message, partition=None):
        super().__init__(message)
        self.partition = partition


class MembershipError(GGError):
    """An operation was applied to a partition outside its domain family."""


class ClassificationError(GGError):
    """Zero or multiple subset clauses matched a confirmed family member,
    or a group-typing pass left an index untyped."""


class UniquenessError(GGError):
    """A scan that must produce at most one decomposition produced two."""


class DivergentProductError(GGError):
    """An infinite product whose exponents never leave the truncation window."""
