"""Exception types shared across the library."""


class RamcountError(Exception):
    """Base class for all library-specific errors."""


class NonPrimeError(RamcountError):
    """A field characteristic was not a prime number."""


class DegreeTooLargeError(RamcountError):
    """Requested field extension degree exceeds the supported bound."""


class MixedFieldsError(RamcountError):
    """Operands belong to different fields."""


class NotASubfieldError(RamcountError):
    """No embedding exists between the given fields."""


class LengthTooLargeError(RamcountError):
    """Requested Witt vector length exceeds the supported bound."""


class MixedRingsError(RamcountError):
    """Operands belong to different Witt rings."""


class GroupTooLargeError(RamcountError):
    """Group order exceeds the supported bound."""


class NotASubgroupError(RamcountError):
    """The provided element set is not a subgroup of the ambient group."""


class BudgetExceededError(RamcountError):
    """An exhaustive enumeration would exceed the configured budget."""


class NotTotallyRamifiedError(RamcountError):
    """The reduction pair does not have full inertia image."""


class UnsupportedShapeError(RamcountError):
    """The operation is only defined for elementary abelian shapes."""


class TruncationTooLargeError(RamcountError):
    """Requested series truncation exceeds the supported bound."""


class OddPrimeRequiredError(RamcountError):
    """The construction requires an odd prime."""


class InternalInconsistencyError(RamcountError):
    """Two computations of the same quantity disagreed; surfaced, not patched."""
