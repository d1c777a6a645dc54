"""Exception hierarchy shared by every module of the package."""


class DppasmError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class InvalidObject(DppasmError):
    """An object fails its structural validation.

    ``row`` and ``column`` are 1-based absolute coordinates of the first
    offending cell, when one exists.
    """

    def __init__(self, message, row=None, column=None):
        self.row = row
        self.column = column
        if row is not None:
            message = f"{message} at ({row}, {column})"
        super().__init__(message)


class RowNotWeaklyDecreasing(InvalidObject):
    pass


class ColumnNotStrictlyDecreasing(InvalidObject):
    pass


class RowTooLongForLargestPart(InvalidObject):
    pass


class RowTooShortForNextRow(InvalidObject):
    pass


class PartExceedsOrder(InvalidObject):
    pass


class PartNotPositive(InvalidObject):
    pass


class InvalidPartition(InvalidObject):
    pass


class MultiplicityTooHigh(InvalidObject):
    pass


class InvalidTriangle(InvalidObject):
    pass


class InvalidAsm(InvalidObject):
    pass


class InvalidPermutation(InvalidObject):
    pass


class HasSpecialParts(DppasmError):
    """A DPP with special parts was given to a map defined only without them."""


class AsmHasMinusOnes(DppasmError):
    """An ASM with -1 entries was given to a map defined only on permutations."""


class TriangleHasMinusOnes(DppasmError):
    """A monotone triangle contains a strict diagonal pair."""


class InternalInvariantViolation(AssertionError):
    """A mathematical guarantee failed; this always indicates a bug."""


class NonExactPolynomialDivision(InternalInvariantViolation):
    pass
