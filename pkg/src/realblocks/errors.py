"""Exception hierarchy shared by every module."""


class BlockError(Exception):
    """Base class; ``code`` is a stable machine-readable tag."""

    code = "BlockError"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details

    def as_dict(self) -> dict:
        out = {"error": self.code, "message": str(self)}
        out.update({k: v for k, v in self.details.items()})
        return out


class TreeError(BlockError):
    code = "TreeError"


class NotATree(TreeError):
    code = "NotATree"


class BadRotation(TreeError):
    code = "BadRotation"


class BadStem(TreeError):
    code = "BadStem"


class BadMultiplicity(TreeError):
    code = "BadMultiplicity"


class FormatError(TreeError):
    code = "FormatError"


class NotReflectionSymmetric(TreeError):
    code = "NotReflectionSymmetric"


class EdgeOnStem(BlockError):
    code = "EdgeOnStem"


class CaseMismatch(BlockError):
    code = "CaseMismatch"


class ProjectiveInput(BlockError):
    code = "ProjectiveInput"


class InvalidDescriptor(BlockError):
    code = "InvalidDescriptor"


class CountMismatch(BlockError):
    code = "CountMismatch"


class InternalCountMismatch(CountMismatch):
    code = "InternalCountMismatch"


class NeedsDistance(BlockError):
    code = "NeedsDistance"


class NotSelfDualPosition(BlockError):
    code = "NotSelfDualPosition"


class ParityMismatch(BlockError):
    code = "ParityMismatch"


class MissingAnchor(BlockError):
    code = "MissingAnchor"


class InconsistentAnchors(BlockError):
    code = "InconsistentAnchors"


class BadEpsilon(BlockError):
    code = "BadEpsilon"


class TableError(BlockError):
    code = "TableError"


class SizeSumMismatch(TableError):
    code = "SizeSumMismatch"


class BadSquareMap(TableError):
    code = "BadSquareMap"


class NoIdentityClass(TableError):
    code = "NoIdentityClass"


class NotLinear(TableError):
    code = "NotLinear"


class NumericallyUnstable(TableError):
    code = "NumericallyUnstable"


class DualityMismatch(UserWarning):
    """Warned (not raised) when conj(chi) != mu * chi."""
