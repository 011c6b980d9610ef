"""Exception types.

Every error carries a short machine-readable ``code`` (e.g.
``window-out-of-range``) which the command-line front end prints verbatim.
"""


class SSAError(ValueError):
    code = "ssa-error"

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message

    def __str__(self):
        return f"{self.code}: {self.message}" if self.message else self.code


class WindowOutOfRange(SSAError):
    code = "window-out-of-range"


class InvalidSeries(SSAError):
    code = "invalid-series"


class LengthMismatch(SSAError):
    code = "length-mismatch"


class DimensionMismatch(SSAError):
    code = "dimension-mismatch"


class NonFiniteInput(SSAError):
    code = "non-finite-input"


class DegreeTooLarge(SSAError):
    code = "degree-too-large"


class EmptyBasis(SSAError):
    code = "empty-basis"


class SplitProjectionGroup(SSAError):
    code = "split-projection-group"


class IndexOutOfRange(SSAError):
    code = "index-out-of-range"


class OverlappingGroups(SSAError):
    code = "overlapping-groups"


class DuplicateGroupName(SSAError):
    code = "duplicate-group-name"


class InvalidRootSpec(SSAError):
    code = "invalid-spec"


class InvalidLrr(SSAError):
    code = "invalid-lrr"


class ConfigInvalid(SSAError):
    code = "config-invalid"
