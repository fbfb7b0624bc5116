"""Typed library errors with stable machine-readable codes.

Every error raised by the library maps to exactly one code string; the CLI
and the HTTP service serialize these codes unchanged, so clients can match
on them.
"""


class LiefockError(Exception):
    code = "ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ShapeMismatch(LiefockError):
    code = "SHAPE_MISMATCH"


class NonFinite(LiefockError):
    code = "NON_FINITE"


class AntisymmetryViolation(LiefockError):
    code = "ANTISYMMETRY_VIOLATION"


class JacobiViolation(LiefockError):
    code = "JACOBI_VIOLATION"


class NotNilpotent(LiefockError):
    code = "NOT_NILPOTENT"


class NotSubalgebra(LiefockError):
    code = "NOT_SUBALGEBRA"


class BadParameter(LiefockError):
    code = "BAD_PARAMETER"


class DimTooLarge(LiefockError):
    code = "DIM_TOO_LARGE"


class NoVacuum(LiefockError):
    code = "NO_VACUUM"


class NormalizationFailure(LiefockError):
    code = "NORMALIZATION_FAILURE"


class DegenerateSpan(LiefockError):
    code = "DEGENERATE_SPAN"


class BlockTooSmall(LiefockError):
    code = "BLOCK_TOO_SMALL"


class FileError(LiefockError):
    code = "FILE_ERROR"


class UsageError(LiefockError):
    code = "USAGE_ERROR"
