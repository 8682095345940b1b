"""
Exception hierarchy for maze mapping and tracing.

Every error carries a stable ``code`` (reported in JSON and logs) and the
``exit_code`` the CLI returns when the error escapes a command.
"""

from typing import Optional


class MazeMapperError(Exception):
    """Base class for every error raised by the package."""

    code: str = "MAZE_MAPPER_ERROR"
    exit_code: int = 2

    def __init__(self, message: Optional[str] = None):
        super().__init__(message or self.code)
        self.message = message or self.code


# Input / format errors (exit 2)

class BadInputError(MazeMapperError):
    code = "BAD_INPUT"


class InvalidMazeError(MazeMapperError):
    code = "INVALID_MAZE"


class MazeFormatError(MazeMapperError):
    code = "MAZE_FORMAT"


class RaggedRowsError(MazeFormatError):
    code = "RAGGED_ROWS"


class MissingMarkerError(MazeFormatError):
    code = "MISSING_MARKER"


class DuplicateMarkerError(MazeFormatError):
    code = "DUPLICATE_MARKER"


class BadCharError(MazeFormatError):
    code = "BAD_CHAR"


class BadDimsError(MazeMapperError):
    code = "BAD_DIMS"


class FromIsWallError(MazeMapperError):
    code = "FROM_IS_WALL"


class PinOnWallError(MazeMapperError):
    code = "PIN_ON_WALL"


class NoPinsError(MazeMapperError):
    code = "NO_PINS"


class ClampOnWallError(MazeMapperError):
    code = "CLAMP_ON_WALL"


class DimensionMismatchError(MazeMapperError):
    code = "DIMENSION_MISMATCH"


class EmptyBranchError(MazeMapperError):
    code = "EMPTY_BRANCH"


class SeedOnWallError(MazeMapperError):
    code = "SEED_ON_WALL"


class TooFewSeedsError(MazeMapperError):
    code = "TOO_FEW_SEEDS"


class PathOffGridError(MazeMapperError):
    code = "PATH_OFF_GRID"


class DegenerateFieldError(MazeMapperError):
    code = "DEGENERATE_FIELD"


# Route errors (exit 1)

class NoRouteError(MazeMapperError):
    code = "NO_ROUTE"
    exit_code = 1


class NoPathError(NoRouteError):
    code = "NO_PATH"


class UnreachableError(NoRouteError):
    code = "UNREACHABLE"


# Solver errors (exit 3)

class SolverError(MazeMapperError):
    code = "SOLVER_ERROR"
    exit_code = 3


class NotConvergedError(SolverError):
    code = "NOT_CONVERGED"


class UnstableStepError(SolverError):
    code = "UNSTABLE_STEP"


class CFLViolationError(SolverError):
    code = "CFL_VIOLATION"


class PlateauError(SolverError):
    code = "PLATEAU"


class CycleError(SolverError):
    code = "CYCLE"


class FrontNeverArrivesError(SolverError):
    code = "FRONT_NEVER_ARRIVES"


class WaveDiedError(SolverError):
    code = "WAVE_DIED"


class NumericalBlowupError(SolverError):
    code = "NUMERICAL_BLOWUP"
