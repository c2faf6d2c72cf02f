"""Exception hierarchy and numeric error codes."""

from enum import IntEnum

from .constants import ExitCode


class ErrorCode(IntEnum):
    """Numeric error codes carried by every AffsurfError."""

    OK = 0x0000
    # Input errors (0x01xx)
    ERR_INVALID_BODY = 0x0101
    ERR_SINGULAR_MAP = 0x0102
    ERR_DELTA_OUT_OF_RANGE = 0x0103
    ERR_P_OUT_OF_RANGE = 0x0104
    ERR_NOT_DIVERGENT_RANGE = 0x0105
    ERR_ILL_CONDITIONED_GRID = 0x0106
    ERR_UNSUPPORTED_BODY = 0x0107
    # Domain errors (0x02xx)
    ERR_P_EQUALS_MINUS_N = 0x0201
    ERR_ORIGIN_NOT_INTERIOR = 0x0202
    ERR_NOT_CENTERED = 0x0203
    ERR_NON_CONVEX = 0x0204
    ERR_EMPTY_FLOATING_BODY = 0x0205
    ERR_NON_MONOTONE_SEQUENCE = 0x0206
    ERR_DEGENERATE_BODY = 0x0207
    ERR_SINGULAR_COVARIANCE = 0x0208
    ERR_NOT_CONVERGED = 0x0209
    ERR_NOT_ISOTROPIC = 0x020A
    ERR_CONSTRUCTION_REFUSED = 0x020B


class AffsurfError(ValueError):
    """Base class for all affsurf errors."""

    code: ErrorCode = ErrorCode.ERR_INVALID_BODY

    @property
    def exit_code(self) -> ExitCode:
        if self.code >= 0x0200:
            return ExitCode.DOMAIN_ERROR
        return ExitCode.INPUT_ERROR


# ----------------------------------------------------------------------------
# Input errors
# ----------------------------------------------------------------------------


class InvalidBody(AffsurfError):
    code = ErrorCode.ERR_INVALID_BODY


class SingularMap(AffsurfError):
    code = ErrorCode.ERR_SINGULAR_MAP


class DeltaOutOfRange(AffsurfError):
    code = ErrorCode.ERR_DELTA_OUT_OF_RANGE


class POutOfRange(AffsurfError):
    code = ErrorCode.ERR_P_OUT_OF_RANGE


class NotDivergentRange(AffsurfError):
    code = ErrorCode.ERR_NOT_DIVERGENT_RANGE


class IllConditionedGrid(AffsurfError):
    code = ErrorCode.ERR_ILL_CONDITIONED_GRID


class UnsupportedBody(AffsurfError):
    code = ErrorCode.ERR_UNSUPPORTED_BODY


# ----------------------------------------------------------------------------
# Domain errors
# ----------------------------------------------------------------------------


class PEqualsMinusN(AffsurfError):
    code = ErrorCode.ERR_P_EQUALS_MINUS_N


class OriginNotInterior(AffsurfError):
    code = ErrorCode.ERR_ORIGIN_NOT_INTERIOR


class NotCentered(AffsurfError):
    code = ErrorCode.ERR_NOT_CENTERED


class NonConvex(AffsurfError):
    code = ErrorCode.ERR_NON_CONVEX


class EmptyFloatingBody(AffsurfError):
    code = ErrorCode.ERR_EMPTY_FLOATING_BODY


class NonMonotoneSequence(AffsurfError):
    code = ErrorCode.ERR_NON_MONOTONE_SEQUENCE


class DegenerateBody(AffsurfError):
    code = ErrorCode.ERR_DEGENERATE_BODY


class SingularCovariance(AffsurfError):
    code = ErrorCode.ERR_SINGULAR_COVARIANCE


class NotConverged(AffsurfError):
    code = ErrorCode.ERR_NOT_CONVERGED


class NotIsotropic(AffsurfError):
    code = ErrorCode.ERR_NOT_ISOTROPIC


class ConstructionRefused(AffsurfError):
    code = ErrorCode.ERR_CONSTRUCTION_REFUSED
