class CensusError(Exception):
    """Base class of every failure raised by the census library."""


class InvalidRootSystemError(CensusError):
    pass


class IndexOutOfRangeError(CensusError):
    pass


class PreconditionError(CensusError):
    pass


class ZeroPolynomialError(CensusError):
    pass


class ReductionConsistencyError(CensusError):
    pass


class UnsupportedShapeError(CensusError):
    pass


class OddCircleError(CensusError):
    pass


class EquationError(CensusError):
    pass


class StabilizerMismatchError(CensusError):
    pass


class CoreStructureError(CensusError):
    pass


class UnknownBranchingClassError(CensusError):
    pass


class BudgetExceededError(CensusError):
    pass


class OutOfScopeError(CensusError):
    pass


HTTP_STATUS = {
    InvalidRootSystemError: 400,
    IndexOutOfRangeError: 400,
    PreconditionError: 400,
    OutOfScopeError: 400,
    ZeroPolynomialError: 400,
    BudgetExceededError: 413,
}


def to_http(err: CensusError):
    """Translate a domain error into the HTTPException a route raises; structural failures map to 422."""
    import fastapi

    status_code = next((code for kind, code in HTTP_STATUS.items() if isinstance(err, kind)),
                       fastapi.status.HTTP_422_UNPROCESSABLE_ENTITY)
    return fastapi.HTTPException(status_code=status_code, detail=str(err))
