import fastapi
from fastapi_limiter.depends import RateLimiter

import src.census.schemas as census_schemas
from src.census.models import DegreeCensus, NumericCensus, degree_label
from src.census.services import census_service, malle_check
from src.config import config
from src.errors import CensusError, to_http

router = fastapi.APIRouter(prefix='/census', tags=["census"])


def symbolic_payload(census: DegreeCensus) -> dict:
    malle = malle_check(census).as_dict() if census.type_tag == "F" else None
    return {
        "type_tag": census.type_tag,
        "rank": census.rank,
        "p": census.p,
        "entries": [{"degree": degree_label(d), "count": c.as_dict()} for d, c in census.sorted_entries()],
        "total": census.total.as_dict(),
        "malle": malle,
        "provenance": census.provenance,
    }


def numeric_payload(census: NumericCensus) -> dict:
    return {
        "type_tag": census.type_tag,
        "rank": census.rank,
        "p": census.p,
        "q": census.q,
        "counts": census.counts,
        "total": census.total,
        "provenance": census.provenance,
    }


@router.get(
    "/{type_tag}/{rank}",
    response_model=census_schemas.SymbolicCensusResponse | census_schemas.NumericCensusResponse,
    description='No more than 10 requests per minute',
    dependencies=[fastapi.Depends(RateLimiter(times=config.RATE_LIMIT_TIMES, seconds=config.RATE_LIMIT_SECONDS))]
)
def get_census(
        type_tag: str = fastapi.Path(pattern="^[A-G]$"),
        rank: int = fastapi.Path(ge=1, le=8),
        p: int = fastapi.Query(2, ge=2),
        q: int | None = fastapi.Query(None, ge=2),
):
    """
    The get_census function returns the degree census of U: numeric at q when q is
    given, otherwise the PORC polynomials per degree with the Malle check for F4.

    :param type_tag: str: Cartan type letter
    :param rank: int: Rank
    :param p: int: Characteristic
    :param q: int | None: Field size
    :return: The census with its provenance block
    """
    try:
        census = census_service.census(type_tag, rank, p, q)
    except CensusError as err:
        raise to_http(err)
    if isinstance(census, NumericCensus):
        return numeric_payload(census)
    return symbolic_payload(census)
