import fastapi
from fastapi_limiter.depends import RateLimiter

import src.oracle.schemas as oracle_schemas
from src.cache import result_cache
from src.census.services import check_q
from src.config import config
from src.errors import CensusError, to_http
from src.oracle.services import abelianization_order, conjugacy_class_count, group_for

router = fastapi.APIRouter(prefix='/oracle', tags=["oracle"])


def _run(kind: str, type_tag: str, rank: int, q: int, compute) -> dict:
    try:
        grp = group_for(type_tag, rank, check_q(q))
        key = result_cache.key("oracle", kind, type_tag, rank, q)
        value = result_cache.cached(key, lambda: compute(grp))
    except CensusError as err:
        raise to_http(err)
    return {"type_tag": type_tag, "rank": rank, "q": q, "order_log2": grp.log2_order, "value": value}


@router.get(
    "/classes/{type_tag}/{rank}",
    response_model=oracle_schemas.OracleResponse,
    description='No more than 10 requests per minute',
    dependencies=[fastapi.Depends(RateLimiter(times=config.RATE_LIMIT_TIMES, seconds=config.RATE_LIMIT_SECONDS))]
)
def get_classes(
        type_tag: str = fastapi.Path(pattern="^[A-G]$"),
        rank: int = fastapi.Path(ge=1, le=8),
        q: int = fastapi.Query(2, ge=2),
):
    """
    The get_classes function counts the conjugacy classes of U(q) by brute force.

    :param type_tag: str: Cartan type letter
    :param rank: int: Rank
    :param q: int: Field size
    :return: The class number
    """
    return _run("classes", type_tag, rank, q, conjugacy_class_count)


@router.get(
    "/abelianization/{type_tag}/{rank}",
    response_model=oracle_schemas.OracleResponse,
    description='No more than 10 requests per minute',
    dependencies=[fastapi.Depends(RateLimiter(times=config.RATE_LIMIT_TIMES, seconds=config.RATE_LIMIT_SECONDS))]
)
def get_abelianization(
        type_tag: str = fastapi.Path(pattern="^[A-G]$"),
        rank: int = fastapi.Path(ge=1, le=8),
        q: int = fastapi.Query(2, ge=2),
):
    return _run("abelianization", type_tag, rank, q, abelianization_order)
