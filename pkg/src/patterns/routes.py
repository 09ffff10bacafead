import fastapi

import src.patterns.schemas as patterns_schemas
from src.chevalley.services import table_for
from src.errors import CensusError, to_http
from src.patterns.services import representable_sets

router = fastapi.APIRouter(prefix='/repsets', tags=["repsets"])


@router.get("/{type_tag}/{rank}", response_model=patterns_schemas.RepsetsResponse)
def get_repsets(
        type_tag: str = fastapi.Path(pattern="^[A-G]$"),
        rank: int = fastapi.Path(ge=1, le=8),
        p: int = fastapi.Query(2, ge=2),
):
    """
    The get_repsets function lists the representable sets of U for a root system
    and characteristic.

    :param type_tag: str: Cartan type letter
    :param rank: int: Rank
    :param p: int: Characteristic
    :return: The count and every set with its normal subgroup
    """
    try:
        sets = representable_sets(table_for(type_tag, rank, p))
    except CensusError as err:
        raise to_http(err)
    return {
        "type_tag": type_tag,
        "rank": rank,
        "p": p,
        "count": len(sets),
        "sets": [r.as_dict() for r in sets],
    }
