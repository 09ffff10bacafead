import fastapi
from fastapi_limiter.depends import RateLimiter

import src.reduction.schemas as reduction_schemas
from src import messages
from src.census.models import degree_label
from src.census.services import census_service, check_q
from src.chevalley.services import table_for
from src.config import config
from src.coregraph.services import arm_leg, build_graph, graph_dump
from src.coresolver.services import extract_equation, family_counts_numeric
from src.errors import CensusError, to_http
from src.reduction.models import Core
from src.reduction.services import core_form

router = fastapi.APIRouter(prefix='/cores', tags=["cores"])


def _core(type_tag: str, rank: int, p: int, core_id: int) -> Core:
    cores = census_service.inventory(type_tag, rank, p).nonabelian
    if not 1 <= core_id <= len(cores):
        raise fastapi.HTTPException(
            status_code=fastapi.status.HTTP_404_NOT_FOUND,
            detail=messages.CORE_NOT_FOUND.format(core_id=core_id, type_tag=type_tag, rank=rank, p=p),
        )
    return cores[core_id - 1]


@router.get("/{type_tag}/{rank}", response_model=reduction_schemas.InventoryResponse)
def get_inventory(
        type_tag: str = fastapi.Path(pattern="^[A-G]$"),
        rank: int = fastapi.Path(ge=1, le=8),
        p: int = fastapi.Query(2, ge=2),
):
    """
    The get_inventory function returns the nonabelian cores of U with their forms,
    branching classes and reduction logs. Core ids are 1-based positions in this list.

    :param type_tag: str: Cartan type letter
    :param rank: int: Rank
    :param p: int: Characteristic
    :return: The inventory
    """
    try:
        inv = census_service.inventory(type_tag, rank, p)
        tab = table_for(type_tag, rank, p)
    except CensusError as err:
        raise to_http(err)
    label_of = {cid: label for label, ids in inv.classes.items() for cid in ids}
    return {
        "type_tag": type_tag,
        "rank": rank,
        "p": p,
        "total": inv.total_nonabelian,
        "forms": {str(form): n for form, n in inv.forms.items()},
        "classes": inv.classes,
        "cores": [
            {"id": cid, "form": str(core_form(tab, core)), "label": label_of.get(cid), **core.as_dict()}
            for cid, core in enumerate(inv.nonabelian, start=1)
        ],
    }


@router.get("/{type_tag}/{rank}/{core_id}/graph", response_model=reduction_schemas.GraphResponse)
def get_graph(
        type_tag: str = fastapi.Path(pattern="^[A-G]$"),
        rank: int = fastapi.Path(ge=1, le=8),
        core_id: int = fastapi.Path(ge=1),
        p: int = fastapi.Query(2, ge=2),
):
    try:
        tab = table_for(type_tag, rank, p)
        core = _core(type_tag, rank, p, core_id)
        graph = build_graph(tab, core)
        armleg = arm_leg(graph, core)
        equation = None if graph.heart or p != 2 else extract_equation(tab, core, armleg).render()
    except CensusError as err:
        raise to_http(err)
    return {"core_id": core_id, "equation": equation, **graph_dump(graph, armleg)}


@router.get(
    "/{type_tag}/{rank}/{core_id}/solve",
    response_model=reduction_schemas.SolveResponse,
    description='No more than 10 requests per minute',
    dependencies=[fastapi.Depends(RateLimiter(times=config.RATE_LIMIT_TIMES, seconds=config.RATE_LIMIT_SECONDS))]
)
def solve_core(
        type_tag: str = fastapi.Path(pattern="^[A-G]$"),
        rank: int = fastapi.Path(ge=1, le=8),
        core_id: int = fastapi.Path(ge=1),
        q: int = fastapi.Query(2, ge=2),
):
    """
    The solve_core function counts, at q, the characters of one nonabelian core
    over the nontrivial characters of its center part.

    :param type_tag: str: Cartan type letter
    :param rank: int: Rank
    :param core_id: int: 1-based id from the inventory
    :param q: int: Field size
    :return: The histogram and its sum of squares against q^|S-Z| (q-1)^|Z|
    """
    try:
        ctx = check_q(q)
        tab = table_for(type_tag, rank, 2)
        core = _core(type_tag, rank, 2, core_id)
        hist = family_counts_numeric(tab, core, ctx)
    except CensusError as err:
        raise to_http(err)
    return {
        "core_id": core_id,
        "q": q,
        "histogram": {degree_label(d): n for d, n in sorted(hist.counts.items())},
        "values": hist.evaluate(),
        "sum_of_squares": int(hist.sum_of_squares()),
        "expected": q ** len(core.S - core.Z) * (q - 1) ** len(core.Z),
    }
