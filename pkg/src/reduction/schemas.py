import pydantic
from pydantic import ConfigDict


class CoreResponse(pydantic.BaseModel):
    id: int
    form: str
    label: str | None = None
    S: list[int]
    Z: list[int]
    A: list[int]
    L: list[int]
    K: list[int]
    D: list[int]
    abelian: bool
    path: list[str]

    model_config = ConfigDict(from_attributes=True)  # noqa


class InventoryResponse(pydantic.BaseModel):
    type_tag: str
    rank: int
    p: int
    total: int
    forms: dict[str, int]
    classes: dict[str, list[int]]
    cores: list[CoreResponse]


class TreeResponse(pydantic.BaseModel):
    vertices: list[int]
    attached_at: int | None


class GraphResponse(pydantic.BaseModel):
    core_id: int
    vertices: list[int]
    edges: list[list[int]]
    heart: list[int]
    circles: list[list[int]]
    trees: list[TreeResponse]
    I: list[int]
    J: list[int]
    equation: str | None = None


class SolveResponse(pydantic.BaseModel):
    core_id: int
    q: int
    histogram: dict[str, int]
    values: dict[int, int]
    sum_of_squares: int
    expected: int
