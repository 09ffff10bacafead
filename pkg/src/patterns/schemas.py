import pydantic
from pydantic import ConfigDict


class RepresentableSetResponse(pydantic.BaseModel):
    sigma: list[int]
    n_sigma: list[int]

    model_config = ConfigDict(from_attributes=True)  # noqa


class RepsetsResponse(pydantic.BaseModel):
    type_tag: str
    rank: int
    p: int
    count: int
    sets: list[RepresentableSetResponse]
