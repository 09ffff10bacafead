import pydantic


class CensusEntry(pydantic.BaseModel):
    degree: str
    count: dict


class MalleResponse(pydantic.BaseModel):
    present: bool
    count: dict | None
    family: str | None
    at_q2: int | None

    class Config:
        from_attributes = True


class SymbolicCensusResponse(pydantic.BaseModel):
    type_tag: str
    rank: int
    p: int
    entries: list[CensusEntry]
    total: dict
    malle: MalleResponse | None = None
    provenance: dict


class NumericCensusResponse(pydantic.BaseModel):
    type_tag: str
    rank: int
    p: int
    q: int
    counts: dict[int, int]
    total: int
    provenance: dict
