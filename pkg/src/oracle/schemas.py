import pydantic


class OracleResponse(pydantic.BaseModel):
    type_tag: str
    rank: int
    q: int
    order_log2: int
    value: int
