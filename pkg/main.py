import os

import redis.asyncio as redis
import uvicorn

import fastapi.middleware.cors as cors
from fastapi import FastAPI, HTTPException
from fastapi_limiter import FastAPILimiter

from src.cache import result_cache
from src.census import routes as census_routes
from src.config import config
from src.logconf import setup_logging
from src.oracle import routes as oracle_routes
from src.patterns import routes as patterns_routes
from src.reduction import routes as reduction_routes

setup_logging()

app = FastAPI(title="unipotent-census")

origins = ["http://localhost:8000"]

app.add_middleware(
    cors.CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(patterns_routes.router, prefix="/api")
app.include_router(reduction_routes.router, prefix="/api")
app.include_router(census_routes.router, prefix="/api")
app.include_router(oracle_routes.router, prefix="/api")


@app.on_event("startup")
async def startup():
    r = await redis.Redis(
        host=config.REDIS_DOMAIN,
        port=config.REDIS_PORT,
        db=0,
        password=config.REDIS_PASSWORD
    )
    await FastAPILimiter.init(r)


@app.get('/')
def index():
    """
    The index function returns a greeting pointing at the census endpoints.

    :return: A dictionary with a message
    """
    return {'message': 'Character census of Sylow p-subgroups of Chevalley groups'}


@app.get("/api/healthchecker")
def healthchecker():
    """
    The healthchecker function checks that the redis result cache answers a ping.

    :return: A dictionary with a message
    """
    if not result_cache.ping():
        raise HTTPException(status_code=500, detail="Error connecting to the result cache")
    return {"message": "Welcome to unipotent-census!"}


if __name__ == '__main__':
    uvicorn.run(
        "main:app", host="0.0.0.0", port=int(os.environ.get("PORT", 8000)), log_level="info"
    )
