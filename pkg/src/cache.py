import hashlib
import logging
import pickle
import typing

import redis

from src import messages
from src.config import config

logger = logging.getLogger(__name__)


class ResultCache:
    cache = redis.Redis(
        host=config.REDIS_DOMAIN,
        port=config.REDIS_PORT,
        db=0,
        password=config.REDIS_PASSWORD,
    )

    @staticmethod
    def key(*parts: typing.Any) -> str:
        digest = hashlib.sha256(repr(parts).encode()).hexdigest()[:32]
        return f"census:{digest}"

    def get(self, key: str):
        """
        The get function reads a pickled result back from redis.

        :param key: str: Cache key built by ResultCache.key
        :return: The stored object or None when absent or redis is down
        """
        if not config.CACHE_ENABLED:
            return None
        try:
            raw = self.cache.get(key)
        except redis.exceptions.RedisError:
            logger.warning(messages.CACHE_UNAVAILABLE)
            return None
        if raw is None:
            return None
        return pickle.loads(raw)

    def set(self, key: str, value: typing.Any) -> None:
        if not config.CACHE_ENABLED:
            return
        try:
            self.cache.set(key, pickle.dumps(value))
            self.cache.expire(key, config.CACHE_TTL)
        except redis.exceptions.RedisError:
            logger.warning(messages.CACHE_UNAVAILABLE)

    def cached(self, key: str, compute: typing.Callable[[], typing.Any]):
        value = self.get(key)
        if value is None:
            value = compute()
            self.set(key, value)
        return value

    def ping(self) -> bool:
        try:
            return bool(self.cache.ping())
        except redis.exceptions.RedisError:
            return False


result_cache = ResultCache()
