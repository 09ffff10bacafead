from unittest.mock import patch, AsyncMock

from src.cache import result_cache


def test_get_repsets(client):
    response = client.get("api/repsets/B/2")
    assert response.status_code == 200, response.text
    data = response.json()
    assert data["count"] == 7
    assert len(data["sets"]) == 7


def test_get_repsets_p3(client):
    response = client.get("api/repsets/B/2", params={"p": 3})
    assert response.status_code == 200, response.text
    assert response.json()["count"] == 6


def test_get_repsets_invalid_type(client):
    response = client.get("api/repsets/H/2")
    assert response.status_code == 422, response.text


def test_get_inventory(client):
    with patch.object(result_cache, 'cache') as redis_mock:
        redis_mock.get.return_value = None
        response = client.get("api/cores/B/2")
        assert response.status_code == 200, response.text
        data = response.json()
        assert data["total"] == 1
        assert data["forms"] == {"[2,4,1]": 1}
        assert data["classes"] == {"F1": [1]}
        assert data["cores"][0]["S"] == [1, 2, 3, 4]
        assert data["cores"][0]["label"] == "F1"


def test_get_graph(client):
    with patch.object(result_cache, 'cache') as redis_mock:
        redis_mock.get.return_value = None
        response = client.get("api/cores/B/2/1/graph")
        assert response.status_code == 200, response.text
        data = response.json()
        assert data["I"] == [1]
        assert data["J"] == [2]
        assert data["edges"] == [[1, 2]]
        assert data["equation"] == "s_2(a_3 t_1 + a_4 t_1 s_2)"


def test_get_graph_not_found(client):
    with patch.object(result_cache, 'cache') as redis_mock:
        redis_mock.get.return_value = None
        response = client.get("api/cores/B/2/5/graph")
        assert response.status_code == 404, response.text


def test_solve_core(client, monkeypatch):
    with patch.object(result_cache, 'cache') as redis_mock:
        redis_mock.get.return_value = None
        monkeypatch.setattr("fastapi_limiter.FastAPILimiter.redis", AsyncMock())
        monkeypatch.setattr("fastapi_limiter.FastAPILimiter.identifier", AsyncMock())
        monkeypatch.setattr("fastapi_limiter.FastAPILimiter.http_callback", AsyncMock())
        response = client.get("api/cores/B/2/1/solve", params={"q": 4})
        assert response.status_code == 200, response.text
        data = response.json()
        assert data["histogram"] == {"q/2": 36}
        assert data["sum_of_squares"] == data["expected"] == 144


def test_solve_core_bad_q(client, monkeypatch):
    with patch.object(result_cache, 'cache') as redis_mock:
        redis_mock.get.return_value = None
        monkeypatch.setattr("fastapi_limiter.FastAPILimiter.redis", AsyncMock())
        monkeypatch.setattr("fastapi_limiter.FastAPILimiter.identifier", AsyncMock())
        monkeypatch.setattr("fastapi_limiter.FastAPILimiter.http_callback", AsyncMock())
        response = client.get("api/cores/B/2/1/solve", params={"q": 6})
        assert response.status_code == 400, response.text
