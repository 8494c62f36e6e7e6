from modwb import cache
from modwb.siegel import jacobi_eisenstein


def test_disabled_without_env(monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    calls = []
    assert cache.cached(["x"], lambda: calls.append(1) or 5) == 5
    assert cache.cached(["x"], lambda: calls.append(1) or 5) == 5
    assert len(calls) == 2


def test_hit_and_corruption(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    calls = []

    def compute():
        calls.append(1)
        return {"v": 7}

    assert cache.cached(["k", 1], compute) == {"v": 7}
    assert cache.cached(["k", 1], compute) == {"v": 7}
    assert len(calls) == 1
    (f,) = tmp_path.glob("*.json")
    f.write_text("{not json")
    assert cache.cached(["k", 1], compute) == {"v": 7}
    assert len(calls) == 2


def test_cached_tables_agree(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    first = jacobi_eisenstein(4, 40).as_dict()
    second = jacobi_eisenstein(4, 40).as_dict()
    assert first == second
