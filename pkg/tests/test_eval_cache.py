import json
from fractions import Fraction

import pytest
from mpmath import mp, mpf

from models.errors import CacheFormatError
from models.letter_word import LetterWord
from services.eval_cache_service import CACHE_ENV, CACHE_FORMAT, EvalCacheService

W = LetterWord.parse("110")


def test_put_save_and_reload(tmp_path):
    path = tmp_path / "cache.json"
    cache = EvalCacheService(str(path))
    with mp.workdps(40):
        value = mp.zeta(3)
    cache.put(W, Fraction(-1, 2), 30, value)
    cache.save()

    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["format"] == CACHE_FORMAT
    assert list(data["entries"]) == ["110|-1/2|30"]

    reloaded = EvalCacheService(str(path))
    assert len(reloaded) == 1
    with mp.workdps(40):
        assert abs(reloaded.get(W, Fraction(-1, 2), 30) - value) < mpf(10) ** -32
    assert reloaded.get(W, Fraction(-1, 2), 40) is None
    assert reloaded.get(W, Fraction(1, 2), 30) is None


def test_stale_format_is_ignored(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text(json.dumps({"format": "zc-eval-cache/0", "entries": {"110|0|30": "1.2"}}), encoding="utf-8")
    cache = EvalCacheService(str(path))
    assert len(cache) == 0
    cache.put(W, Fraction(0), 30, mpf(1))
    cache.save()
    assert json.loads(path.read_text(encoding="utf-8"))["format"] == CACHE_FORMAT


def test_broken_file_raises(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(CacheFormatError):
        EvalCacheService(str(path))


def test_environment_default(tmp_path, monkeypatch):
    path = tmp_path / "env-cache.json"
    monkeypatch.setenv(CACHE_ENV, str(path))
    assert EvalCacheService().path == path
    assert EvalCacheService(use_env=False).path is None


def test_memory_only_cache_never_writes(tmp_path, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    cache = EvalCacheService()
    cache.put(W, Fraction(0), 30, mpf(2))
    cache.save()
    assert cache.path is None
    assert cache.get(W, Fraction(0), 30) == 2
