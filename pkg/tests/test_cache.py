import json

from chern_count import cache
from chern_count.strata import OnePointEngine, Variants
from chern_count.two_point import TWO_POINT_SINGULARITIES, TwoPointEngine


def _engines(variants=None):
    one = OnePointEngine(variants) if variants else OnePointEngine()
    return one, TwoPointEngine(one.variants, one)


def test_round_trip_skips_all_work(tmp_path):
    one, two = _engines()
    expected = [two.n_pair(s) for s in TWO_POINT_SINGULARITIES]
    path = tmp_path / "memo.json"
    assert cache.persist(one, two, path)
    json.loads(path.read_text())

    one2, two2 = _engines()
    assert cache.restore(one2, two2, path)
    assert [two2.n_pair(s) for s in TWO_POINT_SINGULARITIES] == expected
    assert two2.computed == 0 and one2.computed == 0


def test_dump_from_other_variants_is_ignored(tmp_path):
    one, two = _engines(Variants(pa7="statement"))
    one.n_singularity("A7")
    path = tmp_path / "memo.json"
    cache.persist(one, two, path)
    fresh, fresh_two = _engines()
    assert not cache.restore(fresh, fresh_two, path)
    assert fresh.cache_items() == []


def test_unreadable_cache_is_ignored(tmp_path):
    path = tmp_path / "memo.json"
    path.write_text("{not json")
    one, two = _engines()
    assert not cache.restore(one, two, path)


def test_env_var(tmp_path, monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    assert cache.cache_path() is None
    one, two = _engines()
    assert not cache.persist(one, two)
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path / "c.json"))
    assert cache.persist(one, two)
    assert (tmp_path / "c.json").exists()
