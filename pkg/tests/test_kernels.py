import pytest

from qdvolumes import cache, kernels
from qdvolumes import _pykernels as py
from qdvolumes.partitions import partitions_of

compiled = kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


@needs_compiled
@pytest.mark.parametrize("n", [6, 9, 12])
def test_characters_agree(n):
    parts = partitions_of(n)
    for lam in parts:
        assert py.dim(lam) == compiled.dim(lam)
        for rho in parts[:8]:
            assert py.character(lam, rho) == compiled.character(lam, rho)


@needs_compiled
def test_cover_counts_agree():
    from qdvolumes import oracle

    n = 4
    invol = oracle._class(n, (2, 2))
    mask = oracle._mask(n, (2, 2))
    rep = invol[0]
    args = (n, rep, [list(invol)] * 2, mask, (rep,))
    assert py.count_product_one(*args) == compiled.count_product_one(*args)


def test_memo_round_trip():
    kernels.character((3, 2, 1), (2, 2, 2))
    entries = kernels.export_memo()
    assert entries
    kernels.clear_caches()
    kernels.import_memo(entries)
    assert kernels.cache_size() >= len(entries)


def test_disk_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.get("t", [1]) is None
    cache.put("t", [1], {"a": "1/2"})
    assert cache.get("t", [1]) == {"a": "1/2"}
    assert cache.get("t", [2]) is None
    # corrupt entries read as misses
    path = cache._path("t", [1])
    path.write_text("{not json")
    assert cache.get("t", [1]) is None
    assert cache.clear() == 1


def test_disk_cache_disabled(monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, "")
    cache.put("t", [1], 1)
    assert cache.get("t", [1]) is None
