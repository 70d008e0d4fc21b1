from fractions import Fraction

import pytest

from src.kontsevich.exceptions import CacheVersionError, CorruptCacheError
from src.kontsevich.gw import GWKey
from src.kontsevich.memo import CACHE_HEADER, MemoStore, cache_load, cache_save
from src.kontsevich.moduli import SpaceId
from src.kontsevich.syntax import parse_monomial


def populated_store():
    store = MemoStore()
    s = SpaceId.of(2, 3, 0)
    store.put_product((s, parse_monomial(s, "H^3 K{dA=1}^5").factors), Fraction(-2541, 4))
    t = SpaceId.of(2, 2, 3)
    store.put_product((t, parse_monomial(t, "H^3 L1^2 K{A=1,2;dA=0} L3").factors), Fraction(7))
    store.put_invariant(GWKey.of(3, 2, [2] * 8), Fraction(92))
    store.put_invariant(GWKey.of(3, 1, []), Fraction(0))
    return store


def test_save_and_load(tmp_path):
    location = tmp_path / "cache" / "mbar.txt"
    store = populated_store()
    assert cache_save(store, str(location)) == 4
    assert location.read_text().splitlines()[0] == CACHE_HEADER

    loaded = cache_load(MemoStore(), str(location))
    assert loaded.products == store.products
    assert loaded.invariants == store.invariants


def test_saved_file_is_sorted_and_stable(tmp_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    cache_save(populated_store(), str(first))
    cache_save(cache_load(MemoStore(), str(first)), str(second))
    assert first.read_text() == second.read_text()


def test_missing_file_is_empty(tmp_path):
    store = cache_load(MemoStore(), str(tmp_path / "absent.txt"))
    assert len(store) == 0


def test_wrong_header(tmp_path):
    location = tmp_path / "old.txt"
    location.write_text("MBAR-CACHE v0\n")
    with pytest.raises(CacheVersionError):
        cache_load(MemoStore(), str(location))


@pytest.mark.parametrize("line", [
    "r=2,d=3,n=0 | H^8",
    "r=2,d=3,n=0 | H^8\tnot-a-number",
    "r=2,d=3,n=0 | X^8\t12",
    "GW 3 2 2,2 = ",
    "GW 3 = 1",
])
def test_corrupt_lines(tmp_path, line):
    location = tmp_path / "bad.txt"
    location.write_text(f"{CACHE_HEADER}\n{line}\n")
    with pytest.raises(CorruptCacheError):
        cache_load(MemoStore(), str(location))


def test_conflicting_entry_is_corrupt(tmp_path):
    location = tmp_path / "cache.txt"
    cache_save(populated_store(), str(location))
    store = MemoStore()
    store.put_invariant(GWKey.of(3, 2, [2] * 8), Fraction(93))
    with pytest.raises(CorruptCacheError):
        cache_load(store, str(location))
