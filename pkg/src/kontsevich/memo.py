# src/kontsevich/memo.py

"""Memo store shared by the evaluator and the Gromov-Witten solver.

Entries are keyed canonically: products by ``(SpaceId, factors)`` after
marking relabeling, invariants by ``GWKey``. The on-disk form is line oriented
text with a version header::

    MBAR-CACHE v1
    r=2,d=3,n=0 | H^8<TAB>12
    GW 2 3 2,2,2,2,2,2,2,2 = 12
"""

import os
import tempfile
import threading
from fractions import Fraction
from typing import Dict, Hashable, Optional, Tuple

from loguru import logger

from .divalg import Factors
from .exactnum import format_rational, parse_rational
from .exceptions import CacheVersionError, CorruptCacheError, MbarDomainError, MbarUsageError
from .moduli import SpaceId

CACHE_HEADER = "MBAR-CACHE v1"

ProductKey = Tuple[SpaceId, Factors]


class MemoStore:
    """Thread-safe get-or-insert maps for products and invariants"""

    def __init__(self) -> None:
        self.products: Dict[ProductKey, Fraction] = {}
        self.invariants: Dict[Hashable, Fraction] = {}
        self._lock = threading.RLock()

    def __len__(self) -> int:
        return len(self.products) + len(self.invariants)

    @staticmethod
    def _put(table: Dict, key, value: Fraction) -> Fraction:
        known = table.get(key)
        if known is not None and known != value:
            raise CorruptCacheError(f"conflicting values for {key}: {known} and {value}")
        table[key] = value
        return value

    def get_product(self, key: ProductKey) -> Optional[Fraction]:
        return self.products.get(key)

    def put_product(self, key: ProductKey, value: Fraction) -> Fraction:
        with self._lock:
            return self._put(self.products, key, value)

    def get_invariant(self, key) -> Optional[Fraction]:
        return self.invariants.get(key)

    def put_invariant(self, key, value: Fraction) -> Fraction:
        with self._lock:
            return self._put(self.invariants, key, value)

    def clear(self) -> None:
        with self._lock:
            self.products.clear()
            self.invariants.clear()


def _format_product(key: ProductKey, value: Fraction) -> str:
    from .syntax import format_factors

    space, factors = key
    return f"{space} | {format_factors(factors)}\t{format_rational(value)}"


def _format_invariant(key, value: Fraction) -> str:
    insertions = ",".join(str(a) for a in key.insertions)
    return f"GW {key.r} {key.d} {insertions} = {format_rational(value)}"


def cache_save(store: MemoStore, location: str) -> int:
    """Write every entry, sorted, replacing ``location`` atomically.

    Returns:
        The number of entries written.
    """
    with store._lock:
        lines = sorted(_format_product(k, v) for k, v in store.products.items())
        lines += sorted(_format_invariant(k, v) for k, v in store.invariants.items())
    directory = os.path.dirname(os.path.abspath(location))
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(prefix=".mbar-cache-", dir=directory)
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(CACHE_HEADER + "\n")
            for line in lines:
                handle.write(line + "\n")
        os.replace(tmp_path, location)
    except OSError as e:
        raise CorruptCacheError(f"cannot write cache {location}: {e}")
    logger.info(f"Saved {len(lines)} cache entries to {location}")
    return len(lines)


def _parse_invariant(line: str):
    # local import to avoid circular import
    from .gw import GWKey

    head, eq, value = line.partition("=")
    parts = head.split()
    if not eq or len(parts) not in (3, 4) or parts[0] != "GW":
        raise CorruptCacheError(f"malformed invariant entry {line!r}")
    insertions = tuple(int(a) for a in parts[3].split(",")) if len(parts) == 4 else ()
    return GWKey.of(int(parts[1]), int(parts[2]), insertions), parse_rational(value)


def _parse_product(line: str):
    from .syntax import parse_monomial, parse_space

    key, tab, value = line.partition("\t")
    space_text, bar, monomial_text = key.partition("|")
    if not tab or not bar:
        raise CorruptCacheError(f"malformed product entry {line!r}")
    space = parse_space(space_text)
    monomial = parse_monomial(space, monomial_text)
    return (space, monomial.factors), parse_rational(value)


def cache_load(store: MemoStore, location: str) -> MemoStore:
    """Merge the entries of ``location`` into ``store``.

    A missing file leaves the store unchanged.

    Raises:
        CacheVersionError: If the header is not ``MBAR-CACHE v1``.
        CorruptCacheError: On an unparsable line or a value conflicting with the store.
    """
    if not os.path.exists(location):
        logger.info(f"No cache at {location}; starting empty")
        return store
    try:
        with open(location, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as e:
        raise CorruptCacheError(f"cannot read cache {location}: {e}")

    if not lines or lines[0].strip() != CACHE_HEADER:
        found = lines[0].strip() if lines else "<empty file>"
        raise CacheVersionError(f"cache {location} has header {found!r}, expected {CACHE_HEADER!r}")

    count = 0
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            if line.startswith("GW "):
                key, value = _parse_invariant(line)
                store.put_invariant(key, value)
            else:
                key, value = _parse_product(line)
                store.put_product(key, value)
        except (MbarUsageError, MbarDomainError, ValueError) as e:
            raise CorruptCacheError(f"{location}:{number}: {e}")
        count += 1
    logger.info(f"Loaded {count} cache entries from {location}")
    return store
