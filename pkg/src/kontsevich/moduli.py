"""Combinatorics of the spaces M̄_{0,n}(r,d).

A space is named by ``SpaceId(r, d, n)`` with markings ``1..n``. A boundary
divisor is a weighted partition (A ∪ B, d_A, d_B); it is stored as the
presentation minimizing ``(d_A, sorted A)``, so each component has exactly
one ``BoundarySym`` and the natural tuple order is the canonical key order.
"""

from functools import lru_cache
from typing import List, NamedTuple, Tuple

from .exactnum import binomial
from .exceptions import ScopeError, InvalidSymbolError
from .validators import validate_space, validate_marking, validate_degree, validate_index


class SpaceId(NamedTuple):
    r: int
    d: int
    n: int

    @classmethod
    def of(cls, r: int, d: int, n: int) -> "SpaceId":
        validate_space(r, d, n)
        return cls(r, d, n)

    @property
    def markings(self) -> range:
        return range(1, self.n + 1)

    @property
    def dimension(self) -> int:
        return dim_space(self)

    def __str__(self) -> str:
        return f"r={self.r},d={self.d},n={self.n}"


class BoundarySym(NamedTuple):
    degree: int
    side: Tuple[int, ...]


def dim_space(s: SpaceId) -> int:
    return s.r * s.d + s.d + s.r + s.n - 3


def _stable(size: int, degree: int) -> bool:
    return degree > 0 or size >= 2


def complement(s: SpaceId, b: BoundarySym) -> BoundarySym:
    """The other presentation (B, d_B) of the same weighted partition."""
    chosen = set(b.side)
    return BoundarySym(s.d - b.degree, tuple(i for i in s.markings if i not in chosen))


def boundary_from_side(s: SpaceId, side, degree: int) -> BoundarySym:
    """Build the canonical symbol of the partition with side ``side`` of degree ``degree``.

    Raises:
        InvalidSymbolError: If a marking is out of range or the partition is unstable.
    """
    side = tuple(sorted(set(side)))
    for i in side:
        validate_marking(s.n, i)
    validate_degree(s.d, degree)
    first = BoundarySym(degree, side)
    second = complement(s, first)
    if not (_stable(len(first.side), first.degree) and _stable(len(second.side), second.degree)):
        raise InvalidSymbolError(
            f"Partition {side}|{second.side} with degrees {degree}+{second.degree} on {s}",
            "Y02",
        )
    return min(first, second)


@lru_cache(maxsize=None)
def _components(s: SpaceId) -> Tuple[BoundarySym, ...]:
    found = set()
    markings = list(s.markings)
    for mask in range(1 << s.n):
        side = tuple(markings[j] for j in range(s.n) if mask >> j & 1)
        other = tuple(markings[j] for j in range(s.n) if not mask >> j & 1)
        for degree in range(s.d + 1):
            if _stable(len(side), degree) and _stable(len(other), s.d - degree):
                found.add(min(BoundarySym(degree, side), BoundarySym(s.d - degree, other)))
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def _component_set(s: SpaceId) -> frozenset:
    return frozenset(_components(s))


def enumerate_boundary(s: SpaceId) -> List[BoundarySym]:
    """All boundary components of ``s`` in canonical key order."""
    return list(_components(s))


def is_boundary(s: SpaceId, b: BoundarySym) -> bool:
    return b in _component_set(s)


def canonical_boundary(s: SpaceId, side: Tuple[int, ...], degree: int) -> BoundarySym:
    """Canonical presentation of a partition known to be stable (no validation)."""
    chosen = set(side)
    first = BoundarySym(degree, tuple(sorted(chosen)))
    second = BoundarySym(s.d - degree, tuple(i for i in s.markings if i not in chosen))
    return min(first, second)


def side_containing(s: SpaceId, b: BoundarySym, marking: int) -> BoundarySym:
    """The presentation of ``b`` whose side holds ``marking``."""
    if marking in b.side:
        return b
    return complement(s, b)


def picard_rank(s: SpaceId) -> int:
    """Rank of Pic ⊗ Q for d >= 1.

    Raises:
        ScopeError: For d = 0, where the count is Keel's and not computed here.
    """
    if s.d == 0:
        raise ScopeError(f"Picard rank of {s} (degree 0) is not computed")
    if s.n == 0:
        return s.d // 2 + 1
    return (s.d + 1) * 2 ** (s.n - 1) - int(binomial(s.n, 2))


def degree_partition_class(s: SpaceId, j: int) -> List[BoundarySym]:
    """Components whose unordered degree split is {j, d - j}."""
    if s.d < 1:
        raise ScopeError(f"Degree partitions need d >= 1 on {s}")
    validate_index(j, 0, s.d // 2, "j")
    return [b for b in _components(s) if min(b.degree, s.d - b.degree) == j]


def marked_degree_class(s: SpaceId, marking: int, j: int) -> List[BoundarySym]:
    """Components carrying ``marking`` on the side of degree ``j``."""
    if s.n < 1 or s.d < 1:
        raise ScopeError(f"Marked degree classes need n >= 1 and d >= 1 on {s}")
    validate_marking(s.n, marking)
    validate_index(j, 0, s.d, "j")
    return [b for b in _components(s) if side_containing(s, b, marking).degree == j]


def marked_size_class(s: SpaceId, marking: int, j: int) -> List[BoundarySym]:
    """Degree 0 components whose side through ``marking`` has ``j`` markings."""
    if s.d != 0 or s.n < 4:
        raise ScopeError(f"Marked size classes need d = 0 and n >= 4 on {s}")
    validate_marking(s.n, marking)
    validate_index(j, 2, s.n - 2, "j")
    return [b for b in _components(s) if len(side_containing(s, b, marking).side) == j]
