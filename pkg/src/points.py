#!/usr/bin/env python3

"""Points of H^d and coordinatewise sums of points."""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence, Tuple

from .errors import ArityError, InstanceMismatchError, UnsupportedError
from .hyperfield import HElem, HSet, Hyperfield, mul


@dataclass(frozen=True)
class HPoint:
    coords: Tuple[HElem, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(self.coords))
        if not self.coords:
            raise ArityError("Points need at least one coordinate")
        f = self.coords[0].field
        if any(c.field != f for c in self.coords):
            raise InstanceMismatchError("Point coordinates from different hyperfields")

    @classmethod
    def of(cls, *coords: HElem) -> 'HPoint':
        return cls(tuple(coords))

    @classmethod
    def zero(cls, field: Hyperfield, d: int) -> 'HPoint':
        return cls(tuple(field.zero() for _ in range(d)))

    @property
    def field(self) -> Hyperfield:
        return self.coords[0].field

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> HElem:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def scale(self, c: HElem) -> 'HPoint':
        return HPoint(tuple(mul(c, x) for x in self.coords))

    def __neg__(self) -> 'HPoint':
        return HPoint(tuple(-x for x in self.coords))

    def append(self, x: HElem) -> 'HPoint':
        return HPoint(self.coords + (x,))

    def drop(self, i: int) -> 'HPoint':
        return HPoint(self.coords[:i] + self.coords[i + 1:])

    def concat(self, other: 'HPoint') -> 'HPoint':
        return HPoint(self.coords + other.coords)

    def sort_key(self):
        return tuple(self.field.sort_key(c) for c in self.coords)

    def __str__(self) -> str:
        return '(' + ','.join(str(c) for c in self.coords) + ')'

    def __repr__(self) -> str:
        return f"{self.field.key}:{self}"


@dataclass(frozen=True)
class PointSetResult:
    """Cartesian product of per-coordinate sets"""
    coords: Tuple[HSet, ...]

    @property
    def dim(self) -> int:
        return len(self.coords)

    def contains(self, p: HPoint) -> bool:
        if p.dim != self.dim:
            raise ArityError(f"Dimension mismatch: {p.dim} vs {self.dim}")
        return all(S.contains(x) for S, x in zip(self.coords, p.coords))

    @property
    def is_finite(self) -> bool:
        return not any(S.is_balanced for S in self.coords)

    @property
    def is_singleton(self) -> bool:
        return all(S.is_singleton for S in self.coords)

    def single(self) -> HPoint:
        return HPoint(tuple(S.single() for S in self.coords))

    def points(self) -> Iterator[HPoint]:
        if not self.is_finite:
            raise UnsupportedError("Result has balanced coordinates and is infinite")
        for coords in product(*(S.elements() for S in self.coords)):
            yield HPoint(coords)

    def representatives(self) -> Iterator[HPoint]:
        for coords in product(*(S.representatives() for S in self.coords)):
            yield HPoint(coords)

    def __str__(self) -> str:
        return ' x '.join(str(S) for S in self.coords)


def sorted_points(points: Sequence[HPoint]):
    return sorted(set(points), key=lambda p: p.sort_key())
