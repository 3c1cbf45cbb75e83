#!/usr/bin/env python3

"""Exact totally ordered abelian groups used as the G of a semidirect extension."""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Tuple, Union

from .errors import InstanceMismatchError, NonDenseError, ParseError

INTEGER = 'int'
RATIONAL = 'rat'
LEX = 'lex'

Number = Union[int, Fraction]


@total_ordering
@dataclass(frozen=True)
class GroupVal:
    kind: str
    parts: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.kind not in (INTEGER, RATIONAL, LEX):
            raise ParseError(f"Unknown group kind: {self.kind}")
        if self.kind != LEX and len(self.parts) != 1:
            raise ParseError("Integer and rational group values have one part")
        if self.kind == INTEGER and self.parts[0].denominator != 1:
            raise ParseError(f"Not an integer group value: {self.parts[0]}")

    @property
    def dense(self) -> bool:
        return self.kind != INTEGER

    def _check(self, other: 'GroupVal'):
        if not isinstance(other, GroupVal) or other.kind != self.kind or len(other.parts) != len(self.parts):
            raise InstanceMismatchError(f"Group values from different groups: {self} vs {other}")

    def __lt__(self, other: 'GroupVal') -> bool:
        self._check(other)
        return self.parts < other.parts

    def __add__(self, other: 'GroupVal') -> 'GroupVal':
        self._check(other)
        return GroupVal(self.kind, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __neg__(self) -> 'GroupVal':
        return GroupVal(self.kind, tuple(-a for a in self.parts))

    def __sub__(self, other: 'GroupVal') -> 'GroupVal':
        return self + (-other)

    def midpoint(self, other: 'GroupVal') -> 'GroupVal':
        """Strictly between self and other when they differ (lex order included)"""
        self._check(other)
        if not self.dense:
            raise NonDenseError("Integer group has no midpoints")
        return GroupVal(self.kind, tuple((a + b) / 2 for a, b in zip(self.parts, other.parts)))

    def __str__(self) -> str:
        if self.kind == LEX:
            return '[' + ','.join(str(p) for p in self.parts) + ']'
        return str(self.parts[0])

    def __repr__(self) -> str:
        return f"GroupVal({self})"


@dataclass(frozen=True)
class Group:
    kind: str
    rank: int = 1

    @property
    def dense(self) -> bool:
        return self.kind != INTEGER

    @property
    def name(self) -> str:
        if self.kind == INTEGER:
            return 'Z'
        if self.kind == RATIONAL:
            return 'Q'
        return f"Q{self.rank}"

    def make(self, value: Union[Number, Tuple[Number, ...], GroupVal]) -> GroupVal:
        if isinstance(value, GroupVal):
            if value.kind != self.kind or len(value.parts) != self.rank:
                raise InstanceMismatchError(f"{value} is not in group {self.name}")
            return value
        if self.kind == LEX:
            if not isinstance(value, (tuple, list)) or len(value) != self.rank:
                raise ParseError(f"Group {self.name} expects a {self.rank}-tuple, got {value!r}")
            return GroupVal(LEX, tuple(Fraction(v) for v in value))
        if isinstance(value, (tuple, list)):
            raise ParseError(f"Group {self.name} expects a number, got {value!r}")
        return GroupVal(self.kind, (Fraction(value),))

    def zero(self) -> GroupVal:
        return self.make((0,) * self.rank if self.kind == LEX else 0)

    def unit(self) -> GroupVal:
        """The step used for one-sided shifts: 1 in the leading part"""
        return self.make((1,) + (0,) * (self.rank - 1) if self.kind == LEX else 1)

    def level(self, k: Number) -> GroupVal:
        """k times the unit"""
        u = self.unit()
        return GroupVal(u.kind, tuple(Fraction(k) * p for p in u.parts))

    def parse(self, text: str) -> GroupVal:
        text = text.strip()
        try:
            if self.kind == LEX:
                if not (text.startswith('[') and text.endswith(']')):
                    raise ParseError(f"Lex group value must look like [a,b]: {text}")
                return self.make(tuple(Fraction(p) for p in text[1:-1].split(',')))
            return self.make(Fraction(text))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Bad group value {text!r}: {e}")


def group_from_name(name: str) -> Group:
    if name == 'Z':
        return Group(INTEGER)
    if name == 'Q':
        return Group(RATIONAL)
    if name.startswith('Q') and name[1:].isdigit() and int(name[1:]) >= 1:
        rank = int(name[1:])
        return Group(RATIONAL) if rank == 1 else Group(LEX, rank)
    raise ParseError(f"Unknown group: {name}")
