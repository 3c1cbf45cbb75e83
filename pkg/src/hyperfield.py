#!/usr/bin/env python3

"""Hyperfield instances and their multivalued arithmetic.

Three families are implemented:

* ``TableHyperfield``: finite hyperfields given by explicit tables
  (the sign hyperfield, the Krasner hyperfield, user tables).
* ``RationalField``: the ordered field of rationals.
* ``Semidirect``: H x| G for a base H in {Krasner, sign, rationals} and an
  exact ordered group G.  The tropical and signed tropical hyperfields are the
  Krasner and sign cases.

Elements are ``HElem`` values, sums are ``HSet`` values.  Over the infinite
stringent instances a sum is either a singleton or the balanced set a + (-a),
which is kept symbolic.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import (ArityError, HyperfieldZeroDivisionError, InfeasibleError,
                     InstanceMismatchError, NoOrderingError, ParseError, UnsupportedError)
from .groups import Group, GroupVal

logger = logging.getLogger(__name__)

KRASNER_BASE = 'K'
SIGN_BASE = 'S'
RATIONAL_BASE = 'Q'


@dataclass(frozen=True)
class HElem:
    field: 'Hyperfield'
    payload: Any

    @property
    def is_zero(self) -> bool:
        return self.payload is None

    def __neg__(self) -> 'HElem':
        return self.field.neg(self)

    def __mul__(self, other: 'HElem') -> 'HElem':
        return mul(self, other)

    def __str__(self) -> str:
        return self.field.format_elem(self)

    def __repr__(self) -> str:
        return f"{self.field.key}:{self}"


@dataclass(frozen=True)
class HSet:
    """Finite set of elements, or the balanced set base + (-base)."""
    field: 'Hyperfield'
    elems: Tuple[HElem, ...] = ()
    base: Optional[HElem] = None

    @classmethod
    def finite(cls, field: 'Hyperfield', elems: Iterable[HElem]) -> 'HSet':
        unique = {e.payload: e for e in elems}
        ordered = sorted(unique.values(), key=field.sort_key)
        if not ordered:
            raise ArityError("Hyperfield sums are never empty")
        return cls(field, tuple(ordered))

    @classmethod
    def singleton(cls, x: HElem) -> 'HSet':
        return cls(x.field, (x,))

    @classmethod
    def balanced(cls, a: HElem) -> 'HSet':
        if a.is_zero:
            raise ArityError("Balanced set of zero is {0}; use a singleton")
        return a.field.balanced_of(a)

    @property
    def is_balanced(self) -> bool:
        return self.base is not None

    @property
    def is_singleton(self) -> bool:
        return self.base is None and len(self.elems) == 1

    def single(self) -> HElem:
        if not self.is_singleton:
            raise UnsupportedError(f"Expected a singleton, got {self}")
        return self.elems[0]

    def elements(self) -> Tuple[HElem, ...]:
        if self.is_balanced:
            raise UnsupportedError(f"{self} is infinite")
        return self.elems

    def contains(self, x: HElem) -> bool:
        _same(self.field, x.field)
        if self.is_balanced:
            return self.field.in_balanced(self.base, x)
        return any(e.payload == x.payload for e in self.elems)

    def contains_zero(self) -> bool:
        if self.is_balanced:
            return True
        return any(e.is_zero for e in self.elems)

    def subset_of_positive(self) -> bool:
        if self.is_balanced:
            return False
        return all(self.field.is_positive(e) for e in self.elems)

    def meets_nonnegative(self) -> bool:
        if self.is_balanced:
            return True
        return any(e.is_zero or self.field.is_positive(e) for e in self.elems)

    def neg(self) -> 'HSet':
        if self.is_balanced:
            return self
        return HSet.finite(self.field, (self.field.neg(e) for e in self.elems))

    def scale(self, c: HElem) -> 'HSet':
        """c (.) A"""
        _same(self.field, c.field)
        if c.is_zero:
            return HSet.singleton(self.field.zero())
        if self.is_balanced:
            return self.field.balanced_of(mul(c, self.base))
        return HSet.finite(self.field, (mul(c, e) for e in self.elems))

    def representatives(self) -> Tuple[HElem, ...]:
        """All elements when finite, a fixed handful of members when balanced"""
        if self.is_balanced:
            return self.field.balanced_representatives(self.base)
        return self.elems

    def __str__(self) -> str:
        if self.is_balanced:
            return f"{self.base}+-{self.base}"
        return '{' + ', '.join(str(e) for e in self.elems) + '}'


def _same(f: 'Hyperfield', g: 'Hyperfield'):
    if f != g:
        raise InstanceMismatchError(f"Elements from different hyperfields: {f.key} vs {g.key}")


class Hyperfield:
    """Common interface; subclasses define the arithmetic."""

    key = 'abstract'
    finite = False
    ordered = False
    stringent = True
    dense = False

    def __eq__(self, other) -> bool:
        return isinstance(other, Hyperfield) and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.key}>"

    def zero(self) -> HElem:
        return HElem(self, None)

    def one(self) -> HElem:
        raise NotImplementedError

    def elements(self) -> List[HElem]:
        raise UnsupportedError(f"{self.key} is infinite")

    def nonzero_elements(self) -> List[HElem]:
        return [e for e in self.elements() if not e.is_zero]

    def positive_elements(self) -> List[HElem]:
        return [e for e in self.elements() if self.is_positive(e)]

    def add(self, a: HElem, b: HElem) -> HSet:
        raise NotImplementedError

    def neg(self, a: HElem) -> HElem:
        raise NotImplementedError

    def mul(self, a: HElem, b: HElem) -> HElem:
        raise NotImplementedError

    def inv(self, a: HElem) -> HElem:
        raise NotImplementedError

    def is_positive(self, a: HElem) -> bool:
        raise NoOrderingError(f"{self.key} is not ordered")

    def sort_key(self, a: HElem):
        raise NotImplementedError

    def parse_elem(self, text: str) -> HElem:
        raise NotImplementedError

    def format_elem(self, a: HElem) -> str:
        raise NotImplementedError

    # balanced sets only exist over the infinite stringent instances
    def balanced_of(self, a: HElem) -> HSet:
        return self.add(a, self.neg(a))

    def in_balanced(self, base: HElem, x: HElem) -> bool:
        raise UnsupportedError(f"{self.key} has no symbolic balanced sets")

    def balanced_representatives(self, base: HElem) -> Tuple[HElem, ...]:
        raise UnsupportedError(f"{self.key} has no symbolic balanced sets")

    def add_sets(self, A: HSet, B: HSet) -> HSet:
        """A + B as the union of a + b over a in A, b in B"""
        out: Dict[Any, HElem] = {}
        for a in A.elements():
            for b in B.elements():
                for c in self.add(a, b).elements():
                    out[c.payload] = c
        return HSet.finite(self, out.values())

    # total order keys, stringent ordered infinite instances only
    def order_key(self, a: HElem):
        raise UnsupportedError(f"{self.key} has no total order key")

    def sup_key(self, A: HSet):
        """Key k with: x is above every element of A iff order_key(x) > k"""
        if A.is_balanced:
            raise UnsupportedError(f"{self.key} has no symbolic balanced sets")
        return max(self.order_key(e) for e in A.elems)

    def inf_key(self, A: HSet):
        if A.is_balanced:
            raise UnsupportedError(f"{self.key} has no symbolic balanced sets")
        return min(self.order_key(e) for e in A.elems)

    def between(self, lo, hi) -> HElem:
        """An element whose key lies strictly between two bound keys (None = unbounded)"""
        raise UnsupportedError(f"{self.key} is not densely ordered")

    def canonical_positive(self, a: HElem) -> HElem:
        """The positive one of a, -a"""
        return a if self.is_positive(a) else self.neg(a)


class TableHyperfield(Hyperfield):
    finite = True
    dense = False

    def __init__(self, name: str, names: Sequence[str], zero: int, one: int,
                 add: Dict[Tuple[int, int], FrozenSet[int]], mul: Dict[Tuple[int, int], int],
                 neg: Sequence[int], positive: Optional[FrozenSet[int]] = None):
        self.name = name
        self.key = name
        self.names = list(names)
        self.zero_idx = zero
        self.one_idx = one
        self.add_table = dict(add)
        self.mul_table = dict(mul)
        self.neg_table = list(neg)
        self.positive = frozenset(positive) if positive is not None else None
        self.ordered = self.positive is not None
        size = len(self.names)
        for i, j in product(range(size), repeat=2):
            if (i, j) not in self.add_table or (i, j) not in self.mul_table:
                raise ParseError(f"Table {name} is not total at ({self.names[i]},{self.names[j]})")
        self.stringent = all(
            len(self.add_table[(i, j)]) == 1
            for i, j in product(range(size), repeat=2) if j != self.neg_table[i])
        self._inverse = {}
        for i in range(size):
            for j in range(size):
                if self.mul_table[(i, j)] == one:
                    self._inverse.setdefault(i, j)
        self._contents = (
            tuple(self.names), zero, one,
            tuple(sorted((k, tuple(sorted(v))) for k, v in self.add_table.items())),
            tuple(sorted(self.mul_table.items())), tuple(self.neg_table),
            tuple(sorted(self.positive)) if self.ordered else None)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TableHyperfield) and other.key == self.key
                and other._contents == self._contents)

    def __hash__(self) -> int:
        return hash(self._contents)

    def _idx(self, a: HElem) -> int:
        _same(self, a.field)
        return self.zero_idx if a.payload is None else a.payload

    def elem(self, i: int) -> HElem:
        if not 0 <= i < len(self.names):
            raise ParseError(f"No element {i} in {self.key}")
        return HElem(self, None if i == self.zero_idx else i)

    def one(self) -> HElem:
        return self.elem(self.one_idx)

    def elements(self) -> List[HElem]:
        return [self.elem(i) for i in range(len(self.names))]

    def add(self, a: HElem, b: HElem) -> HSet:
        return HSet.finite(self, (self.elem(k) for k in self.add_table[(self._idx(a), self._idx(b))]))

    def neg(self, a: HElem) -> HElem:
        return self.elem(self.neg_table[self._idx(a)])

    def mul(self, a: HElem, b: HElem) -> HElem:
        return self.elem(self.mul_table[(self._idx(a), self._idx(b))])

    def inv(self, a: HElem) -> HElem:
        i = self._idx(a)
        if i == self.zero_idx:
            raise HyperfieldZeroDivisionError("Zero has no inverse")
        if i not in self._inverse:
            raise HyperfieldZeroDivisionError(f"{self.names[i]} has no inverse in {self.key}")
        return self.elem(self._inverse[i])

    def is_positive(self, a: HElem) -> bool:
        if self.positive is None:
            raise NoOrderingError(f"{self.key} is not ordered")
        return self._idx(a) in self.positive

    def with_positive(self, positive: Optional[FrozenSet[int]], name: Optional[str] = None) -> 'TableHyperfield':
        return TableHyperfield(name or self.name, self.names, self.zero_idx, self.one_idx,
                               self.add_table, self.mul_table, self.neg_table, positive)

    def sort_key(self, a: HElem):
        return self._idx(a)

    def index_of(self, name: str) -> int:
        aliases = {'+': '1', '+1': '1', '-': '-1', '𝟙': '1', '𝟘': '0'}
        if name in self.names:
            return self.names.index(name)
        if aliases.get(name) in self.names:
            return self.names.index(aliases[name])
        raise ParseError(f"Unknown element {name!r} of {self.key}")

    def parse_elem(self, text: str) -> HElem:
        return self.elem(self.index_of(text.strip()))

    def format_elem(self, a: HElem) -> str:
        return self.names[self._idx(a)]


class RationalField(Hyperfield):
    key = 'Q'
    ordered = True
    dense = True

    def make(self, value) -> HElem:
        value = Fraction(value)
        return HElem(self, value if value != 0 else None)

    def _val(self, a: HElem) -> Fraction:
        _same(self, a.field)
        return Fraction(0) if a.payload is None else a.payload

    def value(self, a: HElem) -> Fraction:
        return self._val(a)

    def one(self) -> HElem:
        return self.make(1)

    def add(self, a: HElem, b: HElem) -> HSet:
        return HSet.singleton(self.make(self._val(a) + self._val(b)))

    def add_sets(self, A: HSet, B: HSet) -> HSet:
        return HSet.finite(self, (self.add(a, b).single() for a in A.elements() for b in B.elements()))

    def neg(self, a: HElem) -> HElem:
        return self.make(-self._val(a))

    def mul(self, a: HElem, b: HElem) -> HElem:
        return self.make(self._val(a) * self._val(b))

    def inv(self, a: HElem) -> HElem:
        if a.is_zero:
            raise HyperfieldZeroDivisionError("Zero has no inverse")
        return self.make(1 / self._val(a))

    def is_positive(self, a: HElem) -> bool:
        return self._val(a) > 0

    def sort_key(self, a: HElem):
        return self._val(a)

    def order_key(self, a: HElem):
        return self._val(a)

    def between(self, lo, hi) -> HElem:
        if lo is None and hi is None:
            return self.one()
        if lo is None:
            return self.make(hi - 1)
        if hi is None:
            return self.make(lo + 1)
        if not lo < hi:
            raise InfeasibleError(f"Empty interval ({lo}, {hi})")
        return self.make((lo + hi) / 2)

    def parse_elem(self, text: str) -> HElem:
        try:
            return self.make(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Bad rational {text!r}: {e}")

    def format_elem(self, a: HElem) -> str:
        return str(self._val(a))


class Semidirect(Hyperfield):
    """H x| G with H one of the Krasner, sign or rational bases."""

    def __init__(self, base: str, group: Group):
        if base not in (KRASNER_BASE, SIGN_BASE, RATIONAL_BASE):
            raise ParseError(f"Unknown semidirect base: {base}")
        self.base = base
        self.group = group
        prefix = {KRASNER_BASE: 'T@', SIGN_BASE: 'TR@', RATIONAL_BASE: 'Qx'}[base]
        self.key = prefix + group.name
        self.ordered = base != KRASNER_BASE
        self.dense = base == RATIONAL_BASE or (base == SIGN_BASE and group.dense)

    def make(self, coeff, g) -> HElem:
        if self.base == RATIONAL_BASE:
            coeff = Fraction(coeff)
            if coeff == 0:
                raise ParseError("Rational coefficient of a semidirect pair must be nonzero")
        elif self.base == SIGN_BASE:
            if coeff not in (1, -1):
                raise ParseError(f"Sign coefficient must be +1 or -1, got {coeff}")
            coeff = int(coeff)
        else:
            if coeff != 1:
                raise ParseError(f"Krasner coefficient must be 1, got {coeff}")
            coeff = 1
        return HElem(self, (coeff, self.group.make(g)))

    def _pair(self, a: HElem):
        _same(self, a.field)
        return a.payload

    def coeff(self, a: HElem):
        return self._pair(a)[0]

    def level(self, a: HElem) -> GroupVal:
        return self._pair(a)[1]

    def one(self) -> HElem:
        return self.make(1, self.group.zero())

    def _unit_coeff(self):
        return Fraction(1) if self.base == RATIONAL_BASE else 1

    def _base_sum(self, c1, c2):
        """c1 + c2 in the base; None means zero lies in the base sum"""
        if self.base == KRASNER_BASE:
            return None
        if self.base == SIGN_BASE:
            return c1 if c1 == c2 else None
        total = c1 + c2
        return total if total != 0 else None

    def add(self, a: HElem, b: HElem) -> HSet:
        _same(self, a.field)
        _same(self, b.field)
        if a.is_zero:
            return HSet.singleton(b)
        if b.is_zero:
            return HSet.singleton(a)
        (c1, g1), (c2, g2) = a.payload, b.payload
        if g1 > g2:
            return HSet.singleton(a)
        if g1 < g2:
            return HSet.singleton(b)
        c = self._base_sum(c1, c2)
        if c is None:
            return self.balanced_of(a)
        return HSet.singleton(HElem(self, (c, g1)))

    def balanced_of(self, a: HElem) -> HSet:
        if a.is_zero:
            return HSet.singleton(a)
        return HSet(self, (), HElem(self, (self._unit_coeff(), self.level(a))))

    def _survives(self, h: GroupVal, g: GroupVal) -> bool:
        """A singleton at level h is unchanged by adding the balanced set at level g"""
        return h >= g if self.base == RATIONAL_BASE else h > g

    def in_balanced(self, base: HElem, x: HElem) -> bool:
        _same(self, x.field)
        if x.is_zero:
            return True
        return not self._survives(self.level(x), self.level(base))

    def balanced_representatives(self, base: HElem) -> Tuple[HElem, ...]:
        g = self.level(base)
        lower = g - self.group.unit()
        one = self._unit_coeff()
        reps = [self.zero()]
        if self.base != RATIONAL_BASE:
            reps.append(HElem(self, (one, g)))
        reps.append(HElem(self, (one, lower)))
        if self.base != KRASNER_BASE:
            if self.base == SIGN_BASE:
                reps.append(HElem(self, (-one, g)))
            reps.append(HElem(self, (-one, lower)))
        if self.base == RATIONAL_BASE:
            reps.extend([HElem(self, (Fraction(7, 2), lower)), HElem(self, (Fraction(-5), lower))])
        return tuple(reps)

    def add_sets(self, A: HSet, B: HSet) -> HSet:
        for S in (A, B):
            if not S.is_balanced and not S.is_singleton:
                raise UnsupportedError(f"{S} is not realisable over {self.key}")
        if not A.is_balanced and not B.is_balanced:
            return self.add(A.single(), B.single())
        if A.is_balanced and B.is_balanced:
            return A if self.level(A.base) >= self.level(B.base) else B
        s, bal = (A.single(), B) if B.is_balanced else (B.single(), A)
        if s.is_zero or self._survives(self.level(s), self.level(bal.base)):
            return HSet.singleton(s) if not s.is_zero else bal
        return bal

    def neg(self, a: HElem) -> HElem:
        if a.is_zero:
            return a
        c, g = self._pair(a)
        return a if self.base == KRASNER_BASE else HElem(self, (-c, g))

    def mul(self, a: HElem, b: HElem) -> HElem:
        _same(self, a.field)
        _same(self, b.field)
        if a.is_zero or b.is_zero:
            return self.zero()
        (c1, g1), (c2, g2) = a.payload, b.payload
        return HElem(self, (c1 * c2, g1 + g2))

    def inv(self, a: HElem) -> HElem:
        if a.is_zero:
            raise HyperfieldZeroDivisionError("Zero has no inverse")
        c, g = self._pair(a)
        c_inv = Fraction(1) / c if self.base == RATIONAL_BASE else c
        return HElem(self, (c_inv, -g))

    def is_positive(self, a: HElem) -> bool:
        if self.base == KRASNER_BASE:
            raise NoOrderingError(f"{self.key} is not ordered")
        _same(self, a.field)
        return not a.is_zero and a.payload[0] > 0

    def sort_key(self, a: HElem):
        if a.is_zero:
            return (0,)
        c, g = self._pair(a)
        return (1, c, g.parts)

    def order_key(self, a: HElem):
        if not self.ordered:
            raise NoOrderingError(f"{self.key} is not ordered")
        if a.is_zero:
            return (0,)
        c, g = self._pair(a)
        if self.base == SIGN_BASE:
            return (1, g) if c > 0 else (-1, -g)
        return (1, g, c) if c > 0 else (-1, -g, c)

    def sup_key(self, A: HSet):
        if not A.is_balanced:
            return super().sup_key(A)
        g = self.level(A.base)
        return (1, g) if self.base == SIGN_BASE else (1, g, Fraction(0))

    def inf_key(self, A: HSet):
        if not A.is_balanced:
            return super().inf_key(A)
        g = self.level(A.base)
        return (-1, -g) if self.base == SIGN_BASE else (-1, -g, Fraction(0))

    def between(self, lo, hi) -> HElem:
        """An element strictly between two bound keys (None = unbounded).

        Same-sign bounds meet at the group midpoint over the sign base; over the
        rational base the coefficient is halved at the higher level, which covers
        a balanced bound at that level. A one-sided bound moves one group unit
        away. Bounds of opposite sign give zero.
        """
        if not self.dense:
            raise UnsupportedError(f"{self.key} is not densely ordered")
        if lo is not None and hi is not None and not lo < hi:
            raise InfeasibleError(f"Empty interval between {lo} and {hi}")
        unit = self.group.unit()
        if lo is None and hi is None:
            return self.one()
        if hi is None:
            s, g, c = self._unkey(lo)
            if s == 0:
                return self.one()
            return self._elem(c or s, g + unit if s > 0 else g - unit)
        if lo is None:
            s, g, c = self._unkey(hi)
            if s == 0:
                return self.neg(self.one())
            return self._elem(c or s, g - unit if s > 0 else g + unit)
        ls, lg, lc = self._unkey(lo)
        hs, hg, hc = self._unkey(hi)
        if ls < 0 < hs:
            return self.zero()
        sign = self.base == SIGN_BASE
        if ls == 0:
            return self._elem(1, hg - unit) if sign else self._elem(hc / 2, hg)
        if hs == 0:
            return self._elem(-1, lg - unit) if sign else self._elem(lc / 2, lg)
        if sign:
            return self._elem(ls, lg.midpoint(hg))
        if ls > 0:
            return self._elem(hc / 2, hg) if lg < hg else self._elem((lc + hc) / 2, hg)
        return self._elem(lc / 2, lg) if lg > hg else self._elem((lc + hc) / 2, lg)

    def _unkey(self, key):
        """(sign, level, coefficient) of an order key; coefficient 0 marks a balanced bound"""
        s = key[0]
        if s == 0:
            return 0, None, None
        g = key[1] if s > 0 else -key[1]
        return s, g, key[2] if self.base == RATIONAL_BASE else s

    def _elem(self, coeff, g: GroupVal) -> HElem:
        if self.base == RATIONAL_BASE:
            coeff = Fraction(coeff)
        return HElem(self, (coeff, g))

    def canonical_positive(self, a: HElem) -> HElem:
        if self.base == KRASNER_BASE:
            return a
        return super().canonical_positive(a)

    def parse_elem(self, text: str) -> HElem:
        text = text.strip()
        if text in ('0', '-inf', '𝟘'):
            return self.zero()
        if text.startswith('(') and text.endswith(')'):
            inner = text[1:-1]
            if ',' not in inner:
                raise ParseError(f"Semidirect element must be (c,g): {text}")
            c_text, g_text = inner.split(',', 1)
        elif '@' in text:
            c_text, g_text = text.split('@', 1)
        else:
            raise ParseError(f"Semidirect element must be (c,g) or c@g: {text}")
        c_text = c_text.strip()
        if self.base == RATIONAL_BASE:
            try:
                coeff = Fraction(c_text)
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"Bad coefficient {c_text!r}: {e}")
        else:
            signs = {'+': 1, '+1': 1, '1': 1, '-': -1, '-1': -1}
            if c_text not in signs:
                raise ParseError(f"Bad sign coefficient {c_text!r}")
            coeff = signs[c_text]
        return self.make(coeff, self.group.parse(g_text))

    def format_elem(self, a: HElem) -> str:
        if a.is_zero:
            return '0'
        c, g = self._pair(a)
        if self.base == SIGN_BASE:
            c_text = '+1' if c > 0 else '-1'
        else:
            c_text = str(c)
        return f"({c_text},{g})"


# Operations on elements, checked for a common instance

def add(a: HElem, b: HElem) -> HSet:
    _same(a.field, b.field)
    return a.field.add(a, b)


def add_sets(A: HSet, B: HSet) -> HSet:
    _same(A.field, B.field)
    return A.field.add_sets(A, B)


def sum_many(xs: Sequence[HElem]) -> HSet:
    if not xs:
        raise ArityError("sum_many needs at least one element")
    field = xs[0].field
    total = HSet.singleton(xs[0])
    for x in xs[1:]:
        _same(field, x.field)
        total = field.add_sets(total, HSet.singleton(x))
    return total


def sum_sets(sets: Sequence[HSet]) -> HSet:
    if not sets:
        raise ArityError("sum_sets needs at least one set")
    total = sets[0]
    for S in sets[1:]:
        total = add_sets(total, S)
    return total


def neg(a: HElem) -> HElem:
    return a.field.neg(a)


def mul(a: HElem, b: HElem) -> HElem:
    _same(a.field, b.field)
    return a.field.mul(a, b)


def inv(a: HElem) -> HElem:
    return a.field.inv(a)


def is_positive(a: HElem) -> bool:
    return a.field.is_positive(a)


def is_negative(a: HElem) -> bool:
    return a.field.is_positive(a.field.neg(a))


def lt(a: HElem, b: HElem) -> bool:
    """a < b iff b + (-a) lies inside the positive cone"""
    return add(b, neg(a)).subset_of_positive()


def le(a: HElem, b: HElem) -> bool:
    return add(b, neg(a)).contains_zero() or lt(a, b)


def le_sets(A: HSet, B: HSet) -> bool:
    _same(A.field, B.field)
    field = A.field
    if not field.ordered:
        raise NoOrderingError(f"{field.key} is not ordered")
    if A == B:
        return True
    if not A.is_balanced and not B.is_balanced:
        return all(le(a, b) for a in A.elems for b in B.elems)
    if not field.stringent:
        raise UnsupportedError("Set comparison needs a stringent instance")
    if A.is_balanced and B.is_balanced:
        return False
    if A.is_balanced:
        return all(field.order_key(b) >= field.sup_key(A) for b in B.elems)
    return all(field.order_key(a) <= field.inf_key(B) for a in A.elems)
