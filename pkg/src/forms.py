#!/usr/bin/env python3

"""Affine forms c0 + c1 X1 + ... + cd Xd and the halfspaces they cut out."""

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import ArityError, InstanceMismatchError, NoOrderingError, ParseError
from .hyperfield import HElem, HSet, Hyperfield, mul, sum_many
from .points import HPoint

TERM_RE = re.compile(r'^(?:(.+?)\s*[*@]\s*)?X(\d+)$')


@dataclass(frozen=True)
class AffineForm:
    constant: HElem
    coeffs: Tuple[HElem, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(self.coeffs))
        if any(c.field != self.constant.field for c in self.coeffs):
            raise InstanceMismatchError("Form coefficients from different hyperfields")

    @classmethod
    def linear(cls, coeffs: Sequence[HElem], constant: Optional[HElem] = None) -> 'AffineForm':
        if not coeffs and constant is None:
            raise ArityError("Empty form needs an explicit constant")
        field = coeffs[0].field if coeffs else constant.field
        return cls(constant if constant is not None else field.zero(), tuple(coeffs))

    @property
    def field(self) -> Hyperfield:
        return self.constant.field

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def entries(self) -> Tuple[HElem, ...]:
        """(c0, c1, ..., cd)"""
        return (self.constant,) + self.coeffs

    def scale(self, u: HElem) -> 'AffineForm':
        return AffineForm(mul(u, self.constant), tuple(mul(u, c) for c in self.coeffs))

    def __neg__(self) -> 'AffineForm':
        return AffineForm(-self.constant, tuple(-c for c in self.coeffs))

    def sort_key(self):
        return tuple(self.field.sort_key(c) for c in self.entries())

    def canonical(self) -> 'AffineForm':
        """Representative of the ray of positive multiples"""
        f = self.field
        if not f.ordered:
            return self
        if f.finite:
            return min((self.scale(u) for u in f.positive_elements()), key=lambda g: g.sort_key())
        for c in self.coeffs + (self.constant,):
            if not c.is_zero:
                return self.scale(f.inv(f.canonical_positive(c)))
        return self

    def __call__(self, p: HPoint) -> HSet:
        return evaluate(self, p)

    def __str__(self) -> str:
        one = self.field.one()
        terms = []
        for i, c in enumerate(self.coeffs, 1):
            if c.is_zero:
                continue
            terms.append(f"X{i}" if c == one else f"{c}*X{i}")
        if not self.constant.is_zero or not terms:
            terms.append(str(self.constant))
        return ' + '.join(terms)


def evaluate(phi: AffineForm, p: HPoint) -> HSet:
    if phi.dim != p.dim:
        raise ArityError(f"Form has {phi.dim} variables, point has {p.dim} coordinates")
    if p.field != phi.field:
        raise InstanceMismatchError("Form and point over different hyperfields")
    return sum_many([phi.constant] + [mul(c, x) for c, x in zip(phi.coeffs, p.coords)])


def _ordered(phi: AffineForm):
    if not phi.field.ordered:
        raise NoOrderingError(f"{phi.field.key} is not ordered")


def in_variety(phi: AffineForm, p: HPoint) -> bool:
    return evaluate(phi, p).contains_zero()


def in_open_hs(phi: AffineForm, p: HPoint) -> bool:
    _ordered(phi)
    return evaluate(phi, p).subset_of_positive()


def in_closed_hs(phi: AffineForm, p: HPoint) -> bool:
    _ordered(phi)
    return evaluate(phi, p).meets_nonnegative()


def split_terms(text: str) -> List[str]:
    """Split on top-level ' + ' (or the hyper-sum sign)"""
    text = text.replace('⊞', ' + ')
    terms, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if ch in '([':
            depth += 1
        elif ch in ')]':
            depth -= 1
        elif depth == 0 and text.startswith(' + ', i):
            terms.append(text[start:i])
            start = i + 3
            i += 3
            continue
        i += 1
    terms.append(text[start:])
    return [t.strip() for t in terms if t.strip()]


def parse_form(text: str, field: Hyperfield, dim: Optional[int] = None) -> AffineForm:
    constant = field.zero()
    seen_constant = False
    coeffs = {}
    for term in split_terms(text):
        m = TERM_RE.match(term)
        if m:
            index = int(m.group(2))
            if index < 1:
                raise ParseError(f"Variables are numbered from X1: {term}")
            if index in coeffs:
                raise ParseError(f"Variable X{index} appears twice")
            coeffs[index] = field.parse_elem(m.group(1)) if m.group(1) else field.one()
        else:
            if seen_constant:
                raise ParseError(f"Two constant terms in {text!r}")
            constant = field.parse_elem(term)
            seen_constant = True
    size = max(coeffs, default=0)
    if dim is not None:
        if size > dim:
            raise ParseError(f"Form mentions X{size} but dimension is {dim}")
        size = dim
    return AffineForm(constant, tuple(coeffs.get(i, field.zero()) for i in range(1, size + 1)))
