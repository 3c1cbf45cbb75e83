#!/usr/bin/env python3

"""Built-in hyperfield homomorphisms and push-forward of forms."""

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import InstanceMismatchError, UnsupportedError
from .forms import AffineForm
from .hyperfield import (KRASNER_BASE, RATIONAL_BASE, SIGN_BASE, HElem, HSet, Hyperfield,
                         RationalField, Semidirect)
from .points import HPoint
from .tables import krasner_hyperfield, sign_hyperfield

HOMOMORPHISMS = ('sgn', 'tau', 'signed_valuation', 'valuation', 'trivial')


@dataclass(frozen=True)
class Homomorphism:
    name: str
    source: Hyperfield
    target: Hyperfield
    rule: Callable[[HElem], HElem]

    def __call__(self, a: HElem) -> HElem:
        if a.field != self.source:
            raise InstanceMismatchError(f"{self.name} is defined on {self.source.key}, not {a.field.key}")
        return self.target.zero() if a.is_zero else self.rule(a)

    def point(self, p: HPoint) -> HPoint:
        return HPoint(tuple(self(x) for x in p.coords))

    def image(self, xs: Iterable[HElem]) -> HSet:
        return HSet.finite(self.target, (self(x) for x in xs))


def sgn_hom(a: HElem) -> HElem:
    """Sign of an element of an ordered hyperfield, as an element of the sign hyperfield"""
    S = sign_hyperfield()
    if a.is_zero:
        return S.zero()
    return S.one() if a.field.is_positive(a) else S.neg(S.one())


def get_homomorphism(name: str, source: Hyperfield) -> Homomorphism:
    S = sign_hyperfield()
    if name == 'sgn':
        if not source.ordered:
            raise UnsupportedError(f"sgn needs an ordered hyperfield, {source.key} is not")
        return Homomorphism(name, source, S, sgn_hom)
    if name == 'tau':
        if not isinstance(source, RationalField):
            raise UnsupportedError("tau is the quotient map Q -> Q/Q_{>0}; its source is Q")
        return Homomorphism(name, source, S, sgn_hom)
    if name == 'trivial':
        K = krasner_hyperfield()
        return Homomorphism(name, source, K, lambda a: K.one())
    if name in ('signed_valuation', 'valuation') and isinstance(source, Semidirect):
        if name == 'signed_valuation' and source.base == RATIONAL_BASE:
            target = Semidirect(SIGN_BASE, source.group)
            return Homomorphism(name, source, target,
                                lambda a: target.make(1 if source.coeff(a) > 0 else -1, source.level(a)))
        if name == 'valuation' and source.base != KRASNER_BASE:
            target = Semidirect(KRASNER_BASE, source.group)
            return Homomorphism(name, source, target, lambda a: target.make(1, source.level(a)))
    raise UnsupportedError(f"No homomorphism {name!r} from {source.key}")


def push_forward_poly(f: Homomorphism, phi: AffineForm) -> AffineForm:
    """Apply f to every coefficient"""
    return AffineForm(f(phi.constant), tuple(f(c) for c in phi.coeffs))
