#!/usr/bin/env python3

"""Seeded samplers for elements, points and inequality systems."""

from fractions import Fraction
from typing import List

from .config import SAMPLE_COEFF_DENOM, SAMPLE_COEFF_RANGE, SAMPLE_LEVEL_DENOM, SAMPLE_LEVEL_RANGE
from .errors import UnsupportedError
from .fourier_motzkin import RealisableMatrix
from .hyperfield import RATIONAL_BASE, SIGN_BASE, HElem, HSet, Hyperfield, RationalField, Semidirect
from .points import HPoint
from .utils import SplitMix64


def sample_rational(rng: SplitMix64) -> Fraction:
    """Nonzero p/q with |p| <= 8 and 1 <= q <= 4"""
    p = rng.randint(1, SAMPLE_COEFF_RANGE) * (1 if rng.below(2) else -1)
    return Fraction(p, rng.randint(1, SAMPLE_COEFF_DENOM))


def sample_level(f: Semidirect, rng: SplitMix64):
    k = Fraction(rng.randint(-SAMPLE_LEVEL_RANGE, SAMPLE_LEVEL_RANGE))
    if f.group.dense:
        k += Fraction(rng.below(SAMPLE_LEVEL_DENOM), SAMPLE_LEVEL_DENOM)
    return f.group.level(k)


def sample_element(f: Hyperfield, rng: SplitMix64, zero_weight: int = 8) -> HElem:
    """Zero with probability 1/zero_weight, otherwise a nonzero element"""
    if rng.below(zero_weight) == 0:
        return f.zero()
    if isinstance(f, RationalField):
        return f.make(sample_rational(rng))
    if isinstance(f, Semidirect):
        if f.base == RATIONAL_BASE:
            c = sample_rational(rng)
        elif f.base == SIGN_BASE:
            c = rng.choice((1, -1))
        else:
            c = 1
        return f.make(c, sample_level(f, rng))
    if f.finite:
        return rng.choice(f.nonzero_elements())
    raise UnsupportedError(f"No sampler for {f.key}")


def sample_point(f: Hyperfield, d: int, rng: SplitMix64) -> HPoint:
    return HPoint(tuple(sample_element(f, rng) for _ in range(d)))


def sample_semidirect_points(f: Hyperfield, d: int, n: int, seed: int) -> List[HPoint]:
    """n points of (H x| G)^d from the stream of ``seed``"""
    if not isinstance(f, Semidirect):
        raise UnsupportedError(f"{f.key} is not a semidirect instance")
    rng = SplitMix64(seed)
    return [sample_point(f, d, rng) for _ in range(n)]


def sample_realisable(f: Hyperfield, rng: SplitMix64, balanced_weight: int = 6) -> HSet:
    a = sample_element(f, rng)
    if isinstance(f, Semidirect) and not a.is_zero and rng.below(balanced_weight) == 0:
        return HSet.balanced(a)
    return HSet.singleton(a)


def sample_matrix(f: Hyperfield, d: int, n: int, rng: SplitMix64, balanced: bool = True) -> RealisableMatrix:
    columns = []
    for _ in range(n):
        if balanced:
            columns.append(tuple(sample_realisable(f, rng) for _ in range(d)))
        else:
            columns.append(tuple(HSet.singleton(sample_element(f, rng)) for _ in range(d)))
    return RealisableMatrix.from_columns(f, d, columns)
