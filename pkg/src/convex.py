#!/usr/bin/env python3

"""Conic and convex combinations, hulls and membership.

Over a finite hyperfield a set S is convex when a p + b q lies in S for all
p, q in S and positive a, b with 1 in a + b (conic: all positive a, b).  Hulls
are the least fixed point of that pairwise rule.  Over infinite stringent
instances membership goes through the Farkas dichotomy instead.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import chain, combinations, product
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .config import SAMPLE_COEFF_RANGE, SAMPLE_LEVEL_RANGE
from .errors import (ArityError, InstanceMismatchError, NoOrderingError, PreconditionError,
                     UnsupportedError, WitnessError)
from .forms import AffineForm
from .fourier_motzkin import SEPARATOR, UNDECIDED, FarkasCertificate, RealisableMatrix, farkas
from .hyperfield import (RATIONAL_BASE, HElem, HSet, Hyperfield, RationalField, Semidirect,
                         TableHyperfield, mul, sum_many)
from .points import HPoint, PointSetResult, sorted_points

logger = logging.getLogger(__name__)

CONIC = 'conic'
CONVEX = 'convex'
MODES = (CONIC, CONVEX)

MAX_CONVEX_SUBSETS_SPACE = 9  # points; the power set is filtered


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"Unknown mode {mode!r}, expected one of {MODES}")


def _common_field(points: Sequence[HPoint]) -> Hyperfield:
    f = points[0].field
    d = points[0].dim
    for p in points[1:]:
        if p.field != f:
            raise InstanceMismatchError("Points from different hyperfields")
        if p.dim != d:
            raise ArityError(f"Points of dimension {p.dim} and {d}")
    return f


def is_convex_coefficients(coeffs: Sequence[HElem]) -> bool:
    return sum_many(list(coeffs)).contains(coeffs[0].field.one())


def combine(points: Sequence[HPoint], coeffs: Sequence[HElem], mode: str = CONVEX) -> PointSetResult:
    """Coordinatewise sum of coeffs[i] * points[i]; repeated points are allowed"""
    _check_mode(mode)
    if not points or len(points) != len(coeffs):
        raise ArityError(f"{len(points)} points with {len(coeffs)} coefficients")
    f = _common_field(points)
    if not f.ordered:
        raise NoOrderingError(f"{f.key} is not ordered")
    for a in coeffs:
        if a.field != f:
            raise InstanceMismatchError("Coefficients and points over different hyperfields")
        if a.is_zero or not f.is_positive(a):
            raise PreconditionError(f"Coefficient {a} is not positive")
    if mode == CONVEX and not is_convex_coefficients(coeffs):
        raise PreconditionError(f"1 is not in the sum of {[str(a) for a in coeffs]}")
    return PointSetResult(tuple(
        sum_many([mul(a, p[i]) for a, p in zip(coeffs, points)]) for i in range(points[0].dim)))


@dataclass(frozen=True)
class FiniteConvexSet:
    field: Hyperfield
    dim: int
    points: FrozenSet[HPoint]
    closed: bool = True
    mode: str = CONVEX

    def __contains__(self, p: HPoint) -> bool:
        return p in self.points

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[HPoint]:
        return iter(sorted_points(list(self.points)))

    def sorted(self) -> List[HPoint]:
        return sorted_points(list(self.points))

    def to_dict(self):
        return {'hyperfield': self.field.key, 'mode': self.mode, 'count': len(self.points),
                'points': [str(p) for p in self.sorted()]}


class _IndexKernel:
    """Pairwise combination tables over element indices of one table hyperfield"""

    def __init__(self, t: TableHyperfield, mode: str):
        self.t = t
        size = len(t.names)
        positive = sorted(t.positive)
        self.positive = positive
        self.add = {k: tuple(sorted(v)) for k, v in t.add_table.items()}
        self.mul = t.mul_table
        if mode == CONVEX:
            self.pairs = [(a, b) for a in positive for b in positive if t.one_idx in t.add_table[(a, b)]]
        else:
            self.pairs = [(a, b) for a in positive for b in positive]
        # per pair of coordinates (x, y): every value of a x + b y over the allowed (a, b)
        self.coord = {}
        for x, y in product(range(size), repeat=2):
            for a, b in self.pairs:
                key = (a, b, x, y)
                self.coord[key] = self.add[(self.mul[(a, x)], self.mul[(b, y)])]

    def pair_results(self, p: Tuple[int, ...], q: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        for a, b in self.pairs:
            yield from product(*(self.coord[(a, b, x, y)] for x, y in zip(p, q)))

    def scalings(self, p: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        for a in self.positive:
            yield tuple(self.mul[(a, x)] for x in p)


@lru_cache(maxsize=None)
def _kernel(t: TableHyperfield, mode: str) -> _IndexKernel:
    return _IndexKernel(t, mode)


def _table(f: Hyperfield) -> TableHyperfield:
    if not isinstance(f, TableHyperfield):
        raise UnsupportedError(f"{f.key} is infinite; use member_conv_stringent")
    if not f.ordered:
        raise NoOrderingError(f"{f.key} is not ordered")
    return f


def _to_index(p: HPoint) -> Tuple[int, ...]:
    t = p.field
    return tuple(t.zero_idx if c.is_zero else c.payload for c in p.coords)


def _from_index(t: TableHyperfield, idx: Tuple[int, ...]) -> HPoint:
    return HPoint(tuple(t.elem(i) for i in idx))


def _closure(kernel: _IndexKernel, seed: Iterable[Tuple[int, ...]], conic: bool) -> Set[Tuple[int, ...]]:
    done: Set[Tuple[int, ...]] = set()
    frontier = list(dict.fromkeys(seed))
    while frontier:
        current = frontier.pop()
        if current in done:
            continue
        done.add(current)
        found = []
        if conic:
            found.extend(kernel.scalings(current))
        for other in list(done):
            found.extend(kernel.pair_results(current, other))
            if other != current:
                found.extend(kernel.pair_results(other, current))
        frontier.extend(r for r in found if r not in done)
    return done


@lru_cache(maxsize=1 << 16)
def _hull_indices(t: TableHyperfield, mode: str, seed: FrozenSet[Tuple[int, ...]]) -> FrozenSet[Tuple[int, ...]]:
    return frozenset(_closure(_kernel(t, mode), sorted(seed), mode == CONIC))


def hull_finite(T: Iterable[HPoint], mode: str = CONVEX, include_zero: bool = False,
                field: Optional[Hyperfield] = None, dim: Optional[int] = None) -> FiniteConvexSet:
    """Least convex (conic) set containing T over a finite ordered hyperfield"""
    _check_mode(mode)
    T = list(T)
    if T:
        field = _common_field(T)
        dim = T[0].dim
    elif field is None or dim is None:
        raise ArityError("Empty hull needs an explicit hyperfield and dimension")
    t = _table(field)
    seed = [_to_index(p) for p in T]
    if include_zero and mode == CONIC:
        seed.append((t.zero_idx,) * dim)
    points = _hull_indices(t, mode, frozenset(seed))
    logger.debug("Hull of %d points over %s: %d points", len(T), t.key, len(points))
    return FiniteConvexSet(t, dim, frozenset(_from_index(t, idx) for idx in points), True, mode)


def homogenize(T: Iterable[HPoint]) -> List[HPoint]:
    return [p.append(p.field.one()) for p in T]


def all_points(f: Hyperfield, d: int) -> List[HPoint]:
    return [HPoint(coords) for coords in product(f.elements(), repeat=d)]


def is_convex(S: Iterable[HPoint], mode: str = CONVEX) -> bool:
    """One round of the closure rule adds nothing"""
    _check_mode(mode)
    S = list(S)
    if not S:
        return True
    t = _table(_common_field(S))
    kernel = _kernel(t, mode)
    members = {_to_index(p) for p in S}
    for p in members:
        if mode == CONIC and any(r not in members for r in kernel.scalings(p)):
            return False
        for q in members:
            if any(r not in members for r in kernel.pair_results(p, q)):
                return False
    return True


def project(S: Iterable[HPoint], i: int) -> Set[HPoint]:
    """Drop coordinate i (0-based)"""
    return {p.drop(i) for p in S}


def cartesian(S: Iterable[HPoint], T: Iterable[HPoint]) -> Set[HPoint]:
    T = list(T)
    return {p.concat(q) for p in S for q in T}


def intersect(sets: Sequence[Iterable[HPoint]]) -> Set[HPoint]:
    if not sets:
        raise ArityError("Intersection of no sets")
    out = set(sets[0])
    for S in sets[1:]:
        out &= set(S)
    return out


def convex_subsets(f: Hyperfield, d: int, mode: str = CONVEX) -> List[FrozenSet[HPoint]]:
    """Every convex subset of H^d, smallest first; only for spaces of at most 9 points"""
    space = all_points(f, d)
    if len(space) > MAX_CONVEX_SUBSETS_SPACE:
        raise UnsupportedError(f"{f.key}^{d} has {len(space)} points; power set too large")
    subsets = chain.from_iterable(combinations(space, k) for k in range(len(space) + 1))
    return [frozenset(S) for S in subsets if is_convex(S, mode)]


@dataclass(frozen=True)
class Membership:
    """Answer of member_conv_stringent.

    ``member`` is None when the run was undecided.  For non-members the
    separator s satisfies: every point of T lies in HS(s) and q lies in HS(-s).
    """
    member: Optional[bool]
    certificate: FarkasCertificate
    matrix: RealisableMatrix
    weights: Tuple[HElem, ...] = ()
    separator: Optional[AffineForm] = None

    @property
    def status(self) -> str:
        if self.member is None:
            return UNDECIDED
        return 'member' if self.member else 'not-member'

    @property
    def q_form(self) -> Optional[AffineForm]:
        """Form whose open halfspace holds q and misses T"""
        return (-self.separator).canonical() if self.separator is not None else None

    def to_dict(self):
        data = {'status': self.status, 'certificate': self.certificate.to_dict()}
        if self.member:
            data['weights'] = [str(w) for w in self.weights]
        if self.separator is not None:
            data['separator'] = str(self.separator)
            data['form'] = str(self.q_form)
        return data


def homogenized_matrix(T: Sequence[HPoint], q: HPoint) -> RealisableMatrix:
    """Columns (p, 1) for p in T and (-q, -1); rows are the d + 1 coordinates"""
    f = q.field
    minus_one = f.neg(f.one())
    columns = [tuple(HSet.singleton(x) for x in p.append(f.one())) for p in T]
    columns.append(tuple(HSet.singleton(f.neg(x)) for x in q.coords) + (HSet.singleton(minus_one),))
    return RealisableMatrix.from_columns(f, q.dim + 1, columns)


def member_conv_stringent(T: Sequence[HPoint], q: HPoint, try_row_orders: bool = False) -> Membership:
    if not T:
        raise ArityError("Membership in the hull of no points")
    f = _common_field(list(T) + [q])
    M = homogenized_matrix(T, q)
    if q in T:
        lam = tuple(f.one() if p == q else f.zero() for p in T) + (f.one(),)
        cert = FarkasCertificate('kernel', lam)
        if not M.in_kernel(lam):
            raise WitnessError("Indicator weights failed verification")
        return Membership(True, cert, M, lam[:-1])
    cert = farkas(M, try_row_orders=try_row_orders)
    if cert.kind == UNDECIDED:
        return Membership(None, cert, M)
    if cert.kind == SEPARATOR:
        alpha = cert.values
        separator = AffineForm(alpha[-1], alpha[:-1])
        logger.debug("Not a member; separator %s", separator)
        return Membership(False, cert, M, separator=separator)
    lam = cert.values
    # the last row forces lambda_q > 0
    if lam[-1].is_zero:
        raise WitnessError("Kernel weight of q vanished")
    scale = f.inv(lam[-1])
    weights = tuple(mul(scale, l) for l in lam[:-1])
    return Membership(True, cert, M, weights)


def sample_convex_coefficients(f: Hyperfield, n: int, rng) -> Tuple[HElem, ...]:
    """n positive coefficients whose sum contains 1, drawn from a SplitMix64 stream"""
    if n < 1:
        raise ArityError("Need at least one coefficient")
    if isinstance(f, RationalField):
        raw = [rng.randint(1, SAMPLE_COEFF_RANGE) for _ in range(n)]
        total = sum(raw)
        return tuple(f.make(Fraction(r, total)) for r in raw)
    if isinstance(f, Semidirect):
        if not f.ordered:
            raise NoOrderingError(f"{f.key} is not ordered")
        top = 1 + rng.below(n)
        if f.base == RATIONAL_BASE:
            raw = [rng.randint(1, SAMPLE_COEFF_RANGE) for _ in range(top)]
            total = sum(raw)
            coeffs = [Fraction(r, total) for r in raw]
        else:
            coeffs = [1] * top
        out = [f.make(c, f.group.level(0)) for c in coeffs]
        for _ in range(n - top):
            c = Fraction(rng.randint(1, SAMPLE_COEFF_RANGE)) if f.base == RATIONAL_BASE else 1
            out.append(f.make(c, f.group.level(-rng.randint(1, SAMPLE_LEVEL_RANGE))))
        return tuple(rng.sample(out, len(out)))
    positive = f.positive_elements()
    for _ in range(64):
        coeffs = tuple(rng.choice(positive) for _ in range(n))
        if is_convex_coefficients(coeffs):
            return coeffs
    coeffs = (f.one(),) * n
    if not is_convex_coefficients(coeffs):
        raise UnsupportedError(f"No convex coefficients of length {n} found over {f.key}")
    return coeffs
