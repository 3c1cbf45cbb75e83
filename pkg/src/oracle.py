#!/usr/bin/env python3

"""Brute-force oracles and exhaustive theorem suites.

Every suite is a list of cases and a check per case.  A check returns None on
success, ``UNDECIDED_CASE`` for non-generic inputs, or a dict describing a
replayable failure.  Cases can be spread over a process pool; results are
merged by case index so reports do not depend on the worker count.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, islice, product
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .config import (CARATHEODORY_MAX_SUBSET, DEFAULT_SEED, DEFAULT_TRIALS, GRID_LEVELS,
                     HELLY_SAMPLED_FAMILIES, MATRIX_MAX_D, MATRIX_MAX_N, ORACLE_MAX_LEN)
from .convex import (CONVEX, all_points, combine, convex_subsets, hull_finite, is_convex_coefficients,
                     member_conv_stringent, sample_convex_coefficients)
from .errors import KakutaniCounterexample, PreconditionError, UnsupportedError, WeakDualityViolation
from .forms import in_open_hs
from .fourier_motzkin import (KERNEL, UNDECIDED, RealisableMatrix, eliminate_with_trace, extend_solution,
                              farkas, weak_duality_holds)
from .hemispace import kakutani_separate
from .hyperfield import RATIONAL_BASE, HElem, Hyperfield, Semidirect
from .points import HPoint, sorted_points
from .sampling import sample_element, sample_matrix, sample_point, sample_semidirect_points
from .utils import SplitMix64

logger = logging.getLogger(__name__)

UNDECIDED_CASE = 'undecided'

__all__ = ['SuiteReport', 'oracle_hull', 'run_radon', 'run_helly', 'run_caratheodory', 'run_pasch',
           'run_kakutani', 'cross_check_separation', 'run_farkas', 'run_fm', 'run_suite',
           'sample_semidirect_points']


@dataclass
class SuiteReport:
    name: str
    instance: str
    params: Dict[str, Any] = field(default_factory=dict)
    cases: int = 0
    failures: List[Dict] = field(default_factory=list)
    undecided: int = 0
    elapsed: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: 'SuiteReport') -> 'SuiteReport':
        return SuiteReport(self.name, self.instance, self.params, self.cases + other.cases,
                           self.failures + other.failures, self.undecided + other.undecided,
                           None if self.elapsed is None or other.elapsed is None else self.elapsed + other.elapsed)

    def to_dict(self, timing: bool = False) -> Dict:
        data = {'suite': self.name, 'instance': self.instance, 'params': self.params,
                'cases': self.cases, 'failures': self.failures, 'undecided': self.undecided,
                'passed': self.passed}
        if timing and self.elapsed is not None:
            data['elapsed'] = round(self.elapsed, 3)
        return data


def _finite_ordered(f: Hyperfield):
    if not f.finite:
        raise UnsupportedError(f"{f.key} is infinite")
    if not f.ordered:
        raise UnsupportedError(f"{f.key} is not ordered")


def oracle_hull(T: Sequence[HPoint], mode: str = CONVEX, max_len: Optional[int] = None) -> FrozenSet[HPoint]:
    """Union of every combination of at most max_len points of T (default d + 1)"""
    T = sorted_points(list(T))
    if not T:
        return frozenset()
    f, d = T[0].field, T[0].dim
    _finite_ordered(f)
    bound = len(f.elements()) * d
    length = max_len or ORACLE_MAX_LEN or d + 1
    if length > bound:
        raise PreconditionError(f"Combination length {length} exceeds |H| * d = {bound}")
    positive = f.positive_elements()
    out = set()
    for k in range(1, length + 1):
        for chosen in combinations_with_replacement(T, k):
            for coeffs in product(positive, repeat=k):
                if mode == CONVEX and not is_convex_coefficients(coeffs):
                    continue
                out.update(combine(list(chosen), list(coeffs), mode).points())
    return frozenset(out)


class Suite:
    name = 'suite'

    def __init__(self, f: Hyperfield, d: int, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS):
        self.f = f
        self.d = d
        self.seed = seed
        self.trials = trials

    def params(self) -> Dict[str, Any]:
        return {'d': self.d}

    def cases(self) -> List:
        raise NotImplementedError

    def check(self, case) -> Any:
        raise NotImplementedError

    def hull(self, points) -> FrozenSet[HPoint]:
        return hull_finite(points, field=self.f, dim=self.d).points


def _check_chunk(args) -> List[Tuple[int, Any]]:
    suite, start, chunk = args
    return [(start + i, suite.check(case)) for i, case in enumerate(chunk)]


def run(suite: Suite, jobs: int = 1) -> SuiteReport:
    started = time.monotonic()
    cases = suite.cases()
    if jobs > 1 and len(cases) > 1:
        size = -(-len(cases) // (jobs * 4))
        chunks = [(suite, i, cases[i:i + size]) for i in range(0, len(cases), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = [r for part in pool.map(_check_chunk, chunks) for r in part]
    else:
        outcomes = _check_chunk((suite, 0, cases))
    outcomes.sort(key=lambda r: r[0])
    report = SuiteReport(suite.name, suite.f.key, suite.params(), len(cases))
    for index, outcome in outcomes:
        if outcome == UNDECIDED_CASE:
            report.undecided += 1
        elif outcome is not None:
            report.failures.append(dict(outcome, case=index))
    report.elapsed = time.monotonic() - started
    logger.info("Suite %s over %s: %d cases, %d failures, %d undecided", report.name, report.instance,
                report.cases, len(report.failures), report.undecided)
    return report


def _strs(points) -> List[str]:
    return [str(p) for p in points]


class RadonSuite(Suite):
    """Every d + 2 points split into two parts whose hulls meet"""
    name = 'radon'

    def cases(self):
        _finite_ordered(self.f)
        return list(product(sorted_points(all_points(self.f, self.d)), repeat=self.d + 2))

    def check(self, case):
        k = len(case)
        for size in range(1, k):
            for part in combinations(range(k), size):
                if 0 not in part:
                    continue
                rest = [case[i] for i in range(k) if i not in part]
                if self.hull([case[i] for i in part]) & self.hull(rest):
                    return None
        return {'points': _strs(case)}


class HellySuite(Suite):
    """d + 2 convex sets, every d + 1 of them meeting, have a common point"""
    name = 'helly'

    def __init__(self, f, d, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS, samples: int = HELLY_SAMPLED_FAMILIES):
        super().__init__(f, d, seed, trials)
        self.samples = samples

    def params(self):
        return {'d': self.d, 'seed': self.seed, 'samples': self.samples}

    def cases(self):
        _finite_ordered(self.f)
        space = sorted_points(all_points(self.f, self.d))
        cases = [('tuple', w) for w in product(space, repeat=self.d + 2)]
        rng = SplitMix64(self.seed)
        pool = convex_subsets(self.f, self.d) if len(space) <= 9 else None
        for _ in range(self.samples):
            size = self.d + 2 + rng.below(2)
            if pool is not None:
                family = tuple(rng.choice(pool) for _ in range(size))
            else:
                family = tuple(self.hull(rng.sample(space, 1 + rng.below(3))) for _ in range(size))
            cases.append(('family', family))
        return cases

    def check(self, case):
        kind, data = case
        if kind == 'tuple':
            family = [self.hull([w for i, w in enumerate(data) if i != j]) for j in range(len(data))]
        else:
            family = [frozenset(S) for S in data]
            for sub in combinations(family, self.d + 1):
                if not frozenset.intersection(*sub):
                    return None
        if frozenset.intersection(*family):
            return None
        return {'kind': kind, 'sets': [_strs(sorted_points(list(S))) for S in family]}


class CaratheodorySuite(Suite):
    """Every hull point is in the hull of at most d + 1 of the generators"""
    name = 'caratheodory'

    def __init__(self, f, d, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS, max_subset: Optional[int] = None):
        super().__init__(f, d, seed, trials)
        self.max_subset = max_subset

    def params(self):
        return {'d': self.d, 'max_subset': self.max_subset}

    def cases(self):
        _finite_ordered(self.f)
        space = sorted_points(all_points(self.f, self.d))
        top = self.max_subset or (len(space) if len(space) <= 9 else CARATHEODORY_MAX_SUBSET)
        return [T for k in range(1, top + 1) for T in combinations(space, k)]

    def check(self, T):
        small = [self.hull(U) for k in range(1, min(len(T), self.d + 1) + 1) for U in combinations(T, k)]
        missing = [x for x in self.hull(T) if not any(x in H for H in small)]
        if missing:
            return {'points': _strs(T), 'missing': _strs(sorted_points(missing))}
        return None


class PaschSuite(Suite):
    name = 'pasch'

    def cases(self):
        _finite_ordered(self.f)
        return list(product(sorted_points(all_points(self.f, self.d)), repeat=3))

    def check(self, case):
        r, q1, q2 = case
        for p1 in sorted_points(list(self.hull([r, q1]))):
            for p2 in sorted_points(list(self.hull([r, q2]))):
                if not self.hull([q1, p2]) & self.hull([q2, p1]):
                    return {'r': str(r), 'q1': str(q1), 'q2': str(q2), 'p1': str(p1), 'p2': str(p2)}
        return None


class KakutaniSuite(Suite):
    """Disjoint convex pairs are separated by a hemispace"""
    name = 'kakutani'

    def params(self):
        return {'d': self.d, 'seed': self.seed, 'trials': self.trials}

    def cases(self):
        _finite_ordered(self.f)
        space = sorted_points(all_points(self.f, self.d))
        if len(space) <= 9:
            pool = sorted(convex_subsets(self.f, self.d), key=lambda S: (len(S), _strs(sorted_points(list(S)))))
            return [(A, B) for A in pool for B in pool if A and not A & B]
        rng = SplitMix64(self.seed)
        cases = []
        while len(cases) < self.trials:
            A = self.hull(rng.sample(space, 1 + rng.below(3)))
            B = self.hull(rng.sample(space, 1 + rng.below(3)))
            if not A & B:
                cases.append((A, B))
        return cases

    def check(self, case):
        A, B = case
        try:
            kakutani_separate(A, B, self.f, self.d)
        except KakutaniCounterexample:
            return {'A': _strs(sorted_points(list(A))), 'B': _strs(sorted_points(list(B)))}
        return None


def _first(iterable, n: int) -> list:
    return list(islice(iterable, n))


class SeparationSuite(Suite):
    """member_conv_stringent against known members and verified separators"""
    name = 'separation'

    def params(self):
        return {'d': self.d, 'seed': self.seed, 'trials': self.trials}

    def cases(self):
        _dense_semidirect(self.f)
        return list(range(self.trials))

    def check(self, index):
        rng = SplitMix64(self.seed).fork(index)
        T = [sample_point(self.f, self.d, rng) for _ in range(1 + rng.below(4))]
        mode = rng.below(4)
        known_member = False
        if mode == 0:
            q = rng.choice(T)
            known_member = True
        elif mode == 1:
            coeffs = sample_convex_coefficients(self.f, len(T), rng)
            q = rng.choice(_first(combine(T, coeffs).representatives(), 16))
            known_member = True
        else:
            q = sample_point(self.f, self.d, rng)
        result = member_conv_stringent(T, q)
        witness = {'T': _strs(T), 'q': str(q)}
        if result.member is None:
            return UNDECIDED_CASE
        if result.member:
            if not result.matrix.in_kernel(result.certificate.values):
                return dict(witness, reason='kernel does not verify')
            return None
        if known_member:
            return dict(witness, reason='member reported as separated')
        sep = result.separator
        if in_open_hs(sep, q) or not all(in_open_hs(sep, p) for p in T):
            return dict(witness, reason='separator does not separate', separator=str(sep))
        for _ in range(3):
            coeffs = sample_convex_coefficients(self.f, len(T), rng)
            for x in _first(combine(T, coeffs).representatives(), 16):
                if not in_open_hs(sep, x):
                    return dict(witness, reason='hull point outside separator', point=str(x), separator=str(sep))
        return None


def _grid_positive(f: Semidirect) -> List[HElem]:
    return [f.make(1, f.group.level(g)) for g in GRID_LEVELS]


def _dense_semidirect(f: Hyperfield):
    if not isinstance(f, Semidirect) or not f.dense:
        raise UnsupportedError(f"Needs a dense semidirect instance, got {f.key}")


class FarkasSuite(Suite):
    """Exactly one certificate per random matrix; grid search never finds the other kind"""
    name = 'farkas'

    def __init__(self, f, d=MATRIX_MAX_D, seed=DEFAULT_SEED, trials=DEFAULT_TRIALS, try_row_orders: bool = False):
        super().__init__(f, d, seed, trials)
        self.try_row_orders = try_row_orders

    def params(self):
        return {'max_d': self.d, 'max_n': MATRIX_MAX_N, 'seed': self.seed, 'trials': self.trials,
                'try_row_orders': self.try_row_orders}

    def cases(self):
        _dense_semidirect(self.f)
        return list(range(self.trials))

    def matrix(self, index: int) -> RealisableMatrix:
        rng = SplitMix64(self.seed).fork(index)
        return sample_matrix(self.f, 1 + rng.below(self.d), 1 + rng.below(MATRIX_MAX_N), rng)

    def check(self, index):
        M = self.matrix(index)
        cert = farkas(M, try_row_orders=self.try_row_orders)
        if cert.kind == UNDECIDED:
            return UNDECIDED_CASE
        positive = [self.f.zero()] + _grid_positive(self.f)
        try:
            if cert.kind == KERNEL:
                if M.d <= 2:
                    values = positive + [self.f.neg(x) for x in positive[1:]]
                    for alpha in product(values, repeat=M.d):
                        weak_duality_holds(M, cert.values, alpha)
            else:
                for lam in product(positive, repeat=M.n):
                    weak_duality_holds(M, lam, cert.values)
        except WeakDualityViolation as e:
            return {'matrix': str(M), 'reason': str(e)}
        return None


class EliminationSuite(Suite):
    """Sampled solutions project into the eliminated system; its solutions extend back"""
    name = 'fm'

    def params(self):
        return {'max_d': self.d, 'seed': self.seed, 'trials': self.trials}

    def cases(self):
        _dense_semidirect(self.f)
        return list(range(self.trials))

    def check(self, index):
        rng = SplitMix64(self.seed).fork(index)
        d = 1 + rng.below(self.d)
        M = sample_matrix(self.f, d, 1 + rng.below(MATRIX_MAX_N), rng)
        step = eliminate_with_trace(M)
        exact = step.generic or self.f.base != RATIONAL_BASE
        for _ in range(16):
            x = tuple(sample_element(self.f, rng) for _ in range(d))
            if exact and M.is_solution(x) and not step.result.is_solution(x[:-1]):
                return {'matrix': str(M), 'solution': [str(v) for v in x], 'reason': 'projection'}
            y = x[:-1]
            if step.result.is_solution(y):
                lifted = y + (extend_solution(step, y),)
                if not M.is_solution(lifted):
                    return {'matrix': str(M), 'solution': [str(v) for v in y], 'reason': 'lift'}
        return None if exact else UNDECIDED_CASE


SUITE_CLASSES = {cls.name: cls for cls in (RadonSuite, HellySuite, CaratheodorySuite, PaschSuite, KakutaniSuite,
                                           SeparationSuite, FarkasSuite, EliminationSuite)}


def run_suite(name: str, f: Hyperfield, d: int, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS,
              jobs: int = 1, **options) -> SuiteReport:
    if name not in SUITE_CLASSES:
        raise UnsupportedError(f"Unknown suite {name!r}; choose from {sorted(SUITE_CLASSES)}")
    return run(SUITE_CLASSES[name](f, d, seed=seed, trials=trials, **options), jobs)


def run_radon(f: Hyperfield, d: int, jobs: int = 1) -> SuiteReport:
    return run(RadonSuite(f, d), jobs)


def run_helly(f: Hyperfield, d: int, seed: int = DEFAULT_SEED, samples: int = HELLY_SAMPLED_FAMILIES,
              jobs: int = 1) -> SuiteReport:
    return run(HellySuite(f, d, seed, samples=samples), jobs)


def run_caratheodory(f: Hyperfield, d: int, max_subset: Optional[int] = None, jobs: int = 1) -> SuiteReport:
    return run(CaratheodorySuite(f, d, max_subset=max_subset), jobs)


def run_pasch(f: Hyperfield, d: int, jobs: int = 1) -> SuiteReport:
    return run(PaschSuite(f, d), jobs)


def run_kakutani(f: Hyperfield, d: int, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS,
                 jobs: int = 1) -> SuiteReport:
    return run(KakutaniSuite(f, d, seed, trials), jobs)


def cross_check_separation(f: Hyperfield, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, d: int = 2,
                           jobs: int = 1) -> SuiteReport:
    return run(SeparationSuite(f, d, seed, trials), jobs)


def run_farkas(f: Hyperfield, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, d: int = MATRIX_MAX_D,
               try_row_orders: bool = False, jobs: int = 1) -> SuiteReport:
    return run(FarkasSuite(f, d, seed, trials, try_row_orders=try_row_orders), jobs)


def run_fm(f: Hyperfield, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED, d: int = MATRIX_MAX_D,
           jobs: int = 1) -> SuiteReport:
    return run(EliminationSuite(f, d, seed, trials), jobs)
