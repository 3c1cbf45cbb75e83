#!/usr/bin/env python3

"""Strict Fourier-Motzkin elimination over stringent, densely ordered hyperfields.

A ``RealisableMatrix`` A with d rows (variables) and n columns (inequalities)
stands for the system

    for every column j:   A_1j x_1 + ... + A_dj x_d  is strictly positive

whose solution set is sep(A).  Its positive kernel ker(A) is the set of
nonnegative, not all zero, lambda with 0 in sum_j lambda_j A_ij for every row i.
``farkas`` returns a certificate for exactly one of the two.
"""

import logging
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .config import MAX_ROW_ORDERS
from .errors import (ArityError, InfeasibleError, InstanceMismatchError, NonDenseError,
                     NoOrderingError, UnsupportedError, WeakDualityViolation, WitnessError)
from .hyperfield import (RATIONAL_BASE, HElem, HSet, Hyperfield, Semidirect, add_sets, sum_many,
                         sum_sets)

logger = logging.getLogger(__name__)

KERNEL = 'kernel'
SEPARATOR = 'separator'
UNDECIDED = 'undecided-non-generic'

PLUS, MINUS, BALANCED, ZERO = '+', '-', '•', '0'

RealisableSet = HSet


def check_realisable(A: HSet) -> HSet:
    if not (A.is_balanced or A.is_singleton):
        raise UnsupportedError(f"{A} is neither a singleton nor a balanced set")
    return A


def realisable_add(A: HSet, B: HSet) -> HSet:
    check_realisable(A)
    check_realisable(B)
    if not A.field.stringent:
        raise UnsupportedError(f"{A.field.key} is not stringent")
    return check_realisable(add_sets(A, B))


def _require_ordered_stringent(f: Hyperfield):
    if not f.ordered:
        raise NoOrderingError(f"{f.key} is not ordered")
    if not f.stringent:
        raise UnsupportedError(f"{f.key} is not stringent")


def _require_dense(f: Hyperfield):
    _require_ordered_stringent(f)
    if not f.dense:
        raise NonDenseError(f"The ordering of {f.key} is not dense; Fourier-Motzkin elimination does not apply")


@dataclass(frozen=True)
class RealisableMatrix:
    field: Hyperfield
    rows: Tuple[Tuple[HSet, ...], ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(tuple(r) for r in self.rows))
        for row in self.rows:
            if len(row) != self.n:
                raise ArityError(f"Every row needs {self.n} entries")
            for A in row:
                if A.field != self.field:
                    raise InstanceMismatchError("Matrix entries from different hyperfields")
                check_realisable(A)

    @classmethod
    def from_elements(cls, rows: Sequence[Sequence[HElem]]) -> 'RealisableMatrix':
        if not rows or not rows[0]:
            raise ArityError("Use from_columns for matrices without rows or columns")
        f = rows[0][0].field
        return cls(f, tuple(tuple(HSet.singleton(x) for x in row) for row in rows), len(rows[0]))

    @classmethod
    def from_columns(cls, f: Hyperfield, d: int, columns: Sequence[Sequence[HSet]]) -> 'RealisableMatrix':
        for col in columns:
            if len(col) != d:
                raise ArityError(f"Every column needs {d} entries")
        return cls(f, tuple(tuple(col[i] for col in columns) for i in range(d)), len(columns))

    @property
    def d(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> Tuple[HSet, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> List[Tuple[HSet, ...]]:
        return [self.column(j) for j in range(self.n)]

    def permute_rows(self, order: Sequence[int]) -> 'RealisableMatrix':
        return RealisableMatrix(self.field, tuple(self.rows[i] for i in order), self.n)

    def column_value(self, j: int, x: Sequence[HElem], upto: Optional[int] = None) -> HSet:
        """sum_i A_ij x_i over the first ``upto`` rows ({0} for no rows)"""
        k = self.d if upto is None else upto
        if len(x) < k:
            raise ArityError(f"Need {k} values, got {len(x)}")
        terms = [self.rows[i][j].scale(x[i]) for i in range(k)]
        return sum_sets(terms) if terms else HSet.singleton(self.field.zero())

    def is_solution(self, x: Sequence[HElem]) -> bool:
        if len(x) != self.d:
            raise ArityError(f"Need {self.d} values, got {len(x)}")
        return all(self.column_value(j, x).subset_of_positive() for j in range(self.n))

    def in_kernel(self, lam: Sequence[HElem]) -> bool:
        if len(lam) != self.n:
            raise ArityError(f"Need {self.n} multipliers, got {len(lam)}")
        if all(l.is_zero for l in lam):
            return False
        if any(not l.is_zero and not self.field.is_positive(l) for l in lam):
            return False
        for row in self.rows:
            if not sum_sets([A.scale(l) for A, l in zip(row, lam)]).contains_zero():
                return False
        return True

    def __str__(self) -> str:
        return '\n'.join(' '.join(str(A) for A in row) for row in self.rows)


@dataclass(frozen=True)
class Partition:
    kinds: Tuple[str, ...]

    def indices(self, kind: str) -> Tuple[int, ...]:
        return tuple(j for j, k in enumerate(self.kinds) if k == kind)

    @property
    def plus(self):
        return self.indices(PLUS)

    @property
    def minus(self):
        return self.indices(MINUS)

    @property
    def balanced(self):
        return self.indices(BALANCED)

    @property
    def zero(self):
        return self.indices(ZERO)


@dataclass(frozen=True)
class EliminationStep:
    """One elimination: the normalized matrix, its column scales and the origin of every new column"""
    normalized: RealisableMatrix
    partition: Partition
    scales: Tuple[HElem, ...]
    origins: Tuple[Tuple[int, ...], ...]  # (j, k) for pairs, (j,) for kept J0 columns
    result: RealisableMatrix

    @property
    def generic(self) -> bool:
        return not self.partition.balanced


def normalize_last_row(M: RealisableMatrix) -> Tuple[RealisableMatrix, Partition, Tuple[HElem, ...]]:
    """Scale columns by positive units so the last entry is 1, -1, 1+(-1) or 0"""
    f = M.field
    _require_ordered_stringent(f)
    if M.d == 0:
        raise ArityError("No variable to normalize")
    kinds, scales, columns = [], [], []
    for j in range(M.n):
        col = M.column(j)
        last = col[-1]
        if last.is_balanced:
            kind, s = BALANCED, f.inv(f.canonical_positive(last.base))
        else:
            a = last.single()
            if a.is_zero:
                kind, s = ZERO, f.one()
            elif f.is_positive(a):
                kind, s = PLUS, f.inv(a)
            else:
                kind, s = MINUS, f.inv(f.neg(a))
        kinds.append(kind)
        scales.append(s)
        columns.append(tuple(A.scale(s) for A in col))
    return RealisableMatrix.from_columns(f, M.d, columns), Partition(tuple(kinds)), tuple(scales)


def split_balanced_column(M: RealisableMatrix, j: int) -> RealisableMatrix:
    """Replace column j (last entry 1+(-1)) by a copy ending in 1 and a copy ending in -1"""
    f = M.field
    _require_dense(f)
    col = M.column(j)
    if not col[-1].is_balanced:
        return M
    one = f.one()
    plus = col[:-1] + (HSet.singleton(one),)
    minus = col[:-1] + (HSet.singleton(f.neg(one)),)
    columns = M.columns()
    columns[j:j + 1] = [plus, minus]
    return RealisableMatrix.from_columns(f, M.d, columns)


def expand_balanced_entries(M: RealisableMatrix) -> RealisableMatrix:
    """Over the sign base, a balanced coefficient a+(-a) may be traded for the two choices a and -a"""
    f = M.field
    if not (isinstance(f, Semidirect) and f.base != RATIONAL_BASE):
        raise UnsupportedError("Balanced coefficients split into two signs only over the signed tropical base")
    columns = []
    for col in M.columns():
        choices = [(A,) if not A.is_balanced else (HSet.singleton(A.base), HSet.singleton(f.neg(A.base)))
                   for A in col]
        columns.extend(product(*choices))
    return RealisableMatrix.from_columns(f, M.d, columns)


def eliminate_with_trace(M: RealisableMatrix) -> EliminationStep:
    f = M.field
    _require_dense(f)
    normalized, partition, scales = normalize_last_row(M)
    lower = [j for j in range(M.n) if partition.kinds[j] in (PLUS, BALANCED)]
    upper = [k for k in range(M.n) if partition.kinds[k] in (MINUS, BALANCED)]
    columns, origins = [], []
    for j in lower:
        for k in upper:
            cj, ck = normalized.column(j), normalized.column(k)
            columns.append(tuple(realisable_add(cj[i], ck[i]) for i in range(M.d - 1)))
            origins.append((j, k))
    for j in partition.zero:
        columns.append(normalized.column(j)[:-1])
        origins.append((j,))
    result = RealisableMatrix.from_columns(f, M.d - 1, columns)
    logger.debug("Eliminated X%d: %d columns -> %d (J+=%d J-=%d J•=%d J0=%d)", M.d, M.n, result.n,
                 len(partition.plus), len(partition.minus), len(partition.balanced), len(partition.zero))
    return EliminationStep(normalized, partition, scales, tuple(origins), result)


def eliminate_last_var(M: RealisableMatrix) -> RealisableMatrix:
    return eliminate_with_trace(M).result


def eliminate(M: RealisableMatrix, k: Optional[int] = None) -> List[EliminationStep]:
    """Eliminate the last k variables (all by default)"""
    k = M.d if k is None else k
    if not 0 <= k <= M.d:
        raise ArityError(f"Cannot eliminate {k} of {M.d} variables")
    trace = []
    for _ in range(k):
        step = eliminate_with_trace(M)
        trace.append(step)
        M = step.result
    return trace


def feasible_strict(M: RealisableMatrix) -> bool:
    _require_dense(M.field)
    trace = eliminate(M)
    final = trace[-1].result if trace else M
    # no variables left: every remaining column is the empty sum {0}, never positive
    return final.n == 0


def extend_solution(step: EliminationStep, prefix: Sequence[HElem]) -> HElem:
    """Value of the eliminated variable for a solution prefix of the reduced system"""
    f = step.normalized.field
    A = step.normalized
    k = A.d - 1
    lows, highs = [], []
    for j, kind in enumerate(step.partition.kinds):
        if kind == ZERO:
            continue
        U = A.column_value(j, prefix, upto=k)
        if kind in (PLUS, BALANCED):
            lows.append(f.sup_key(U.neg()))
        if kind in (MINUS, BALANCED):
            highs.append(f.inf_key(U))
    lo = max(lows) if lows else None
    hi = min(highs) if highs else None
    return f.between(lo, hi)


def back_substitute(M: RealisableMatrix, trace: Optional[List[EliminationStep]] = None) -> Tuple[HElem, ...]:
    f = M.field
    _require_dense(f)
    trace = eliminate(M) if trace is None else trace
    final = trace[-1].result if trace else M
    if final.n:
        raise InfeasibleError("System has no solution")
    x: List[HElem] = []
    for step in reversed(trace):
        x.append(extend_solution(step, x))
    solution = tuple(x)
    if not M.is_solution(solution):
        raise WitnessError(f"Back-substitution produced a non-solution {[str(v) for v in solution]}")
    return solution


def _rebuild_kernel(M: RealisableMatrix, trace: List[EliminationStep]) -> Tuple[HElem, ...]:
    f = M.field
    final = trace[-1].result if trace else M
    lam = [f.one()] * final.n
    for step in reversed(trace):
        contributions: Dict[int, List[HElem]] = {j: [] for j in range(step.normalized.n)}
        for value, origin in zip(lam, step.origins):
            for j in origin:
                contributions[j].append(value)
        lam = []
        for j in range(step.normalized.n):
            parts = contributions[j]
            value = sum_many(parts).single() if parts else f.zero()
            lam.append(f.mul(value, step.scales[j]))
    return tuple(lam)


@dataclass(frozen=True)
class FarkasCertificate:
    kind: str
    values: Tuple[HElem, ...] = ()
    row_order: Optional[Tuple[int, ...]] = None

    @property
    def is_kernel(self) -> bool:
        return self.kind == KERNEL

    @property
    def is_separator(self) -> bool:
        return self.kind == SEPARATOR

    def to_dict(self) -> Dict:
        data = {'certificate': self.kind, 'values': [str(v) for v in self.values]}
        if self.row_order is not None:
            data['row_order'] = list(self.row_order)
        return data

    @classmethod
    def from_dict(cls, f: Hyperfield, data: Dict) -> 'FarkasCertificate':
        order = data.get('row_order')
        return cls(data['certificate'], tuple(f.parse_elem(v) for v in data.get('values', [])),
                   tuple(order) if order is not None else None)


def verify_certificate(M: RealisableMatrix, cert: FarkasCertificate) -> bool:
    if cert.kind == KERNEL:
        return M.in_kernel(cert.values)
    if cert.kind == SEPARATOR:
        return len(cert.values) == M.d and M.is_solution(cert.values)
    return False


def weak_duality_holds(M: RealisableMatrix, lam: Sequence[HElem], alpha: Sequence[HElem]) -> bool:
    if M.in_kernel(lam) and M.is_solution(alpha):
        raise WeakDualityViolation(f"Both a kernel {list(map(str, lam))} and a separator "
                                   f"{list(map(str, alpha))} verify")
    return True


def _is_rational_semidirect(f: Hyperfield) -> bool:
    return isinstance(f, Semidirect) and f.base == RATIONAL_BASE


def farkas(M: RealisableMatrix, try_row_orders: bool = False) -> FarkasCertificate:
    f = M.field
    _require_dense(f)
    trace = eliminate(M)
    final = trace[-1].result if trace else M
    if final.n == 0:
        cert = FarkasCertificate(SEPARATOR, back_substitute(M, trace))
    else:
        generic = all(step.generic for step in trace)
        if _is_rational_semidirect(f) and not generic:
            logger.info("Balanced last-row entries appeared over %s; certificate undecided", f.key)
            if not try_row_orders:
                return FarkasCertificate(UNDECIDED)
            return _farkas_row_orders(M)
        cert = FarkasCertificate(KERNEL, _rebuild_kernel(M, trace))
    if not verify_certificate(M, cert):
        raise WitnessError(f"Certificate failed verification: {cert.to_dict()}")
    return cert


def _farkas_row_orders(M: RealisableMatrix) -> FarkasCertificate:
    if M.d > MAX_ROW_ORDERS:
        logger.warning("Row-order search skipped: %d rows exceeds %d", M.d, MAX_ROW_ORDERS)
        return FarkasCertificate(UNDECIDED)
    for order in permutations(range(M.d)):
        P = M.permute_rows(order)
        trace = eliminate(P)
        if all(step.generic for step in trace):
            cert = FarkasCertificate(KERNEL, _rebuild_kernel(P, trace), tuple(order))
            if M.in_kernel(cert.values):
                logger.info("Generic row order found: %s", order)
                return cert
    return FarkasCertificate(UNDECIDED)
