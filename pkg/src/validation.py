#!/usr/bin/env python3

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import FrozenSet, List, Optional, Tuple

from .hyperfield import HElem, HSet, TableHyperfield

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: Tuple[str, ...]

    def to_dict(self):
        return {'axiom': self.axiom, 'witness': list(self.witness)}


@dataclass
class AxiomReport:
    table: str
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def failed_axioms(self) -> List[str]:
        return sorted({v.axiom for v in self.violations})

    def to_dict(self):
        return {'table': self.table, 'passed': self.passed,
                'violations': [v.to_dict() for v in self.violations]}


class Validator:
    """Exhaustive checks of table hyperfields"""

    def __init__(self, verbose: bool = False):
        self.verbose = verbose

    def check_hyperfield_axioms(self, t: TableHyperfield) -> AxiomReport:
        report = AxiomReport(t.key)
        E = t.elements()
        zero, one = t.zero(), t.one()

        def fail(axiom: str, *elems: HElem):
            v = Violation(axiom, tuple(t.format_elem(e) for e in elems))
            if self.verbose:
                logger.info("Axiom violated: %s at %s", v.axiom, v.witness)
            report.violations.append(v)

        def S(x: HElem) -> HSet:
            return HSet.singleton(x)

        for a, b in product(E, repeat=2):
            if t.add(a, b) != t.add(b, a):
                fail('add-commutative', a, b)
            if t.mul(a, b) != t.mul(b, a):
                fail('mul-commutative', a, b)
        for a in E:
            if t.add(zero, a) != S(a):
                fail('add-identity', a)
            if t.mul(one, a) != a:
                fail('mul-identity', a)
            if t.mul(zero, a) != zero:
                fail('mul-zero', a)
            inverses = [b for b in E if t.add(a, b).contains_zero()]
            if inverses != [t.neg(a)]:
                fail('unique-inverse', a)
            if not a.is_zero and not any(t.mul(a, b) == one for b in E):
                fail('mul-inverse', a)
        for a, b, c in product(E, repeat=3):
            left = t.add_sets(t.add(a, b), S(c))
            right = t.add_sets(S(a), t.add(b, c))
            if left != right:
                fail('add-associative', a, b, c)
            if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)):
                fail('mul-associative', a, b, c)
            if t.add(b, c).contains(a) != t.add(a, t.neg(b)).contains(c):
                fail('reversibility', a, b, c)
            if t.add(b, c).scale(a) != t.add(t.mul(a, b), t.mul(a, c)):
                fail('distributivity', a, b, c)
        logger.debug("Axiom check of %s: %d violations", t.key, len(report.violations))
        return report

    def check_ordering(self, t: TableHyperfield, positive: FrozenSet[int]) -> bool:
        """positive + positive and positive * positive stay positive; H = P, {0}, -P disjointly"""
        P = [t.elem(i) for i in sorted(positive)]
        in_P = {e.payload for e in P}
        for a, b in product(P, repeat=2):
            if not all(c.payload in in_P for c in t.add(a, b).elements()):
                if self.verbose:
                    logger.info("Ordering not closed under addition at %s, %s", a, b)
                return False
            if t.mul(a, b).payload not in in_P:
                if self.verbose:
                    logger.info("Ordering not closed under multiplication at %s, %s", a, b)
                return False
        negatives = {t.neg(a).payload for a in P}
        if None in in_P or in_P & negatives:
            return False
        covered = in_P | negatives | {None}
        return all(e.payload in covered for e in t.elements())

    def orderings(self, t: TableHyperfield) -> List[FrozenSet[int]]:
        """Every positive set of t"""
        nonzero = [i for i in range(len(t.names)) if i != t.zero_idx]
        found = []
        for size in range(1, len(nonzero) + 1):
            for subset in combinations(nonzero, size):
                if self.check_ordering(t, frozenset(subset)):
                    found.append(frozenset(subset))
        return found

    def is_stringent(self, t: TableHyperfield) -> bool:
        return t.stringent

    def stringency_witness(self, t: TableHyperfield) -> Optional[Tuple[str, str]]:
        for a, b in product(t.elements(), repeat=2):
            if b != t.neg(a) and not t.add(a, b).is_singleton:
                return t.format_elem(a), t.format_elem(b)
        return None
