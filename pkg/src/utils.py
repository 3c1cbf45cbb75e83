#!/usr/bin/env python3

import json
import logging
import sys
from typing import Any, Optional, Sequence, TypeVar

from .config import MASK64, SPLITMIX_GAMMA, SPLITMIX_MUL1, SPLITMIX_MUL2

T = TypeVar('T')


def setup_logging(verbose: bool = False):
    """Diagnostics go to stderr; stdout is kept for results"""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
        force=True,
    )


class SplitMix64:
    """Deterministic 64-bit generator.

    state <- state + 0x9E3779B97F4A7C15
    z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    out <- z ^ (z >> 31)          (all mod 2^64)

    Seed 0 starts with 0xE220A8397B1DCDAF.
    """

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + SPLITMIX_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * SPLITMIX_MUL1) & MASK64
        z = ((z ^ (z >> 27)) * SPLITMIX_MUL2) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Value in [0, n) by reduction mod n"""
        if n <= 0:
            raise ValueError(f"Range must be positive, got {n}")
        return self.next() % n

    def randint(self, lo: int, hi: int) -> int:
        """Value in [lo, hi]"""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.below(len(seq))]

    def sample(self, seq: Sequence[T], k: int) -> list:
        """k distinct positions, in draw order"""
        pool = list(seq)
        out = []
        for _ in range(min(k, len(pool))):
            out.append(pool.pop(self.below(len(pool))))
        return out

    def fork(self, index: int) -> 'SplitMix64':
        """Independent stream for case ``index``"""
        return SplitMix64(SplitMix64(self.state ^ (index * SPLITMIX_GAMMA & MASK64)).next())


def dump_json(data: Any, path: Optional[str] = None) -> str:
    text = json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)
    if path:
        with open(path, 'w') as f:
            f.write(text + '\n')
    return text


def print_error(exc: Exception):
    print(json.dumps({'error': type(exc).__name__, 'message': str(exc)}, ensure_ascii=False), file=sys.stderr)
