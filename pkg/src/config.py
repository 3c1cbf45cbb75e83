#!/usr/bin/env python3

import json
import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import dotenv_values

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = 'hyperconvex_config.json'
SEED_ENV = 'HYPERCONVEX_SEED'

# Suite defaults
DEFAULT_SEED = 0
DEFAULT_TRIALS = 500
DEFAULT_JOBS = 1
DEFAULT_HYPERFIELD = 'S'
DEFAULT_D = 2

# SplitMix64 PRNG
SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
SPLITMIX_MUL2 = 0x94D049BB133111EB
MASK64 = (1 << 64) - 1

# Sampling ranges for semidirect points
SAMPLE_COEFF_RANGE = 8  # rational coefficients numerator in [-8, 8] \ {0}
SAMPLE_COEFF_DENOM = 4  # ... over denominators 1..4
SAMPLE_LEVEL_RANGE = 4  # group values in {-4, ..., 4}
SAMPLE_LEVEL_DENOM = 2  # dense groups also take halves

# Coefficient grid for brute-force kernel and separator searches
GRID_LEVELS = (-1, 0, 1)

# Helly suite: explicit families sampled on top of the reduction
HELLY_SAMPLED_FAMILIES = 2000

# Row-order search for non-generic inputs
MAX_ROW_ORDERS = 6

# Combination length for the oracle hull; None means d + 1
ORACLE_MAX_LEN: Optional[int] = None

# Five-element hyperfield Caratheodory suite only looks at subsets of this size
CARATHEODORY_MAX_SUBSET = 3

# Matrices sampled by the Farkas and elimination suites
MATRIX_MAX_D = 4
MATRIX_MAX_N = 4

SUITES = ('radon', 'helly', 'caratheodory', 'pasch', 'kakutani', 'separation', 'farkas', 'fm')


def env_seed(dotenv_path: str = '.env') -> Optional[int]:
    """HYPERCONVEX_SEED from the environment, else from a .env file in the working directory"""
    value = os.environ.get(SEED_ENV)
    if value is None:
        value = dotenv_values(dotenv_path).get(SEED_ENV)
    if value is None or value == '':
        return None
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {value!r}")


@dataclass
class Config:
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    jobs: int = DEFAULT_JOBS
    hyperfield: str = DEFAULT_HYPERFIELD
    d: int = DEFAULT_D
    try_row_orders: bool = False
    timing: bool = False
    output: Optional[str] = None
    verbose: bool = False

    def __init__(self, args):
        """Initialize config from command line args or config file"""
        config = {}
        path = getattr(args, 'config', None)
        if path:
            try:
                with open(path) as f:
                    config = json.load(f)
            except FileNotFoundError:
                if path != DEFAULT_CONFIG:
                    raise ValueError(f"Config file not found: {path}")
            except json.JSONDecodeError as e:
                raise ValueError(f"Error loading config file {path}: {e}")

        # Command line args override the environment, which overrides the config file
        seed = _arg(args, 'seed')
        if seed is None:
            seed = env_seed()
        self.seed = seed if seed is not None else config.get('seed', DEFAULT_SEED)
        self.trials = _pick(args, config, 'trials', DEFAULT_TRIALS)
        self.jobs = _pick(args, config, 'jobs', DEFAULT_JOBS)
        self.hyperfield = _pick(args, config, 'hyperfield', DEFAULT_HYPERFIELD)
        self.d = _pick(args, config, 'd', DEFAULT_D)
        self.try_row_orders = bool(_arg(args, 'try_row_orders') or config.get('try_row_orders', False))
        self.timing = bool(_arg(args, 'timing') or config.get('timing', False))
        self.output = _pick(args, config, 'output', None)
        self.verbose = bool(_arg(args, 'verbose'))

        self.validate()

    def validate(self):
        """Validate all configuration fields"""
        problems = []
        for name in ('seed', 'trials', 'jobs', 'd'):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                problems.append(f"{name} must be an integer")
        if not problems:
            if self.seed < 0:
                problems.append("seed must be nonnegative")
            if self.trials < 1:
                problems.append("trials must be positive")
            if self.jobs < 1:
                problems.append("jobs must be positive")
            if self.d < 1:
                problems.append("d must be positive")
        if not isinstance(self.hyperfield, str) or not self.hyperfield:
            problems.append("hyperfield must be an instance name")

        if problems:
            raise ValueError(
                "Invalid configuration: " + ", ".join(problems) + "\n"
                "Use --config=<config.json> or provide parameters via command line"
            )


def _arg(args, name):
    return getattr(args, name, None)


def _pick(args, config, name, default):
    value = _arg(args, name)
    if value is not None:
        return value
    return config.get(name, default)
