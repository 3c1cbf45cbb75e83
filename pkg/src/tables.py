#!/usr/bin/env python3

"""Table hyperfield files and the built-in finite hyperfields.

A table file is JSON::

    {
      "name": "S",
      "elements": ["0", "1", "-1"],
      "zero": "0", "one": "1",
      "neg": {"1": "-1", ...},
      "mul": {"1,-1": "-1", ...},
      "add": {"1,-1": ["0", "1", "-1"], ...},
      "positive": ["1"]
    }

Only one of "a,b" / "b,a" needs to be given.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, Tuple

from .errors import TableFormatError
from .hyperfield import TableHyperfield

logger = logging.getLogger(__name__)

SIGN_TABLE = {
    'name': 'S',
    'elements': ['0', '1', '-1'],
    'zero': '0', 'one': '1',
    'neg': {'0': '0', '1': '-1', '-1': '1'},
    'mul': {'0,0': '0', '0,1': '0', '0,-1': '0', '1,1': '1', '1,-1': '-1', '-1,-1': '1'},
    'add': {'0,0': ['0'], '0,1': ['1'], '0,-1': ['-1'], '1,1': ['1'],
            '1,-1': ['0', '1', '-1'], '-1,-1': ['-1']},
    'positive': ['1'],
}

KRASNER_TABLE = {
    'name': 'K',
    'elements': ['0', '1'],
    'zero': '0', 'one': '1',
    'neg': {'0': '0', '1': '1'},
    'mul': {'0,0': '0', '0,1': '0', '1,1': '1'},
    'add': {'0,0': ['0'], '0,1': ['1'], '1,1': ['0', '1']},
}

# R((t)) modulo nonzero squares: sign of the leading coefficient and parity of the valuation
FIVE_ELEMENT_TABLE = {
    'name': 'H5',
    'elements': ['0', '1', 't', '-t', '-1'],
    'zero': '0', 'one': '1',
    'neg': {'0': '0', '1': '-1', 't': '-t', '-t': 't', '-1': '1'},
    'mul': {'0,0': '0', '0,1': '0', '0,t': '0', '0,-t': '0', '0,-1': '0',
            '1,1': '1', '1,t': 't', '1,-t': '-t', '1,-1': '-1',
            't,t': '1', 't,-t': '-1', 't,-1': '-t',
            '-t,-t': '1', '-t,-1': 't',
            '-1,-1': '1'},
    'add': {'0,0': ['0'], '0,1': ['1'], '0,t': ['t'], '0,-t': ['-t'], '0,-1': ['-1'],
            '1,1': ['1'], '1,t': ['1', 't'], '1,-t': ['1', '-t'], '1,-1': ['0', '1', 't', '-t', '-1'],
            't,t': ['t'], 't,-t': ['0', '1', 't', '-t', '-1'], 't,-1': ['t', '-1'],
            '-t,-t': ['-t'], '-t,-1': ['-t', '-1'],
            '-1,-1': ['-1']},
    'positive': ['1', 't'],
}


def _pair_key(text: str, index: Dict[str, int]) -> Tuple[int, int]:
    parts = text.split(',')
    if len(parts) != 2:
        raise TableFormatError(f"Table key must be 'a,b': {text!r}")
    try:
        return index[parts[0].strip()], index[parts[1].strip()]
    except KeyError as e:
        raise TableFormatError(f"Unknown element {e} in key {text!r}")


def table_from_dict(data: Dict, name: str = None) -> TableHyperfield:
    missing = [k for k in ('elements', 'zero', 'one', 'neg', 'mul', 'add') if k not in data]
    if missing:
        raise TableFormatError("Missing table keys: " + ", ".join(missing))
    names = list(data['elements'])
    if len(set(names)) != len(names):
        raise TableFormatError("Duplicate element names")
    index = {n: i for i, n in enumerate(names)}

    def idx(n: str) -> int:
        if n not in index:
            raise TableFormatError(f"Unknown element {n!r}")
        return index[n]

    add: Dict[Tuple[int, int], FrozenSet[int]] = {}
    for key, value in data['add'].items():
        i, j = _pair_key(key, index)
        entry = frozenset(idx(n) for n in value)
        if not entry:
            raise TableFormatError(f"Empty sum for {key}")
        if (j, i) in add and add[(j, i)] != entry:
            raise TableFormatError(f"Addition is not commutative at {key}")
        add[(i, j)] = add[(j, i)] = entry
    mul: Dict[Tuple[int, int], int] = {}
    for key, value in data['mul'].items():
        i, j = _pair_key(key, index)
        if (j, i) in mul and mul[(j, i)] != idx(value):
            raise TableFormatError(f"Multiplication is not commutative at {key}")
        mul[(i, j)] = mul[(j, i)] = idx(value)
    neg_map = data['neg']
    if set(neg_map) != set(names):
        raise TableFormatError("neg must be given for every element")
    neg = [idx(neg_map[n]) for n in names]
    for i in range(len(names)):
        for j in range(len(names)):
            if (i, j) not in add:
                raise TableFormatError(f"Addition table is not total: missing {names[i]},{names[j]}")
            if (i, j) not in mul:
                raise TableFormatError(f"Multiplication table is not total: missing {names[i]},{names[j]}")
    positive = data.get('positive')
    return TableHyperfield(name or data.get('name', 'table'), names, idx(data['zero']), idx(data['one']),
                           add, mul, neg, frozenset(idx(n) for n in positive) if positive is not None else None)


def load_table(path: str) -> TableHyperfield:
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise TableFormatError(f"Error loading table file {path}: {e}")
    logger.debug("Loaded table %s from %s", data.get('name'), path)
    return table_from_dict(data, data.get('name') or Path(path).stem)


def dump_table(t: TableHyperfield) -> Dict:
    names = t.names
    data = {
        'name': t.name,
        'elements': names,
        'zero': names[t.zero_idx],
        'one': names[t.one_idx],
        'neg': {names[i]: names[t.neg_table[i]] for i in range(len(names))},
        'mul': {f"{names[i]},{names[j]}": names[t.mul_table[(i, j)]]
                for i in range(len(names)) for j in range(i, len(names))},
        'add': {f"{names[i]},{names[j]}": [names[k] for k in sorted(t.add_table[(i, j)])]
                for i in range(len(names)) for j in range(i, len(names))},
    }
    if t.positive is not None:
        data['positive'] = [names[k] for k in sorted(t.positive)]
    return data


@lru_cache(maxsize=None)
def sign_hyperfield() -> TableHyperfield:
    return table_from_dict(SIGN_TABLE)


@lru_cache(maxsize=None)
def krasner_hyperfield() -> TableHyperfield:
    return table_from_dict(KRASNER_TABLE)


@lru_cache(maxsize=None)
def five_element_hyperfield(t_positive: bool = True) -> TableHyperfield:
    """The hyperfield R((t))/squares, ordered by t > 0 (or t < 0)"""
    if t_positive:
        return table_from_dict(FIVE_ELEMENT_TABLE)
    data = dict(FIVE_ELEMENT_TABLE, positive=['1', '-t'])
    return table_from_dict(data, 'H5-')
