#!/usr/bin/env python3

"""Instance names, point, form and system literals (grammar in README.md)."""

import logging
import os
import re
from pathlib import Path
from typing import List, Optional, Tuple

from .errors import AxiomError, ParseError
from .forms import AffineForm, parse_form
from .fourier_motzkin import RealisableMatrix
from .groups import group_from_name
from .hyperfield import KRASNER_BASE, RATIONAL_BASE, SIGN_BASE, HSet, Hyperfield, RationalField, Semidirect
from .points import HPoint
from .tables import five_element_hyperfield, krasner_hyperfield, load_table, sign_hyperfield
from .validation import Validator

logger = logging.getLogger(__name__)

TABLE_DIR = Path(__file__).resolve().parent.parent / 'tables'

PREFIXES = {'T@': KRASNER_BASE, 'Kx': KRASNER_BASE, 'TR@': SIGN_BASE, 'Sx': SIGN_BASE, 'Qx': RATIONAL_BASE}
ALIASES = {'T': 'T@Q', 'TR': 'TR@Q', 'QxR': 'QxQ', 'SxR': 'SxQ', 'T@R': 'T@Q', 'TR@R': 'TR@Q'}


def resolve_table(path: str) -> str:
    if os.path.exists(path):
        return path
    candidate = TABLE_DIR / path
    if candidate.exists():
        return str(candidate)
    raise ParseError(f"Table file not found: {path}")


def parse_instance(spec: str) -> Hyperfield:
    spec = spec.strip()
    spec = ALIASES.get(spec, spec)
    if spec == 'S':
        return sign_hyperfield()
    if spec == 'K':
        return krasner_hyperfield()
    if spec == 'H5':
        return five_element_hyperfield()
    if spec == 'H5-':
        return five_element_hyperfield(t_positive=False)
    if spec == 'Q':
        return RationalField()
    if spec.startswith('table:'):
        t = load_table(resolve_table(spec[len('table:'):]))
        report = Validator().check_hyperfield_axioms(t)
        if not report.passed:
            raise AxiomError(f"Table {t.key} fails: {', '.join(report.failed_axioms())}", report)
        return t
    for prefix, base in PREFIXES.items():
        if spec.startswith(prefix) and len(spec) > len(prefix):
            return Semidirect(base, group_from_name(spec[len(prefix):]))
    raise ParseError(f"Unknown hyperfield {spec!r}")


def split_prefix(text: str) -> Tuple[Optional[str], str]:
    """'S:(+,-)' -> ('S', '(+,-)'); elements never contain ':'"""
    text = text.strip()
    if ':' not in text:
        return None, text
    head, body = text.rsplit(':', 1)
    return head.strip(), body.strip()


def split_top(text: str, sep: str = ',') -> List[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in '([':
            depth += 1
        elif ch in ')]':
            depth -= 1
            if depth < 0:
                raise ParseError(f"Unbalanced brackets in {text!r}")
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise ParseError(f"Unbalanced brackets in {text!r}")
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _with_instance(text: str, f: Optional[Hyperfield]) -> Tuple[Hyperfield, str]:
    prefix, body = split_prefix(text)
    if prefix:
        g = parse_instance(prefix)
        if f is not None and g != f:
            raise ParseError(f"Literal is over {g.key}, expected {f.key}")
        f = g
    if f is None:
        raise ParseError(f"No hyperfield given for {text!r}")
    return f, body


def parse_point(text: str, f: Optional[Hyperfield] = None) -> HPoint:
    f, body = _with_instance(text, f)
    if not (body.startswith('(') and body.endswith(')')):
        raise ParseError(f"Point must be parenthesised: {body!r}")
    inner = body[1:-1].strip()
    if not inner:
        raise ParseError("Points need at least one coordinate")
    return HPoint(tuple(f.parse_elem(c) for c in split_top(inner)))


def parse_points(text: str, f: Optional[Hyperfield] = None) -> List[HPoint]:
    """Points separated by ';'"""
    return [parse_point(p, f) for p in split_top(text, ';') if p]


def parse_affine_form(text: str, f: Optional[Hyperfield] = None, dim: Optional[int] = None) -> AffineForm:
    f, body = _with_instance(text, f)
    return parse_form(body, f, dim)


def format_point(p: HPoint, prefix: bool = False) -> str:
    return f"{p.field.key}:{p}" if prefix else str(p)


def parse_entry(text: str, f: Hyperfield) -> HSet:
    if text.startswith('singleton:'):
        return HSet.singleton(f.parse_elem(text[len('singleton:'):]))
    if text.startswith('balanced:'):
        a = f.parse_elem(text[len('balanced:'):])
        return HSet.balanced(a)
    return HSet.singleton(f.parse_elem(text))


def format_entry(A: HSet) -> str:
    if A.is_balanced:
        return f"balanced:{A.base}"
    return f"singleton:{A.single()}"


def parse_system(text: str) -> RealisableMatrix:
    """'instance <spec>' then one inequality per line, one entry per variable"""
    f = None
    columns = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if f is None:
            m = re.match(r'^instance\s*:?\s*(\S+)$', line)
            if not m:
                raise ParseError(f"Line {number}: system files start with 'instance <hyperfield>'")
            f = parse_instance(m.group(1))
            continue
        try:
            columns.append(tuple(parse_entry(tok, f) for tok in line.split()))
        except ParseError as e:
            raise ParseError(f"Line {number}: {e}")
    if f is None:
        raise ParseError("Empty system file")
    if not columns:
        raise ParseError("System has no inequalities")
    d = len(columns[0])
    return RealisableMatrix.from_columns(f, d, columns)


def load_system(path: str) -> RealisableMatrix:
    try:
        with open(path) as fh:
            return parse_system(fh.read())
    except OSError as e:
        raise ParseError(f"Cannot read system file {path}: {e}")


def format_system(M: RealisableMatrix) -> str:
    lines = [f"instance {M.field.key}"]
    for col in M.columns():
        lines.append(' '.join(format_entry(A) for A in col))
    return '\n'.join(lines) + '\n'
