import copy
import json

import pytest

from src.errors import AxiomError, ParseError
from src.groups import group_from_name
from src.hyperfield import KRASNER_BASE, RATIONAL_BASE, SIGN_BASE, Semidirect
from src.parsing import (format_entry, format_point, parse_affine_form, parse_entry, parse_instance, parse_point,
                         parse_points, split_top)
from src.tables import SIGN_TABLE


class TestInstances:
    @pytest.mark.parametrize('spec, key', [('S', 'S'), ('K', 'K'), ('H5', 'H5'), ('Q', 'Q'),
                                           ('T', 'T@Q'), ('TR', 'TR@Q'), ('QxR', 'QxQ')])
    def test_names_and_aliases(self, spec, key):
        assert parse_instance(spec).key == key

    def test_semidirect_prefixes(self):
        assert parse_instance('T@Z') == Semidirect(KRASNER_BASE, group_from_name('Z'))
        assert parse_instance('TR@Q2') == Semidirect(SIGN_BASE, group_from_name('Q2'))
        assert parse_instance('QxZ') == Semidirect(RATIONAL_BASE, group_from_name('Z'))

    def test_other_ordering_of_five_element(self):
        plus, minus = parse_instance('H5'), parse_instance('H5-')
        assert plus != minus
        assert minus.is_positive(minus.parse_elem('-t'))

    def test_unknown(self):
        with pytest.raises(ParseError):
            parse_instance('R')
        with pytest.raises(ParseError):
            parse_instance('TR@')

    def test_table_instance(self):
        assert parse_instance('table:sign.hf') == parse_instance('S')

    def test_table_instance_must_satisfy_axioms(self, tmp_path):
        data = copy.deepcopy(SIGN_TABLE)
        data['name'] = 'broken'
        data['add']['1,1'] = ['1', '-1']
        path = tmp_path / 'broken.hf'
        path.write_text(json.dumps(data))
        with pytest.raises(AxiomError) as info:
            parse_instance(f'table:{path}')
        assert 'reversibility' in info.value.report.failed_axioms()

    def test_missing_table(self):
        with pytest.raises(ParseError):
            parse_instance('table:nowhere.hf')


class TestPoints:
    def test_sign_aliases(self, S):
        assert parse_point('(+,-,0)', S) == parse_point('(1,-1,0)', S) == parse_point('(+1,-1,0)', S)

    def test_prefix(self, S):
        p = parse_point('S:(+,-)')
        assert p.field == S
        assert format_point(p, prefix=True) == 'S:(1,-1)'

    def test_prefix_must_match(self, S):
        with pytest.raises(ParseError):
            parse_point('H5:(1,t)', S)

    def test_semidirect_coordinates(self, QxZ):
        p = parse_point('((-3/2,4),2@-1)', QxZ)
        assert str(p) == '((-3/2,4),(2,-1))'

    def test_lex_group_coordinates(self):
        f = parse_instance('TR@Q2')
        p = parse_point('((+1,[0,1]),0)', f)
        assert str(p) == '((+1,[0,1]),0)'

    def test_point_lists(self, S):
        assert len(parse_points('(1,0); (0,1) ;(1,1)', S)) == 3
        assert parse_points('', S) == []

    @pytest.mark.parametrize('text', ['1,0', '()', '(1,0', '(2,0)'])
    def test_malformed(self, S, text):
        with pytest.raises(ParseError):
            parse_point(text, S)

    def test_no_instance(self):
        with pytest.raises(ParseError):
            parse_point('(1,0)')

    def test_split_top(self):
        assert split_top('(1,0),[2,3],4') == ['(1,0)', '[2,3]', '4']
        with pytest.raises(ParseError):
            split_top('(1,0))')


class TestFormsAndEntries:
    def test_form_with_prefix(self):
        phi = parse_affine_form('TR@Q:(+1,1)*X1 + (-1,0)')
        assert str(phi) == '(+1,1)*X1 + (-1,0)'

    def test_entries(self, TR):
        B = parse_entry('balanced:(-1,2)', TR)
        assert B.is_balanced
        assert format_entry(B) == 'balanced:(+1,2)'
        assert format_entry(parse_entry('(-1,2)', TR)) == 'singleton:(-1,2)'
        assert parse_entry('singleton:0', TR).contains_zero()
