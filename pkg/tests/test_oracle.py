import pytest

from src.convex import CONIC, hull_finite
from src.errors import PreconditionError, UnsupportedError
from src.oracle import (SuiteReport, cross_check_separation, oracle_hull, run_caratheodory, run_farkas, run_fm,
                        run_helly, run_kakutani, run_pasch, run_radon, run_suite, sample_semidirect_points)
from src.parsing import parse_instance, parse_points


class TestOracleHull:
    @pytest.mark.parametrize('text', ['(1,-1);(-1,1)', '(1,0);(0,1)', '(1,0);(0,1);(-1,-1)', '(0,0)'])
    def test_matches_closure_over_sign(self, S, text):
        T = parse_points(text, S)
        assert oracle_hull(T) == hull_finite(T).points

    def test_matches_closure_over_five_element(self, H5):
        T = parse_points('(1,t);(-t,1)', H5)
        assert oracle_hull(T, max_len=4) == hull_finite(T).points

    def test_conic(self, S):
        T = parse_points('(1,0)', S)
        assert oracle_hull(T, CONIC) == hull_finite(T, CONIC).points

    def test_length_bound(self, S):
        with pytest.raises(PreconditionError):
            oracle_hull(parse_points('(1)', S), max_len=4)

    def test_empty(self):
        assert oracle_hull([]) == frozenset()


class TestFiniteSuites:
    def test_radon_line(self, S):
        report = run_radon(S, 1)
        assert report.passed
        assert report.cases == 27

    def test_pasch_line(self, S):
        assert run_pasch(S, 1).passed

    def test_helly_line(self, S):
        report = run_helly(S, 1, samples=50)
        assert report.passed
        assert report.cases == 27 + 50

    def test_caratheodory_line(self, S):
        assert run_caratheodory(S, 1).passed

    def test_kakutani_line(self, S):
        assert run_kakutani(S, 1).passed

    def test_pasch_plane(self, S):
        assert run_pasch(S, 2).passed

    def test_helly_plane(self, S):
        report = run_helly(S, 2)
        assert report.passed, report.failures

    def test_caratheodory_plane(self, S):
        report = run_caratheodory(S, 2)
        assert report.passed, report.failures
        assert report.cases == 2 ** 9 - 1

    def test_kakutani_plane(self, S):
        report = run_kakutani(S, 2)
        assert report.passed, report.failures

    @pytest.mark.slow
    def test_radon_plane(self, S):
        assert run_radon(S, 2).passed

    @pytest.mark.slow
    @pytest.mark.parametrize('name', ['helly', 'caratheodory', 'kakutani'])
    def test_five_element_line(self, H5, name):
        assert run_suite(name, H5, 1).passed

    def test_infinite_rejected(self, QxZ):
        with pytest.raises(UnsupportedError):
            run_radon(QxZ, 1)


class TestSemidirectSuites:
    def test_separation(self, TR):
        report = cross_check_separation(TR, trials=60, seed=3)
        assert report.passed, report.failures
        assert report.cases == 60

    def test_separation_needs_dense_semidirect(self, S):
        with pytest.raises(UnsupportedError):
            cross_check_separation(S, trials=5)

    @pytest.mark.parametrize('name', ['TR@Q', 'QxQ'])
    def test_farkas(self, name):
        report = run_farkas(parse_instance(name), trials=60, d=3)
        assert report.passed, report.failures

    def test_farkas_never_undecided_over_sign_base(self, TR):
        assert run_farkas(TR, trials=60, d=3).undecided == 0

    def test_farkas_four_variables(self, TR):
        report = run_farkas(TR, trials=1000, d=4)
        assert report.passed, report.failures
        assert report.cases == 1000
        assert report.undecided == 0

    @pytest.mark.parametrize('name', ['TR@Q', 'QxQ'])
    def test_elimination(self, name):
        report = run_fm(parse_instance(name), trials=60, d=3)
        assert report.passed, report.failures

    def test_reports_do_not_depend_on_jobs(self, TR):
        single = run_suite('farkas', TR, 3, seed=5, trials=24, jobs=1)
        pooled = run_suite('farkas', TR, 3, seed=5, trials=24, jobs=2)
        assert single.to_dict() == pooled.to_dict()

    def test_sampled_points_are_reproducible(self, QxZ):
        assert sample_semidirect_points(QxZ, 2, 5, seed=9) == sample_semidirect_points(QxZ, 2, 5, seed=9)
        with pytest.raises(UnsupportedError):
            sample_semidirect_points(parse_instance('S'), 2, 5, seed=9)


class TestReports:
    def test_unknown_suite(self, S):
        with pytest.raises(UnsupportedError):
            run_suite('minkowski', S, 1)

    def test_merge_and_timing(self):
        a = SuiteReport('radon', 'S', {'d': 1}, 3, [], 1, 0.5)
        b = SuiteReport('radon', 'S', {'d': 1}, 2, [{'case': 4}], 0, 0.25)
        merged = a.merge(b)
        assert merged.cases == 5
        assert not merged.passed
        assert merged.to_dict(timing=True)['elapsed'] == 0.75
        assert 'elapsed' not in merged.to_dict()
