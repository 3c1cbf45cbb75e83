import pytest

from src.convex import hull_finite
from src.errors import ArityError, UnsupportedError
from src.parsing import parse_points
from src.plot import axis_order, plot_grid


def test_axis_order(S, H5, K):
    assert [str(a) for a in axis_order(S)] == ['-1', '0', '1']
    assert [str(a) for a in axis_order(H5)] == ['-t', '-1', '0', '1', 't']
    assert str(axis_order(K)[0]) == '0'


def test_infinite_instance(QxZ):
    with pytest.raises(UnsupportedError):
        axis_order(QxZ)


def test_identical_input_gives_identical_bytes(S, tmp_path):
    T = parse_points('(-1,1);(0,0);(0,1);(1,0);(1,1)', S)
    sets = [('T', T), ('hull', hull_finite(T).points), ('p', parse_points('(-1,0)', S))]
    first, second = tmp_path / 'a.svg', tmp_path / 'b.svg'
    plot_grid(S, sets, str(first), title='T and its hull')
    plot_grid(S, sets, str(second), title='T and its hull')
    data = first.read_bytes()
    assert data == second.read_bytes()
    assert data.lstrip().startswith(b'<?xml')
    assert b'<dc:date>' not in data


def test_empty_grid(S, tmp_path):
    path = tmp_path / 'grid.svg'
    plot_grid(S, [], str(path))
    assert path.stat().st_size > 0


def test_planar_only(S, tmp_path):
    with pytest.raises(ArityError):
        plot_grid(S, [('line', parse_points('(1)', S))], str(tmp_path / 'x.svg'))


def test_points_from_other_instance(S, H5, tmp_path):
    with pytest.raises(ArityError):
        plot_grid(S, [('T', parse_points('(1,t)', H5))], str(tmp_path / 'x.svg'))
