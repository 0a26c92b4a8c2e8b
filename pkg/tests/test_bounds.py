from fractions import Fraction

import pytest

from kgap.core.bounds import (
    GapRecord,
    chi_cycle_power,
    chi_path_power,
    diameter_bound_improved,
    diameter_bound_main,
    f,
    f_closed_form,
    gap,
    gap_from,
    h_gap_bound,
    max_improved_s,
    moore_bound,
    palette_improved,
    palette_main,
    vertex_bound_main,
)
from kgap.core.errors import InvalidParameterError
from kgap.core.generators import petersen_graph


@pytest.mark.parametrize(
    "k,delta,expected",
    [(0, 3, 0), (1, 3, 3), (2, 2, 4), (2, 3, 9), (3, 3, 21), (3, 4, 52), (17, 3, 393213)],
)
def test_f_values(k, delta, expected):
    assert f(k, delta) == expected


@pytest.mark.parametrize("delta", range(3, 11))
def test_f_closed_form_agrees(delta):
    for k in range(1, 21):
        assert f(k, delta) == f_closed_form(k, delta)


def test_f_rejects_bad_arguments():
    with pytest.raises(InvalidParameterError):
        f(-1, 3)
    with pytest.raises(InvalidParameterError):
        f(2, 1)
    with pytest.raises(InvalidParameterError):
        f_closed_form(2, 2)


def test_chi_closed_forms():
    assert chi_path_power(3, 5) == 3
    assert chi_path_power(12, 3) == 4
    assert chi_cycle_power(5, 2) == 5
    assert chi_cycle_power(7, 2) == 4
    assert chi_cycle_power(10, 3) == 5
    assert chi_cycle_power(4, 5) == 4


def test_palettes():
    assert palette_main(3, 3) == 21
    assert palette_main(4, 3) == 44
    assert palette_improved(17, 3, 1) == 393213 - 3
    with pytest.raises(InvalidParameterError):
        palette_main(2, 3)
    with pytest.raises(InvalidParameterError):
        palette_improved(20, 3, 2)


@pytest.mark.parametrize("k,s", [(5, 0), (16, 0), (17, 1), (28, 1), (29, 2)])
def test_max_improved_s(k, s):
    assert max_improved_s(k) == s


def test_finiteness_bounds():
    assert h_gap_bound(17, 3) == 4
    with pytest.raises(InvalidParameterError):
        h_gap_bound(16, 3)
    assert diameter_bound_main(3) == 3
    assert diameter_bound_improved(17, 1) == 19
    assert moore_bound(2, 3) == 10
    assert vertex_bound_main(3, 3) == 1 + f(3, 3)


@pytest.mark.parametrize("delta", range(3, 7))
def test_h_growth_ratio_tends_to_delta_minus_one(delta):
    excess = []
    for s in range(1, 30):
        lower, upper = h_gap_bound(12 * s + 5, delta) - 1, h_gap_bound(12 * (s + 1) + 5, delta) - 1
        ratio = Fraction(upper, lower)
        assert ratio - (delta - 1) == Fraction(delta, f(s, delta))
        excess.append(ratio - (delta - 1))
    assert all(a > b for a, b in zip(excess, excess[1:]))
    assert excess[-1] < Fraction(1, 10**6)


def test_gap_records():
    rec = gap_from(2, 3, 10)
    assert rec.gap == 0
    assert rec.small(2)
    assert gap(petersen_graph(), 2, 10) == rec
    with pytest.raises(InvalidParameterError):
        GapRecord(k=2, delta=3, chi=10, gap=1)
