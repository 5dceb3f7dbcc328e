from math import comb

import pytest

from deltak.algebra import Element, parse_element, weight_component
from deltak.annihilated import delta_basis
from deltak.delta0 import (
    c_table,
    checked,
    closed_c,
    enumerate_sigma,
    eta,
    sigma,
    sigma_words,
    verify_S0,
)
from deltak.steenrod import sq
from oracles import compositions, hom_sq_vec

E = parse_element


def test_sigma_examples():
    assert sigma((0,)) == E("[1]")
    assert sigma((0, 0)) == E("[1,2]+[2,1]")
    # both checked against the polynomial-dual action
    assert sigma((0, 0)).terms == hom_sq_vec({(2, 2)}, 1)
    with pytest.raises(ValueError):
        sigma(())


@pytest.mark.parametrize("ms", [(0,), (3,), (0, 0), (1, 2), (2, 0, 1), (0, 0, 0, 1)])
def test_sigma_contains_leading_word_and_is_annihilated(ms):
    s = sigma(ms)
    lead = (2 * ms[0] + 1,) + tuple(2 * m + 2 for m in ms[1:])
    assert lead in s
    assert len(s) == len(ms)
    assert sq(s, 1) == Element.zero()
    assert weight_component(s, 1) == s


def test_enumerate_sigma_examples():
    assert enumerate_sigma(1, 5) == [(2,)]
    assert enumerate_sigma(2, 5) == [(0, 1), (1, 0)]
    assert enumerate_sigma(2, 4) == []


def test_eta_examples():
    assert eta(1, 7) == 1
    assert eta(3, 7) == 3
    assert eta(2, 6) == 0


def test_enumeration_count_is_eta():
    for s in range(1, 7):
        for d in range(0, 26):
            descs = enumerate_sigma(s, d)
            assert len(descs) == eta(s, d)
            # brute force: ordered partitions of (d+1)/2 - s into s nonnegative parts
            if d % 2 and (d + 1) // 2 >= s:
                assert descs == sorted(compositions(s, (d + 1) // 2 - s, least=0))


def test_c_table_examples():
    c = c_table(3, 12)
    assert [c[1, d] for d in range(13)] == [0, 1] * 6 + [0]
    assert c[2, 4] == 2
    assert c[3, 7] == 9
    assert c[0, 0] == 1 and c[2, 0] == 0 and c[0, 5] == 0


def test_closed_c_examples():
    assert closed_c(2, 7) == 3
    assert closed_c(3, 6) == 6
    assert closed_c(1, 0) == 0
    with pytest.raises(ValueError):
        closed_c(4, 9)


def test_closed_forms_match_recurrence():
    c = c_table(3, 40)
    for s in (1, 2, 3):
        for d in range(41):
            assert closed_c(s, d) == c[s, d]


def test_reduction_formula():
    c = c_table(6, 31)
    for s in range(1, 7):
        for d in range(31):
            assert c[s, d] + c[s, d + 1] == comb(d, s - 1)


def test_recurrence_matches_kernel_dims():
    c = c_table(4, 20)
    for (s, d), v in c.items():
        assert delta_basis(0, s, d).dim == v


def test_overflow_is_detected():
    with pytest.raises(OverflowError):
        checked(1 << 63, (1, 1))
    with pytest.raises(OverflowError):
        c_table(25, 90)


def test_sigma_words_count_is_c():
    c = c_table(4, 12)
    for s in range(5):
        for d in range(13):
            assert len(sigma_words(s, d)) == c[s, d]


def test_verify_S0_small_range():
    report = verify_S0(2, 5)
    assert report.passed
    c = c_table(2, 5)
    for cell in report.cells:
        assert cell.word_span_dim == cell.kernel_dim == c[cell.s, cell.d]
    by_bd = {(cell.s, cell.d): cell for cell in report.cells}
    assert by_bd[2, 3].word_span_dim == 1 and by_bd[2, 3].n_sigma == 1
    assert by_bd[1, 2].kernel_dim == 0 and by_bd[1, 2].passed
