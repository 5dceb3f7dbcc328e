import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltak.algebra import (
    Element,
    ParseError,
    basis,
    bidegree,
    bidegree_components,
    format_element,
    multiply,
    parse_element,
    resolve_relation,
    transduce,
    weight,
    weight_component,
)
from deltak.checks import constructed_relation

E = parse_element

monomials = st.lists(st.integers(1, 6), max_size=4).map(tuple)
elements = st.lists(monomials, max_size=5).map(Element)


@st.composite
def homogeneous(draw, min_s=0, max_s=3, extra=4):
    s = draw(st.integers(min_s, max_s))
    d = s + draw(st.integers(0, extra)) if s else 0
    mons = basis(s, d)
    return Element(draw(st.lists(st.sampled_from(mons), max_size=4)))


# -- examples ------------------------------------------------------------------


def test_multiply_examples():
    assert E("[1]") * E("[2]") == E("[1,2]")
    assert E("[]") * E("[3,1]") == E("[3,1]")
    # ([1]+[2])^2 expanded by hand
    assert E("[1]+[2]") * E("[1]+[2]") == E("[1,1]+[1,2]+[2,1]+[2,2]")


def test_bidegree_components_examples():
    assert bidegree_components(E("[1,2]+[2,1]+[3]")) == {(2, 3): E("[1,2]+[2,1]"), (1, 3): E("[3]")}
    assert bidegree_components(Element.zero()) == {}
    assert bidegree_components(E("[5]")) == {(1, 5): E("[5]")}


def test_weight_examples():
    assert weight((1, 2, 3)) == 2
    assert weight((2, 4, 6)) == 0
    for ms in [(0,), (3, 1), (2, 0, 5)]:
        assert weight((2 * ms[0] + 1,) + tuple(2 * m + 2 for m in ms[1:])) == 1


def test_weight_component_examples():
    assert weight_component(E("[1,2]+[2,2]"), 1) == E("[1,2]")
    assert weight_component(E("[1,2]+[2,2]"), 0) == E("[2,2]")


def test_transduce_examples():
    assert transduce(E("[1,2,1,2]"), (1, 2)) == E("[1,2]")
    assert transduce(E("[2,1]"), (1, 2)) == Element.zero()
    assert transduce(E("[1,2]+[3,1,2]+[2,1]"), (1, 2)) == E("[]+[3]")
    with pytest.raises(ValueError):
        transduce(E("[1]"), ())


def test_resolve_relation_examples():
    # indices are 0-based, so the second pair is index 1
    j, d = resolve_relation([(E("[1]"), E("[1,1,2]")), (E("[1,1]"), E("[1,2]"))])
    assert j == 1 and d == {0: E("[1]")}
    assert E("[1,1]") == E("[1]") * d[0]

    a, b = E("[2,1]+[1,2]"), E("[1,1]")
    j, d = resolve_relation([(a, b), (a, b)])
    assert j == 1 and d == {0: Element.one()}


def test_resolve_relation_rejects_bad_input():
    with pytest.raises(ValueError, match="nonzero"):
        resolve_relation([(E("[1]"), E("[2]")), (E("[2]"), E("[1]"))])
    with pytest.raises(ValueError, match="zero"):
        resolve_relation([(E("[1]"), Element.zero())])
    with pytest.raises(ValueError, match="homogeneous"):
        resolve_relation([(E("[1]+[1,1]"), E("[1]")), (E("[1]+[1,1]"), E("[1]"))])


@pytest.mark.parametrize(
    "text, expected",
    [
        ("[1,2]+[2,1]", "[1,2]+[2,1]"),
        (" [ 2 , 1 ] + [1, 2] ", "[1,2]+[2,1]"),
        ("[]", "[]"),
        ("0", "0"),
        ("[1]+[1]", "0"),
        ("[3,1]+[]+[2]", "[]+[2]+[3,1]"),
    ],
)
def test_parse_format(text, expected):
    assert format_element(parse_element(text)) == expected


@pytest.mark.parametrize("text, pos", [("[1,x]", 3), ("[1,2", 4), ("[0]", 1), ("[1]-[2]", 3), ("", 0), ("1", 0)])
def test_parse_errors_name_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.pos == pos


def test_basis_counts():
    assert basis(2, 3) == ((1, 2), (2, 1))
    assert basis(0, 0) == ((),)
    assert basis(3, 2) == ()


# -- properties ----------------------------------------------------------------


@given(elements, elements, elements)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements)
def test_unit_and_involution(a):
    assert Element.one() * a == a == a * Element.one()
    assert a + a == Element.zero()


@given(elements, elements, elements)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(homogeneous(min_s=1), homogeneous(min_s=1))
def test_bidegree_additivity(a, b):
    if a and b:
        (p, c), (q, e) = a.bidegree(), b.bidegree()
        assert (a * b).bidegree() == (p + q, c + e)


@given(monomials, monomials)
def test_weight_additive(m, n):
    assert weight(m + n) == weight(m) + weight(n)


@given(elements)
def test_weight_components_sum(a):
    total = Element.zero()
    for k in range(5):
        total = total + weight_component(a, k)
    assert total == a


@given(elements, elements)
def test_weight_of_products(a, b):
    for k in range(3):
        for l in range(3):
            x, y = weight_component(a, k), weight_component(b, l)
            assert weight_component(x * y, k + l) == x * y


@given(elements, monomials.filter(bool))
def test_transduction_reconstruction(a, mu):
    star = transduce(a, mu)
    a0 = a + star * Element([mu])
    assert not any(m[-len(mu):] == mu for m in a0.terms if len(m) >= len(mu))


@given(homogeneous(), homogeneous(min_s=1), monomials.filter(bool))
def test_transduction_multiplicative(a, b, mu):
    if b and bidegree(mu) <= b.bidegree():
        assert transduce(a * b, mu) == a * transduce(b, mu)


@settings(max_examples=60)
@given(st.integers(0, 10**6), st.integers(2, 6))
def test_resolve_relation_remultiplies(seed, n):
    pairs = constructed_relation(random.Random(seed), n)
    j, d = resolve_relation(pairs)
    assert set(d) == set(range(len(pairs))) - {j}
    rhs = Element.zero()
    for i, di in d.items():
        rhs = rhs + pairs[i][0] * di
    assert rhs == pairs[j][0]


def test_elements_are_immutable_values():
    a = E("[1,2]")
    b = a + E("[2,1]")
    assert a == E("[1,2]") and b == E("[1,2]+[2,1]")
    assert hash(E("[2,1]+[1,2]")) == hash(b)
    with pytest.raises(AttributeError):
        a.foo = 1
    assert multiply(a, a) == E("[1,2,1,2]")
