import pytest

from tracegenus.errors import ValidationError
from tracegenus.knots import (
    KnotSpec,
    figure_eight,
    palindromic_arrangement,
    parse_knot,
    pretzel,
    pt_family_index,
    torus,
    unknot,
)


def test_parse_basic():
    assert parse_knot("U") == unknot()
    assert parse_knot("4_1") == figure_eight()
    assert parse_knot("mirror:4_1") == figure_eight()
    assert parse_knot("T(2,3)") == KnotSpec("torus", (2, 3), 1)
    assert parse_knot("mirror:T(2,3)") == KnotSpec("torus", (2, 3), -1)
    assert parse_knot("P(-2,3,7)") == KnotSpec("pretzel", (-2, 3, 7), 1)


def test_torus_normal_form():
    assert torus(3, 2) == torus(2, 3)
    assert torus(-2, 3) == torus(2, 3).mirrored()
    assert torus(-2, -3) == torus(2, 3)
    assert parse_knot("mirror:T(-2,3)") == torus(2, 3)
    assert torus(1, 7) == unknot() and torus(0, 1) == unknot() and torus(-1, 5) == unknot()
    with pytest.raises(ValidationError, match="link"):
        torus(2, 4)


def test_pretzel_normal_form():
    assert pretzel(7, 3, -2) == pretzel(-2, 3, 7)
    assert parse_knot("mirror:P(-2,3,7)") == pretzel(2, -3, -7)
    assert pretzel(3, 5, 7, 9, 11) == pretzel(11, 9, 7, 5, 3)
    assert pretzel(3, 5, 7, 9, 11) == pretzel(5, 7, 9, 11, 3)
    with pytest.raises(ValidationError, match="link"):
        pretzel(2, 2, 3)
    with pytest.raises(ValidationError, match="link"):
        pretzel(3, 3, 3, 3)
    with pytest.raises(ValidationError, match="3 strands"):
        pretzel(3, 5)


def test_torus_pretzels():
    assert pretzel(-2, 3, 1) == torus(2, 5)
    assert pretzel(-2, 3, 3) == torus(3, 4)
    assert pretzel(-2, 3, 5) == torus(3, 5)
    assert pretzel(2, -3, -3) == torus(3, 4).mirrored()


def test_family_index():
    assert pt_family_index(pretzel(-2, 3, 7)) == (4, 1)
    assert pt_family_index(pretzel(2, -3, -7)) == (4, -1)
    assert pt_family_index(pretzel(-2, 3, -1)) == (0, 1)
    assert pt_family_index(pretzel(3, 3, 3)) is None


def test_palindromic():
    assert palindromic_arrangement((3, 5, 3))
    assert palindromic_arrangement((3, 3, 5))
    assert not palindromic_arrangement((3, 5, 7))


@pytest.mark.parametrize("bad", ["", "T(2)", "T(2,3,5)", "Q(1,2)", "P(a,b,c)", "T(2,x)"])
def test_parse_errors(bad):
    with pytest.raises(ValidationError):
        parse_knot(bad)


def test_str_round_trip():
    for s in ["U", "4_1", "T(2,3)", "mirror:T(3,7)", "P(-2,3,7)", "P(3,3,3,3,3)"]:
        assert str(parse_knot(s)) == s
        assert parse_knot(str(parse_knot(s))) == parse_knot(s)
