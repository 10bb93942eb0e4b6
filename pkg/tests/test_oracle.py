import pytest

from tracegenus.catalog import load_catalog
from tracegenus.knots import figure_eight, parse_knot, pretzel, torus, unknot
from tracegenus.oracle import (
    COND_ALMOST_ALL,
    GenusOracle,
    boundary_classify,
    lower_bound,
    trace_genus,
    upper_bound,
)
from tracegenus.threemanifolds import LensSpace, ThreeTag


def test_boundary_examples():
    c = boundary_classify(unknot(), 3)
    assert c.tag is ThreeTag.LENS and c.lens == LensSpace(3, 1, -1)
    assert boundary_classify(unknot(), 1).tag is ThreeTag.S3
    for m in (2, -2):
        c = boundary_classify(figure_eight(), m)
        assert c.tag is ThreeTag.SMALL_SEIFERT and str(c) == "S^2(2,4,5)"
    assert str(boundary_classify(figure_eight(), 1)) == "S^2(2,3,7)"
    assert str(boundary_classify(figure_eight(), -3)) == "S^2(3,3,4)"
    assert boundary_classify(figure_eight(), 7).tag is ThreeTag.HYPERBOLIC
    for m in (0, 4, -4):
        assert boundary_classify(figure_eight(), m).tag is ThreeTag.TOROIDAL
    c = boundary_classify(pretzel(-2, 3, 7), 2)
    assert c.tag is ThreeTag.HYPERBOLIC and COND_ALMOST_ALL in c.conditions
    assert boundary_classify(torus(3, 4), 2).tag is ThreeTag.UNKNOWN


def test_boundary_h1_is_cyclic_of_order_framing():
    for k in (unknot(), figure_eight(), torus(2, 5), pretzel(-2, 3, 9)):
        for m in range(-12, 13):
            G = boundary_classify(k, m).h1
            assert (G.rank, G.order) == ((1, None) if m == 0 else (0, abs(m)))


def test_lower_bound_examples():
    assert lower_bound(torus(3, 4), 7).value == 3
    for m in (-9, 0, 11):
        assert lower_bound(torus(3, 4), m).value == 3
    assert lower_bound(figure_eight(), 7).value == 4
    assert lower_bound(pretzel(3, 3, 3), 2).value == 4
    assert lower_bound(pretzel(3, 3, 3), 3).value == 3
    value, cites = lower_bound(unknot(), 1)
    assert value == 1 and cites


def test_heegaard_rule_large_pretzels():
    for r in (5, 7, 9):
        k = pretzel(*([3] * r))
        assert lower_bound(k, 4).value == r + 1
        assert lower_bound(k, 5).value == 3
    assert lower_bound(pretzel(3, 9, 3), 0).value == 4
    # gcd 1: rule does not apply
    assert lower_bound(pretzel(3, 5, 7), 0).value == 3


def test_upper_bound_examples():
    for m in (-3, 0, 8):
        assert upper_bound(unknot(), m).value == 2
    assert upper_bound(torus(2, 3), 5).value == 2
    for l in range(-3, 5):
        for k in range(-5, 6):
            if l in (1, 2, 3):
                continue
            assert upper_bound(pretzel(-2, 3, 2 * l - 1), k + 4 * l + 4).value == 4
    assert upper_bound(torus(4, 9), 3).value == 4
    assert upper_bound(torus(5, 7), 3).value is None


def test_trace_genus_examples():
    assert trace_genus(unknot(), 1).exact == 1
    assert trace_genus(unknot(), 0).exact == 2
    assert trace_genus(torus(2, 3), 5).exact == 2
    assert trace_genus(torus(2, 3).mirrored(), -5).exact == 2
    r = trace_genus(figure_eight(), 2)
    assert r.interval == (3, 4) and r.exact is None
    r = trace_genus(torus(3, 7), 11)
    assert r.interval == (3, 4) and r.exact is None


def test_unknot_exact_one_iff_pm1():
    for m in range(-60, 61):
        assert (trace_genus(unknot(), m).exact == 1) == (m in (1, -1))


def test_conditional_pretzel():
    r = trace_genus(pretzel(-2, 3, 7), 10)
    assert r.exact == 4 and r.conditions == [COND_ALMOST_ALL]
    assert r.lower_unconditional == 3
    for n in (1, 3):
        r = trace_genus(pretzel(-2, 3, 2 * n - 1), 10)
        assert r.interval == (3, 4)


def test_unknown_knot_is_lower_only():
    r = trace_genus(parse_knot("T(5,7)"), 3)
    assert r.upper is None and r.lower == 3 and r.exact is None
    assert "no catalog family" in upper_bound(parse_knot("T(5,7)"), 3).citations[0]


def test_everything_cited():
    for k in (unknot(), figure_eight(), torus(2, 3), torus(3, 7), pretzel(-2, 3, 7), pretzel(3, 3, 3)):
        for m in range(-8, 9):
            r = trace_genus(k, m)
            assert r.citations
            assert 1 <= r.lower and (r.upper is None or r.lower <= r.upper)


def test_monotone_in_catalog():
    full = GenusOracle()
    for drop in ("trefoil", "torus", "pretzel"):
        partial = GenusOracle([f for f in load_catalog() if f.name != drop])
        for k in (torus(2, 3), torus(3, 4), pretzel(-2, 3, 7)):
            for m in range(-6, 7):
                a, b = full.trace_genus(k, m), partial.trace_genus(k, m)
                assert a.lower == b.lower
                assert b.upper is None or a.upper <= b.upper


@pytest.mark.parametrize("m", range(-10, 11))
def test_mirror_symmetry(m):
    for k in (torus(2, 3), torus(3, 4), torus(3, 7), pretzel(-2, 3, 9), figure_eight()):
        a, b = trace_genus(k, m), trace_genus(k.mirrored(), -m)
        assert (a.lower, a.upper, a.exact) == (b.lower, b.upper, b.exact)


def test_conditional_boundary_label():
    # 18-surgery on P(-2,3,7) is a lens space, so the label must not read as a bare claim
    c = boundary_classify(pretzel(-2, 3, 7), 18)
    assert str(c) == "Hyperbolic (conditional)" and c.conditions
