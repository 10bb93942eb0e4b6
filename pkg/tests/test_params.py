import pytest

from tracegenus.errors import ValidationError
from tracegenus.params import (
    Page,
    TrisectionType,
    admissible_types,
    euler_char,
    genus_lower_bound_from_heegaard,
    max_boundary_heegaard,
)


def types(g, chi):
    return {t.as_tuple() for t in admissible_types(g, chi)}


def brute_types(g, chi, limit=40):
    out = set()
    for k in range(limit):
        for p in range(limit):
            for b in range(1, limit):
                if 2 * p + b - 1 <= k <= g + p + b - 1 and g - 3 * k + 3 * p + 2 * b - 1 == chi:
                    out.add((g, k, p, b))
    return out


def test_euler_examples():
    assert euler_char(TrisectionType(2, 1, 0, 2)) == 2
    assert euler_char((0, 2, 0, 3)) == -1
    assert euler_char((1, 1, 0, 1)) == -1


def test_euler_genus_zero_handlebodies():
    for b in range(1, 8):
        assert euler_char((0, b - 1, 0, b)) == 1 - (b - 1)


@pytest.mark.parametrize("bad, needle", [
    ((2, 0, 0, 2), "2p+b-1 <= k"),
    ((1, 3, 0, 2), "k <= g+p+b-1"),
    ((1, 0, 0, 0), "b >= 1"),
    ((-1, 0, 0, 1), "g >= 0"),
])
def test_invalid_type_names_inequality(bad, needle):
    with pytest.raises(ValidationError, match=needle.replace("+", r"\+")):
        TrisectionType(*bad)


def test_small_genus_tables():
    assert types(0, 2) == set()
    assert types(1, 2) == {(1, 0, 0, 1)}
    assert types(4, 2) == {(4, 3, 0, 4), (4, 1, 0, 1), (4, 2, 1, 1)}


def test_sorted_by_kpb():
    out = [t.as_tuple() for t in admissible_types(7, 2)]
    assert out == sorted(out, key=lambda t: (t[1], t[2], t[3]))


@pytest.mark.parametrize("g", range(0, 9))
@pytest.mark.parametrize("chi", [-4, -1, 0, 1, 2, 3, 5])
def test_matches_brute_force(g, chi):
    assert types(g, chi) == brute_types(g, chi)


def test_max_boundary_heegaard():
    assert max_boundary_heegaard(4, 2) == 3
    assert max_boundary_heegaard(1, 2) == 0
    assert max_boundary_heegaard(0, 2) is None
    for n in range(1, 30):
        assert max_boundary_heegaard(n, 2) == n - 1


def test_heegaard_bound():
    assert genus_lower_bound_from_heegaard(0) == 1
    assert genus_lower_bound_from_heegaard(5) == 6
    for r in (3, 5, 7, 9):
        assert genus_lower_bound_from_heegaard(r) == r + 1
    for g in range(1, 25):
        assert genus_lower_bound_from_heegaard(max_boundary_heegaard(g, 2)) == g


def test_page():
    assert Page(1, 3).heegaard_genus == 4
    assert TrisectionType(4, 2, 1, 1).page == Page(1, 1)
    with pytest.raises(ValidationError):
        Page(0, 0)


def test_profile_split():
    t = TrisectionType(4, 3, 0, 4)
    assert (t.dual_pairs, t.parallel_pairs) == (4, 0)
    t = TrisectionType(4, 1, 0, 1)
    assert (t.dual_pairs, t.parallel_pairs) == (3, 1)
