import json
import random

import pytest

from tracegenus import catalog as cat
from tracegenus.errors import ValidationError
from tracegenus.knots import pretzel, torus, unknot
from tracegenus.oracle import upper_bound
from tracegenus.surfaces import dehn_twist


def fam(name):
    return cat.get_family(name)


def test_catalog_contents():
    names = {f.name for f in cat.default_catalog()}
    assert names == {"unknot", "trefoil", "torus", "general-torus", "pretzel", "figure-eight", "cp2-ball"}
    assert all(f.reconstructed for f in cat.default_catalog())
    types = {f.name: f.ttype.as_tuple() for f in cat.default_catalog()}
    assert types["unknot"] == types["trefoil"] == (2, 1, 0, 2)
    assert types["torus"] == (3, 2, 0, 3)
    assert types["general-torus"] == types["pretzel"] == types["figure-eight"] == (4, 3, 0, 4)


def test_instantiate_examples():
    inst = cat.instantiate(fam("torus"), {"k": 1, "l": 0})
    assert inst.knot == torus(2, 3) and inst.framing == 5
    inst = cat.instantiate(fam("figure-eight"), {"m": 0})
    assert inst.framing == -3
    inst = cat.instantiate(fam("trefoil"), {})
    assert inst.knot == torus(2, 3) and inst.framing == 5


def test_instantiate_arity():
    with pytest.raises(ValidationError):
        cat.instantiate(fam("torus"), {"k": 1})
    with pytest.raises(ValidationError):
        cat.instantiate(fam("torus"), (1, 2, 3))


def test_general_torus_at_j3_is_torus_family():
    for k in range(-6, 7):
        for l in range(-6, 7):
            a = cat.instantiate(fam("general-torus"), {"j": 3, "k": k, "l": l})
            b = cat.instantiate(fam("torus"), {"k": k, "l": l})
            assert (a.knot, a.framing) == (b.knot, b.framing)


def test_pretzel_l2_is_t34():
    for k in range(-10, 11):
        inst = cat.instantiate(fam("pretzel"), {"k": k, "l": 2})
        assert inst.knot == torus(3, 4) and inst.framing == k + 12
    assert upper_bound(torus(3, 4), 12).value == 3


def test_realized_framings():
    assert cat.realized_framings(fam("unknot")).kind == "all"
    assert cat.realized_framings(fam("torus")).free_params == ("l",)
    assert cat.realized_framings(fam("pretzel")).free_params == ("k",)
    img = cat.realized_framings(fam("trefoil"))
    assert img.kind == "finite" and img.values == (5,)


def test_self_check_examples():
    rep = cat.self_check(fam("unknot"), {"m": 5})
    assert rep.passed
    assert "Z/5" in dict((n, d) for n, _, d in rep.checks)["boundary h1"]
    assert cat.self_check(fam("trefoil"), {}).passed
    assert cat.self_check(fam("pretzel"), {"k": 0, "l": 2}).passed


def test_self_check_mirror():
    for name in ("unknot", "torus", "pretzel", "figure-eight", "general-torus"):
        f = fam(name)
        params = {p: 2 for p in f.params}
        assert cat.self_check(f, params, mirror_image=True).passed


def test_twist_power_additivity():
    rng = random.Random(1)
    for name in ("unknot", "figure-eight"):
        f = fam(name)
        S = cat.instantiate(f, {"m": 0}).diagram.surface
        c = f.data["twists"][0]["curve"]
        for _ in range(10):
            m = rng.randint(-15, 15)
            d0 = cat.instantiate(f, {"m": m}).diagram
            d1 = cat.instantiate(f, {"m": m + 1}).diagram
            assert [list(dehn_twist(c, 1, x, S)) for x in d0.gamma.classes] == d1.gamma.vectors()


def test_find_params():
    env = cat.find_params(fam("torus"), torus(3, 4), 7)
    inst = cat.instantiate(fam("torus"), env)
    assert (inst.knot, inst.framing) == (torus(3, 4), 7)
    assert cat.find_params(fam("trefoil"), torus(2, 3), 4) is None
    assert cat.find_params(fam("pretzel"), pretzel(-2, 3, 9), -3) == {"k": -27, "l": 5}


def test_realize_uses_mirror():
    hits = cat.realize(torus(2, 3).mirrored(), -5)
    assert (hits[0][0].name, hits[0][2]) == ("trefoil", True)
    assert cat.realize(unknot(), -1)[0][0].name == "cp2-ball"


def test_bad_catalog_dir(tmp_path):
    with pytest.raises(ValidationError):
        cat.load_catalog(str(tmp_path / "nope"))
    (tmp_path / "x.json").write_text(json.dumps({"name": "x", "type": [1, 0, 0, 1]}))
    with pytest.raises(ValidationError, match="metadata"):
        cat.load_catalog(str(tmp_path))


def test_undeclared_parameter(tmp_path):
    data = json.loads(json.dumps(fam("unknot").data))
    data["metadata"]["framing_formula"] = "m+z"
    (tmp_path / "u.json").write_text(json.dumps(data))
    with pytest.raises(ValidationError, match="undeclared"):
        cat.load_catalog(str(tmp_path))
