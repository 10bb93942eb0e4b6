"""Parametric families of relative trisection diagrams of knot traces.

Each family lives in a JSON file under ``data/families``: the diagram
format of :mod:`tracegenus.surfaces` whose twist powers are formulas in the
family parameters, plus a ``metadata`` block naming the knot and framing.
The shipped homology coordinates are reconstructed, not transcribed from
drawings; they are pinned down only by the checks in :func:`self_check`.
"""

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from . import formula, knots
from .errors import ValidationError
from .params import TrisectionType, admissible_types, euler_char
from .surfaces import diagram_from_dict, diagram_homology, diagram_validate, mirror
from .threemanifolds import h1_from_linking


@dataclass(frozen=True)
class FamilySpec:
    name: str
    title: str
    ttype: TrisectionType
    params: tuple
    data: dict = field(compare=False, hash=False, repr=False)
    knot_kind: str = knots.UNKNOT
    knot_args: tuple = ()
    framing_formula: str = "0"
    citation: str = ""
    reconstructed: bool = True

    @property
    def genus(self):
        return self.ttype.g


def family_from_dict(data):
    try:
        meta = data["metadata"]
        kf = meta["knot_formula"]
        f = FamilySpec(
            name=data["name"],
            title=data.get("title", data["name"]),
            ttype=TrisectionType(*data["type"]),
            params=tuple(data.get("params", [])),
            data=data,
            knot_kind=kf["kind"],
            knot_args=tuple(str(a) for a in kf.get("args", [])),
            framing_formula=str(meta["framing_formula"]),
            citation=meta.get("citation", ""),
            reconstructed=bool(data.get("reconstructed", True)),
        )
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed family data: missing {exc}") from exc
    used = formula.variables(f.framing_formula)
    for a in f.knot_args:
        used |= formula.variables(a)
    for tw in data.get("twists", []):
        if isinstance(tw["power"], str):
            used |= formula.variables(tw["power"])
    unknown = used - set(f.params)
    if unknown:
        raise ValidationError(f"family {f.name}: formulas use undeclared parameters {sorted(unknown)}")
    return f


def load_catalog(directory=None):
    """All families, sorted by genus then name."""
    if directory is None:
        root = resources.files("tracegenus").joinpath("data/families")
        items = [(p.name, p.read_text()) for p in root.iterdir() if p.name.endswith(".json")]
    else:
        if not os.path.isdir(directory):
            raise ValidationError(f"catalog directory {directory} does not exist")
        items = []
        for name in os.listdir(directory):
            if name.endswith(".json"):
                with open(os.path.join(directory, name)) as fh:
                    items.append((name, fh.read()))
    fams = []
    for name, text in items:
        try:
            fams.append(family_from_dict(json.loads(text)))
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{name}: {exc}") from exc
    return sorted(fams, key=lambda f: (f.genus, f.name))


@lru_cache(maxsize=None)
def default_catalog():
    return tuple(load_catalog())


def get_family(name, catalog=None):
    for f in catalog or default_catalog():
        if f.name == name:
            return f
    raise ValidationError(f"no family named {name!r}")


def _env(f, params):
    if isinstance(params, dict):
        env = {k: int(v) for k, v in params.items()}
    else:
        params = tuple(params)
        if len(params) != len(f.params):
            raise ValidationError(f"family {f.name} takes {len(f.params)} parameters {list(f.params)}, got {len(params)}")
        env = dict(zip(f.params, (int(v) for v in params)))
    if set(env) != set(f.params):
        raise ValidationError(f"family {f.name} takes parameters {list(f.params)}, got {sorted(env)}")
    return env


def knot_at(f, env):
    return knots.knot_from_formula(f.knot_kind, [formula.evaluate(a, env) for a in f.knot_args])


def framing_at(f, env):
    return formula.evaluate(f.framing_formula, env)


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: tuple
    mirrored: bool
    diagram: object
    knot: knots.KnotSpec
    framing: int

    def to_dict(self):
        return {
            "family": self.family,
            "params": dict(self.params),
            "mirrored": self.mirrored,
            "knot": str(self.knot),
            "framing": self.framing,
        }


def instantiate(f, params, mirror_image=False):
    """Apply the family's twists at ``params``; returns diagram, knot and framing.

    With ``mirror_image`` the diagram is reflected, giving the trace of the
    mirror knot with the opposite framing.
    """
    env = _env(f, params)
    d = diagram_from_dict(f.data, env)
    k = knot_at(f, env)
    m = framing_at(f, env)
    if mirror_image:
        d, k, m = mirror(d), k.mirrored(), -m
    return FamilyInstance(f.name, tuple(sorted(env.items())), mirror_image, d, k, m)


@dataclass(frozen=True)
class FramingImage:
    kind: str
    free_params: tuple
    values: tuple = ()
    description: str = ""

    def to_dict(self):
        return {
            "kind": self.kind,
            "free_params": list(self.free_params),
            "values": list(self.values),
            "description": self.description,
        }


def _unit_slope(f, var):
    split = formula.split_linear(f.framing_formula, var)
    if split is None:
        return None
    c1, _ = split
    if set(c1) == {()} and c1[()] in (1, -1):
        return c1[()]
    return None


def free_parameters(f):
    """Parameters absent from the knot formula that move the framing by exactly +-1."""
    knot_vars = set()
    for a in f.knot_args:
        knot_vars |= formula.variables(a)
    return tuple(v for v in f.params if v not in knot_vars and _unit_slope(f, v) is not None)


def realized_framings(f):
    free = free_parameters(f)
    if not f.params or not formula.variables(f.framing_formula):
        m = framing_at(f, {v: 0 for v in f.params})
        return FramingImage("finite", (), (m,), f"only the framing {m}")
    if free:
        v = free[0]
        others = [p for p in f.params if p != v]
        if others:
            text = f"every integer, for each fixed {', '.join(others)}, via {v} (framing is {v} plus terms in {', '.join(others)})"
        else:
            text = f"every integer via {v}"
        return FramingImage("all", free, (), text)
    return FramingImage("partial", (), (), "framing image not surjective in any single parameter")


@dataclass
class SelfCheck:
    family: str
    params: dict
    checks: list

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.checks)

    def to_dict(self):
        return {
            "family": self.family,
            "params": self.params,
            "passed": self.passed,
            "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks],
        }


def self_check(f, params, mirror_image=False):
    """Diagram validity, type, framing and boundary homology of one family member."""
    inst = instantiate(f, params, mirror_image)
    d = inst.diagram
    checks = []
    rep = diagram_validate(d)
    checks.append(("diagram_validate", rep.passed, rep.summary))
    t = TrisectionType(*d.ttype)
    ok = t == f.ttype and d.surface.g == f.genus and euler_char(t) == 2 and t in admissible_types(t.g, 2)
    checks.append(("type", ok, f"{t}, euler characteristic {euler_char(t)}"))
    hom = diagram_homology(d)
    checks.append(("h1(X) = 0", hom.h1.is_trivial(), str(hom.h1)))
    ok = hom.form == [[inst.framing]]
    checks.append(("framing", ok, f"intersection form {hom.form}, framing formula gives {inst.framing}"))
    expect = h1_from_linking([[inst.framing]])
    ok = hom.boundary_h1 == expect
    checks.append(("boundary h1", ok, f"{hom.boundary_h1} from the diagram, {expect} from the framing"))
    return SelfCheck(f.name, dict(inst.params), checks)


def _knot_size(k):
    return max((abs(x) for x in k.params), default=1)


@lru_cache(maxsize=4096)
def _matching_assignments(f, knot, box):
    """Assignments of the non-free parameters whose knot equals ``knot``."""
    free = free_parameters(f)
    v = free[0] if free else None
    fixed = [p for p in f.params if p != v]
    out = []

    def rec(i, env):
        if i == len(fixed):
            e = dict(env)
            if v is not None:
                e[v] = 0
            try:
                if knot_at(f, e) == knot:
                    out.append(dict(env))
            except ValidationError:
                pass
            return
        for x in range(-box, box + 1):
            env[fixed[i]] = x
            rec(i + 1, env)
        env.pop(fixed[i], None)

    rec(0, {})
    out.sort(key=lambda a: (sum(abs(x) for x in a.values()), sorted(a.items())))
    return v, tuple(tuple(sorted(a.items())) for a in out)


def find_params(f, knot, framing, box=None):
    """Parameters with ``instantiate(f, params)`` giving ``(knot, framing)``, or ``None``.

    Non-free parameters are searched in ``[-box, box]`` (default: the
    largest knot parameter plus 3); the free parameter is then solved for.
    """
    if box is None:
        box = _knot_size(knot) + 3
    v, assignments = _matching_assignments(f, knot, box)
    for a in assignments:
        env = dict(a)
        if v is None:
            if framing_at(f, env) == framing:
                return env
            continue
        slope = _unit_slope(f, v)
        env[v] = 0
        base = framing_at(f, env)
        env[v] = (framing - base) * slope
        if framing_at(f, env) == framing:
            return env
    return None


def realize(knot, framing, catalog=None):
    """Every family realizing ``(knot, framing)`` directly or as a mirror image.

    Returns ``(family, params, mirrored)`` triples sorted by genus.
    """
    out = []
    for f in catalog or default_catalog():
        env = find_params(f, knot, framing)
        if env is not None:
            out.append((f, env, False))
            continue
        env = find_params(f, knot.mirrored(), -framing)
        if env is not None:
            out.append((f, env, True))
    return sorted(out, key=lambda t: (t[0].genus, t[0].name))
