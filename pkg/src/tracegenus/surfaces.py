"""Homology-level relative trisection diagrams on ``Sigma_{g,b}``.

Coordinates are taken in the ordered basis
``a1, b1, a2, b2, ..., ag, bg, d1, ..., d_{b-1}`` of ``H_1(Sigma_{g,b})``
where ``<a_i, b_i> = +1`` and the boundary classes ``d_j`` lie in the
radical of the intersection pairing.  A Dehn twist along ``c`` acts by the
transvection ``x -> x + m <x, c> c``.

Nothing here sees curves up to isotopy.  Disjointness is replaced by zero
algebraic intersection and "slide-diffeomorphic to the standard diagram"
by a Smith normal form test on the pairing matrix, so every check in this
module is a necessary condition only.
"""

import json
from dataclasses import dataclass, field

from . import linalg
from .errors import ValidationError
from .formula import evaluate
from .params import TrisectionType, type_violations
from .threemanifolds import AbelianGroup, cokernel

NECESSARY_ONLY = "necessary conditions only: homology-level checks, not a certificate of standardness"


@dataclass(frozen=True)
class SurfaceModel:
    g: int
    b: int

    def __post_init__(self):
        if self.g < 0 or self.b < 1:
            raise ValidationError(f"surface needs g >= 0 and b >= 1, got ({self.g}, {self.b})")

    @property
    def rank(self):
        return 2 * self.g + self.b - 1

    def basis_labels(self):
        out = []
        for i in range(1, self.g + 1):
            out += [f"a{i}", f"b{i}"]
        return out + [f"d{j}" for j in range(1, self.b)]

    def pairing_matrix(self):
        n = self.rank
        J = linalg.zeros(n, n)
        for i in range(self.g):
            J[2 * i][2 * i + 1] = 1
            J[2 * i + 1][2 * i] = -1
        return J

    def basis_vector(self, label):
        labels = self.basis_labels()
        if label not in labels:
            raise ValidationError(f"no basis element {label!r} on Sigma_({self.g},{self.b})")
        v = [0] * self.rank
        v[labels.index(label)] = 1
        return CurveClass(v)

    def check_vector(self, v):
        if len(v) != self.rank:
            raise ValidationError(
                f"vector of length {len(v)} does not match basis rank {self.rank} of Sigma_({self.g},{self.b})"
            )


@dataclass(frozen=True)
class CurveClass:
    vector: tuple
    formal: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(int(x) for x in self.vector))

    def __len__(self):
        return len(self.vector)

    def __iter__(self):
        return iter(self.vector)

    def __add__(self, other):
        return CurveClass([x + y for x, y in zip(self.vector, _vec(other))], self.formal)

    def __sub__(self, other):
        return CurveClass([x - y for x, y in zip(self.vector, _vec(other))], self.formal)

    def __neg__(self):
        return CurveClass([-x for x in self.vector], self.formal)

    def scale(self, n):
        return CurveClass([n * x for x in self.vector], self.formal)

    @property
    def primitive(self):
        return linalg.is_primitive(self.vector)


def _vec(x):
    return x.vector if isinstance(x, CurveClass) else tuple(x)


def _cls(x):
    return x if isinstance(x, CurveClass) else CurveClass(x)


def curve(surface, **coeffs):
    """Build a class from labelled coefficients, e.g. ``curve(S, a1=1, b2=-1)``."""
    labels = surface.basis_labels()
    v = [0] * surface.rank
    for name, c in coeffs.items():
        if name not in labels:
            raise ValidationError(f"no basis element {name!r}")
        v[labels.index(name)] = c
    return CurveClass(v)


def pairing(x, y, s):
    """Algebraic intersection number ``<x, y>`` on the surface ``s``."""
    x, y = _vec(x), _vec(y)
    s.check_vector(x)
    s.check_vector(y)
    return sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(s.g))


def dehn_twist(c, power, x, s):
    """Homology action of ``tau_c^power`` on ``x``."""
    c = _cls(c)
    if not c.primitive:
        raise ValidationError(f"twisting curve {list(c.vector)} is not primitive")
    t = power * pairing(x, c, s)
    return CurveClass([xi + t * ci for xi, ci in zip(_vec(x), c.vector)])


def mirror_class(x, s):
    """Image under the orientation-reversing involution ``b_i -> -b_i``."""
    v = list(_vec(x))
    for i in range(s.g):
        v[2 * i + 1] = -v[2 * i + 1]
    return CurveClass(v, getattr(x, "formal", False))


@dataclass(frozen=True)
class CurveSystemH:
    surface: SurfaceModel
    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(_cls(c) for c in self.classes))
        for c in self.classes:
            self.surface.check_vector(c.vector)

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def vectors(self):
        return [list(c.vector) for c in self.classes]

    def violations(self, expected_size=None):
        out = []
        if expected_size is not None and len(self.classes) != expected_size:
            out.append(f"system has {len(self.classes)} curves, expected g-p = {expected_size}")
        for i, c in enumerate(self.classes):
            if not c.primitive and not c.formal:
                out.append(f"curve {i} is not primitive")
        for i in range(len(self.classes)):
            for j in range(i + 1, len(self.classes)):
                v = pairing(self.classes[i], self.classes[j], self.surface)
                if v:
                    out.append(f"curves {i} and {j} pair to {v}, not 0")
        return out

    def validated(self):
        bad = self.violations()
        if bad:
            raise ValidationError("invalid curve system: " + "; ".join(bad))
        return self


def slide(system, i, j, sign=1):
    """Replace curve ``i`` by ``curve_i + sign * curve_j`` (homology of a handle slide)."""
    system.validated()
    n = len(system.classes)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise ValidationError(f"slide needs two distinct indices in range, got {i}, {j}")
    if sign not in (1, -1):
        raise ValidationError(f"slide sign must be +1 or -1, got {sign}")
    classes = list(system.classes)
    classes[i] = classes[i] + classes[j].scale(sign)
    return CurveSystemH(system.surface, classes).validated()


def apply_twist(system, c, power):
    """Twist every curve of a system."""
    return CurveSystemH(system.surface, [dehn_twist(c, power, x, system.surface) for x in system.classes])


@dataclass(frozen=True)
class StandardnessProfile:
    d: int
    s: int


def expected_profile(t):
    """Dual/parallel split of the standard diagram of type ``t``."""
    return StandardnessProfile(t.dual_pairs, t.parallel_pairs)


@dataclass
class StandardnessResult:
    passed: bool
    profile: StandardnessProfile
    invariant_factors: list
    messages: list = field(default_factory=list)

    def to_dict(self):
        return {
            "passed": self.passed,
            "expected": {"d": self.profile.d, "s": self.profile.s},
            "invariant_factors": self.invariant_factors,
            "messages": self.messages,
        }


def pairing_matrix(X, Y):
    return [[pairing(x, y, X.surface) for y in Y.classes] for x in X.classes]


def standardness_check(pair, ttype):
    """Smith normal form test of a pair of curve systems against the standard model.

    In the standard diagram of type ``(g,k;p,b)`` the two systems consist of
    ``d`` dual pairs meeting once and ``s = k-(2p+b-1)`` parallel pairs, with
    ``d + s = g - p``.  Passing means the pairing matrix has exactly ``d``
    invariant factors equal to 1 and ``s`` equal to 0.  This is necessary,
    not sufficient.
    """
    X, Y = pair
    if not isinstance(ttype, TrisectionType):
        ttype = TrisectionType(*ttype)
    n = ttype.g - ttype.p
    if len(X) != n or len(Y) != n:
        raise ValidationError(f"systems of sizes {len(X)}, {len(Y)} do not match g-p = {n}")
    prof = expected_profile(ttype)
    M = pairing_matrix(X, Y)
    factors = linalg.invariant_factors(M) if n else []
    ones = sum(1 for f in factors if f == 1)
    zeros = sum(1 for f in factors if f == 0)
    msgs = []
    if ones != prof.d or zeros != prof.s:
        msgs.append(f"invariant factors {factors}; expected {prof.d} ones and {prof.s} zeros")
    return StandardnessResult(not msgs, prof, factors, msgs)


@dataclass(frozen=True)
class RelTrisDiagramH:
    """``(Sigma_{g,b}; alpha, beta, gamma)`` with a claimed type ``(g,k;p,b)``.

    ``ttype`` is kept as a raw tuple so that an invalid claim can still be
    reported by :func:`diagram_validate`.
    """

    surface: SurfaceModel
    ttype: tuple
    alpha: CurveSystemH
    beta: CurveSystemH
    gamma: CurveSystemH
    reconstructed: bool = False

    def systems(self):
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}

    def with_gamma(self, gamma):
        return RelTrisDiagramH(self.surface, self.ttype, self.alpha, self.beta, gamma, self.reconstructed)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class DiagramReport:
    checks: list
    warnings: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def summary(self):
        if self.passed:
            return "necessary conditions hold"
        return "necessary conditions fail: " + ", ".join(c.name for c in self.checks if not c.passed)

    def to_dict(self):
        return {
            "passed": self.passed,
            "summary": self.summary,
            "checks": [c.to_dict() for c in self.checks],
            "warnings": list(self.warnings),
        }


def diagram_validate(d):
    """Run the type check, the system invariants and all three pairwise checks."""
    warnings = [NECESSARY_ONLY]
    if d.reconstructed:
        warnings.append("reconstructed diagram: coordinates are not transcribed from figures")
    checks = []
    g, k, p, b = d.ttype
    bad = type_violations(g, k, p, b)
    if (g, b) != (d.surface.g, d.surface.b):
        bad.append(f"type has surface ({g},{b}) but diagram lives on ({d.surface.g},{d.surface.b})")
    checks.append(Check("type", not bad, "; ".join(bad)))
    if bad:
        return DiagramReport(checks, warnings)
    t = TrisectionType(g, k, p, b)
    for name, system in d.systems().items():
        v = system.violations(expected_size=g - p)
        checks.append(Check(f"{name} system", not v, "; ".join(v)))
    if not all(c.passed for c in checks):
        return DiagramReport(checks, warnings)
    for x, y in (("alpha", "beta"), ("beta", "gamma"), ("gamma", "alpha")):
        r = standardness_check((d.systems()[x], d.systems()[y]), t)
        detail = "; ".join(r.messages) or f"invariant factors {r.invariant_factors}"
        checks.append(Check(f"({x},{y}) standard", r.passed, detail))
    return DiagramReport(checks, warnings)


@dataclass
class DiagramHomology:
    h1: AbelianGroup
    h2_rank: int
    form: list
    boundary_h1: AbelianGroup = None

    def to_dict(self):
        return {
            "h1": self.h1.to_dict(),
            "h2_rank": self.h2_rank,
            "intersection_form": self.form,
            "boundary_h1": self.boundary_h1.to_dict() if self.boundary_h1 else None,
        }


def diagram_homology(d):
    """Homology of the 4-manifold described by a diagram.

    With ``A, B, C`` the span maps of the three systems, ``H_1(X)`` is the
    cokernel of ``(A | B | C)`` and ``H_2(X)`` is its kernel modulo the
    relations supported on only two systems.  The intersection form is
    ``Q(x, y) = <A x_alpha, B y_beta>``; when ``H_1(X) = 0`` the boundary
    has ``H_1 = coker Q``.
    """
    S = d.surface
    cols = d.alpha.vectors() + d.beta.vectors() + d.gamma.vectors()
    n = len(d.alpha)
    if not cols:
        return DiagramHomology(AbelianGroup(S.rank), 0, [], None)
    span = linalg.transpose(cols)
    h1 = cokernel(span, S.rank)
    K = linalg.kernel_basis(span, len(cols))
    # relations living on only two systems
    R = []
    for skip in range(3):
        keep = [i for i in range(3 * n) if i // n != skip]
        sub = linalg.transpose([cols[i] for i in keep])
        for r in linalg.kernel_basis(sub, len(keep)):
            v = [0] * (3 * n)
            for pos, i in enumerate(keep):
                v[i] = r[pos]
            R.append(v)
    lifts = _quotient_lifts(K, R)

    def part(x, off):
        v = [0] * S.rank
        for i in range(n):
            if x[off + i]:
                for j in range(S.rank):
                    v[j] += x[off + i] * cols[off + i][j]
        return v

    Q = [[pairing(part(x, 0), part(y, n), S) for y in lifts] for x in lifts]
    bd = cokernel(Q, len(Q)) if h1.is_trivial() else None
    return DiagramHomology(h1, len(lifts), Q, bd)


def _quotient_lifts(K, R):
    """Lifts of a basis of the free part of ``span(K) / span(R)``."""
    if not K:
        return []
    if not R:
        return [list(k) for k in K]
    # coordinates of R in the K basis, then an adapted basis via SNF
    Kt = linalg.transpose(K)
    coords = []
    for r in R:
        sol = _solve_in_basis(Kt, r)
        if sol is not None:
            coords.append(sol)
    if not coords:
        return [list(k) for k in K]
    m = len(K)
    C = linalg.transpose(coords)
    U, D, _ = linalg.smith_normal_form(C)
    rk = sum(1 for x in linalg.diagonal(D) if x)
    # rows of U^{-1} past rank complement the relation span
    Ui = linalg.unimodular_inverse(U)
    basis = [[Ui[i][j] for i in range(m)] for j in range(rk, m)]
    return [[sum(c[i] * K[i][t] for i in range(m)) for t in range(len(K[0]))] for c in basis]


def _solve_in_basis(Kt, r):
    """Integer ``c`` with ``Kt c = r`` (columns of ``Kt`` form a saturated basis)."""
    U, D, V = linalg.smith_normal_form(Kt)
    y = linalg.matvec(U, r)
    diag = linalg.diagonal(D)
    z = []
    for i, d in enumerate(diag):
        if d == 0:
            if y[i]:
                return None
            z.append(0)
        else:
            if y[i] % d:
                return None
            z.append(y[i] // d)
    if any(y[len(diag):]):
        return None
    return linalg.matvec(V, z)


def mirror(d):
    """Diagram of the orientation-reversed manifold."""
    S = d.surface
    flip = {k: CurveSystemH(S, [mirror_class(c, S) for c in v.classes]) for k, v in d.systems().items()}
    return RelTrisDiagramH(S, d.ttype, flip["alpha"], flip["beta"], flip["gamma"], d.reconstructed)


def diagram_from_dict(data, env=None):
    """Build a diagram from the structured file format.

    The ``gamma`` is twisted by each entry of ``twists`` in list order; a
    ``power`` may be an integer or a formula in ``env``.
    """
    try:
        g, b = int(data["g"]), int(data["b"])
        ttype = tuple(int(x) for x in data["type"])
        alpha, beta, gamma = data["alpha"], data["beta"], data["gamma"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed diagram data: {exc}") from exc
    if len(ttype) != 4:
        raise ValidationError("type must be [g, k, p, b]")
    S = SurfaceModel(g, b)
    if "basis_rank" in data and int(data["basis_rank"]) != S.rank:
        raise ValidationError(f"basis_rank {data['basis_rank']} != 2g+b-1 = {S.rank}")
    systems = [CurveSystemH(S, sys_) for sys_ in (alpha, beta, gamma)]
    gam = systems[2]
    for tw in data.get("twists", []):
        power = tw["power"]
        power = power if isinstance(power, int) else evaluate(power, env or {})
        c = CurveClass(tw["curve"])
        S.check_vector(c.vector)
        gam = apply_twist(gam, c, power)
    return RelTrisDiagramH(S, ttype, systems[0], systems[1], gam, bool(data.get("reconstructed", False)))


def diagram_to_dict(d):
    return {
        "g": d.surface.g,
        "b": d.surface.b,
        "type": list(d.ttype),
        "basis_rank": d.surface.rank,
        "reconstructed": d.reconstructed,
        "alpha": d.alpha.vectors(),
        "beta": d.beta.vectors(),
        "gamma": d.gamma.vectors(),
        "twists": [],
    }


def load_diagram(path, env=None):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read diagram file {path}: {exc}") from exc
    return diagram_from_dict(data, env)
