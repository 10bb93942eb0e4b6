"""Trisection genus of knot traces ``X_m(K)``.

Lower bounds come from what a low-genus relative trisection forces on the
boundary.  A knot trace has Euler characteristic 2, so a genus-``g``
relative trisection has one of the types of :func:`admissible_types`; for
``g = 1, 2, 3`` the induced open book is planar with ``g`` binding
components, making the boundary ``S^3``, some ``+-L(m,1)`` or some
``M(a1,a2,a3)`` respectively.  Each of these is excluded by a cited
classification result, encoded below as a fixed rule.  Upper bounds come
from the diagram families in the catalog.
"""

from dataclasses import dataclass, field

from . import catalog as cat
from .knots import FIGURE_EIGHT, PRETZEL, TORUS, KnotSpec, palindromic_arrangement, pt_family_index, torus
from .linalg import vector_gcd
from .params import genus_lower_bound_from_heegaard
from .threemanifolds import (
    ThreeManifoldClass,
    ThreeTag,
    h1_from_linking,
    lens_from_surgery,
)

CITE_CHI = "knot traces have Euler characteristic 2 and no genus-0 relative trisection type has Euler characteristic 2"
CITE_PROPERTY_P = (
    "Property P (Gordon-Luecke): S^3_m(K) = S^3 only for the unknot with m = +-1; "
    "genus 1 forces page Sigma_(0,1) and boundary S^3"
)
CITE_KMOS = (
    "Kronheimer-Mrowka-Ozsvath-Szabo and Tange: S^3_m(K) = +-L(a,1) only for (U, m), (T(2,3), 5) and "
    "(mirror T(2,3), -5); genus 2 forces page Sigma_(0,2) and boundary +-L(m,1)"
)
CITE_MTHREE = (
    "genus 3 forces page Sigma_(0,3), so the boundary is some M(a1,a2,a3), Seifert fibered over S^2 "
    "or a connected sum of lens spaces (Arikan); the boundary here is neither"
)
CITE_HEEGAARD = (
    "Boileau-Lustig-Moriah: for a pretzel knot with an odd number r of odd strands, palindromic, with "
    "gcd != 1, S^3_m(K) has Heegaard genus r for even m; a genus-g relative trisection of a "
    "Euler characteristic 2 manifold induces a Heegaard splitting of genus at most g-1"
)
CITE_THURSTON_41 = "Thurston: exceptional surgeries on the figure-eight knot"
CITE_THURSTON_HYP = "Thurston hyperbolic Dehn surgery: all but finitely many surgeries on a hyperbolic knot are hyperbolic"
CITE_PT_HYPERBOLIC = "P(-2,3,2n-1) is hyperbolic for n outside {1,2,3} (Kawauchi)"
CITE_LENS_SURGERY = "surgery on the unknot: S^3_m(U) = lens space -L(m,1)"
CITE_TREFOIL_LENS = "the 5-trace of the right-handed trefoil has a (2,1;0,2) relative trisection, so its boundary is +-L(5,1)"

COND_ALMOST_ALL = "requires hyperbolic boundary; holds for all but finitely many m"


@dataclass(frozen=True)
class BoundaryFact:
    knot: KnotSpec
    framing: int
    klass: ThreeManifoldClass
    citation: str
    not_m_three: bool = False
    conditional: bool = False


_FIG8_SEIFERT = {1: (2, 3, 7), 2: (2, 4, 5), 3: (3, 3, 4)}


def boundary_fact(k, m):
    """The encoded fact about ``S^3_m(K)``, or ``None`` if nothing is recorded."""
    h1 = h1_from_linking([[m]])
    if k.is_unknot:
        L = lens_from_surgery(m)
        tag = ThreeTag.S3 if L.is_s3() else ThreeTag.LENS
        return BoundaryFact(k, m, ThreeManifoldClass(tag, CITE_LENS_SURGERY, lens=L, h1=h1), CITE_LENS_SURGERY)
    if k.kind == FIGURE_EIGHT:
        if abs(m) in _FIG8_SEIFERT:
            fibers = tuple((a, 1) for a in _FIG8_SEIFERT[abs(m)])
            c = ThreeManifoldClass(ThreeTag.SMALL_SEIFERT, CITE_THURSTON_41, seifert=(None, fibers), h1=h1,
                                   note="Seifert fibered, not a lens space")
            return BoundaryFact(k, m, c, CITE_THURSTON_41)
        if m in (0, 4, -4):
            c = ThreeManifoldClass(ThreeTag.TOROIDAL, CITE_THURSTON_41, h1=h1,
                                   note="toroidal and not Seifert fibered over S^2")
            return BoundaryFact(k, m, c, CITE_THURSTON_41, not_m_three=True)
        c = ThreeManifoldClass(ThreeTag.HYPERBOLIC, CITE_THURSTON_41, h1=h1)
        return BoundaryFact(k, m, c, CITE_THURSTON_41, not_m_three=True)
    if pt_family_index(k) is not None:
        cite = CITE_PT_HYPERBOLIC + "; " + CITE_THURSTON_HYP
        c = ThreeManifoldClass(ThreeTag.HYPERBOLIC, cite, h1=h1, conditions=(COND_ALMOST_ALL,),
                               note="hyperbolic for all but finitely many m; not checked at this m")
        return BoundaryFact(k, m, c, cite, not_m_three=True, conditional=True)
    if k == torus(2, 3) and m == 5 or k == torus(2, 3, mirror=-1) and m == -5:
        c = ThreeManifoldClass(ThreeTag.LENS_L_P1, CITE_TREFOIL_LENS, lens_p=5, h1=h1)
        return BoundaryFact(k, m, c, CITE_TREFOIL_LENS)
    return None


def boundary_classify(k, m):
    fact = boundary_fact(k, m)
    if fact is None:
        return ThreeManifoldClass(ThreeTag.UNKNOWN, h1=h1_from_linking([[m]]))
    return fact.klass


def is_known_nontrivial(k):
    if k.is_unknot:
        return False
    if k.kind in (TORUS, FIGURE_EIGHT):
        return True
    # pretzels with every |p_i| >= 2 are nontrivial; so is the whole P(-2,3,2n-1) family
    return all(abs(x) >= 2 for x in k.params) or pt_family_index(k) is not None


def heegaard_rule_applies(k, m):
    if k.kind != PRETZEL or m % 2:
        return False
    e = k.params
    return (len(e) % 2 == 1 and all(x % 2 for x in e) and palindromic_arrangement(e)
            and vector_gcd(e) != 1)


@dataclass
class Bound:
    """A bound with its provenance.  Iterates as ``(value, citations)``."""

    value: int
    citations: list
    conditions: list = field(default_factory=list)
    unconditional: int = None
    via: list = field(default_factory=list)

    def __iter__(self):
        return iter((self.value, self.citations))


@dataclass
class GenusResult:
    knot: str
    framing: int
    lower: int
    upper: int
    exact: int
    conditions: list
    citations: list
    lower_unconditional: int = None
    boundary: ThreeManifoldClass = None
    realizations: list = field(default_factory=list)

    def __post_init__(self):
        if self.lower < 1 or (self.upper is not None and self.upper < self.lower):
            raise AssertionError(f"inconsistent bounds [{self.lower}, {self.upper}] for {self.knot} at {self.framing}")
        if (self.exact is not None) != (self.upper == self.lower):
            raise AssertionError("exact must be set iff lower == upper")
        if not self.citations:
            raise AssertionError("a genus result needs citations")

    @property
    def interval(self):
        return (self.lower, self.upper)

    def __str__(self):
        if self.exact is not None:
            s = f"g(X_{self.framing}({self.knot})) = {self.exact}"
        elif self.upper is None:
            s = f"g(X_{self.framing}({self.knot})) >= {self.lower}"
        else:
            s = f"g(X_{self.framing}({self.knot})) in [{self.lower}, {self.upper}]"
        if self.conditions:
            s += " (conditional: " + "; ".join(self.conditions) + ")"
        return s

    def to_dict(self):
        return {
            "knot": self.knot,
            "framing": self.framing,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "lower_unconditional": self.lower_unconditional,
            "conditions": list(self.conditions),
            "citations": list(self.citations),
            "boundary": self.boundary.to_dict() if self.boundary is not None else None,
            "realizations": list(self.realizations),
        }


class GenusOracle:
    """Rule tables plus a diagram catalog.  Immutable after construction."""

    def __init__(self, catalog=None):
        self.catalog = tuple(catalog) if catalog is not None else cat.default_catalog()

    def lower_bound(self, k, m):
        value, cites, conds = 1, [CITE_CHI], []
        fact = boundary_fact(k, m)
        if not (k.is_unknot and m in (1, -1)):
            if k.is_unknot or is_known_nontrivial(k):
                value, cites = 2, [CITE_PROPERTY_P]
        lens_pair = k.is_unknot or (k == torus(2, 3) and m == 5) or (k == torus(2, 3, mirror=-1) and m == -5)
        if is_known_nontrivial(k) and not lens_pair:
            value, cites = 3, [CITE_KMOS]
        unconditional = value
        if fact is not None and fact.not_m_three:
            if fact.conditional:
                conds.append(COND_ALMOST_ALL)
            else:
                unconditional = max(unconditional, 4)
            if value < 4:
                value, cites = 4, [CITE_MTHREE, fact.citation]
        if heegaard_rule_applies(k, m):
            h = genus_lower_bound_from_heegaard(len(k.params))
            unconditional = max(unconditional, h)
            if h > value or (h == value and conds):
                value, cites, conds = h, [CITE_HEEGAARD], []
            elif h == value:
                cites = cites + [CITE_HEEGAARD]
        return Bound(value, cites, conds, unconditional)

    def upper_bound(self, k, m):
        found = cat.realize(k, m, self.catalog)
        if not found:
            return Bound(None, [f"no catalog family realizes the {m}-trace of {k}"])
        g = found[0][0].genus
        best = [t for t in found if t[0].genus == g]
        cites, via = [], []
        for f, env, mirrored in best:
            cites.append(f.citation + (" (mirror image)" if mirrored else ""))
            via.append({"family": f.name, "params": env, "mirrored": mirrored, "genus": f.genus})
        return Bound(g, cites, via=via)

    def trace_genus(self, k, m):
        lo = self.lower_bound(k, m)
        hi = self.upper_bound(k, m)
        exact = lo.value if hi.value == lo.value else None
        cites = list(lo.citations) + (list(hi.citations) if hi.value is not None else [])
        return GenusResult(
            knot=str(k),
            framing=m,
            lower=lo.value,
            upper=hi.value,
            exact=exact,
            conditions=list(lo.conditions),
            citations=cites,
            lower_unconditional=lo.unconditional,
            boundary=boundary_classify(k, m),
            realizations=hi.via,
        )


_DEFAULT = None


def default_oracle():
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = GenusOracle()
    return _DEFAULT


def lower_bound(k, m):
    return default_oracle().lower_bound(k, m)


def upper_bound(k, m):
    return default_oracle().upper_bound(k, m)


def trace_genus(k, m):
    return default_oracle().trace_genus(k, m)
