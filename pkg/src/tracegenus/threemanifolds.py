"""Surgery arithmetic for the boundary 3-manifolds of knot traces.

Conventions
-----------
* ``L(p, q)`` is ``-p/q`` surgery on the unknot, so integer surgery ``m``
  on the unknot is ``L(-m, 1) = -L(m, 1)``.
* A :class:`LensSpace` stores ``p >= 0``, ``q`` reduced mod ``p`` and an
  orientation flag.  Because ``-L(p, q) = L(p, -q)``, the pair
  ``(q, +1)`` and ``(p - q, -1)`` describe the same oriented manifold; the
  constructor keeps whichever has the smaller ``q`` (``L(2,1)`` gets ``+1``).
  ``p = 0`` is ``S^1 x S^2`` and ``p = 1`` is ``S^3``.
* A linear chain of unknots with framings ``w1, ..., wn`` is, after slam
  dunks, surgery on one unknot with coefficient
  ``w1 - 1/(w2 - 1/(... - 1/wn))``.
"""

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import gcd

from . import linalg
from .errors import TranscriptionRequired, ValidationError
from .formula import evaluate
from .linalg import smith_normal_form  # noqa: F401  (re-exported)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank + Z/t1 + ... + Z/tn`` with ``t1 | t2 | ... | tn``."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        if self.rank < 0 or any(x < 2 for x in t):
            raise ValidationError(f"bad abelian group data rank={self.rank} torsion={t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValidationError(f"torsion {t} is not a divisibility chain")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_invariant_factors(cls, factors, ngens):
        """Cokernel of a map onto ``Z^ngens`` whose SNF diagonal is ``factors``."""
        nonzero = [abs(d) for d in factors if d]
        return cls(ngens - len(nonzero), tuple(d for d in nonzero if d > 1))

    @property
    def order(self):
        if self.rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion), "text": str(self)}


def cokernel(M, ngens=None):
    """Cokernel of the integer matrix ``M`` viewed as a map into ``Z^rows``."""
    rows = len(M) if ngens is None else ngens
    if not M or not M[0]:
        return AbelianGroup(rows)
    return AbelianGroup.from_invariant_factors(linalg.invariant_factors(M), rows)


@dataclass(frozen=True)
class LinkingMatrix:
    rows: tuple

    def __post_init__(self):
        R = tuple(tuple(int(x) for x in row) for row in self.rows)
        n = len(R)
        if any(len(row) != n for row in R):
            raise ValidationError("linking matrix must be square")
        for i in range(n):
            for j in range(i):
                if R[i][j] != R[j][i]:
                    raise ValidationError(f"linking matrix not symmetric at ({i},{j})")
        object.__setattr__(self, "rows", R)

    def as_lists(self):
        return [list(r) for r in self.rows]

    @property
    def det(self):
        return linalg.det(self.as_lists())


def h1_from_linking(M):
    """First homology of the 3-manifold presented by a framed link."""
    if not isinstance(M, LinkingMatrix):
        M = LinkingMatrix(M)
    return cokernel(M.as_lists())


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int = 1
    orientation: int = 1

    def __post_init__(self):
        p, q, o = int(self.p), int(self.q), int(self.orientation)
        if p < 0:
            raise ValidationError(f"lens space needs p >= 0, got {p}")
        if o not in (1, -1):
            raise ValidationError(f"orientation must be +1 or -1, got {o}")
        if gcd(p, q) != 1:
            raise ValidationError(f"L({p},{q}) needs gcd(p, q) = 1")
        if p == 0:
            q, o = 1, 1
        elif p == 1:
            q, o = 0, 1
        else:
            q %= p
            if p - q < q:
                q, o = p - q, -o
            elif p - q == q:
                o = 1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "orientation", o)

    @property
    def effective_q(self):
        """``q'`` with this space equal to ``+L(p, q')`` as an oriented manifold."""
        if self.p <= 1 or self.orientation == 1:
            return self.q
        return (-self.q) % self.p

    def is_s3(self):
        return self.p == 1

    def __neg__(self):
        return LensSpace(self.p, self.q, -self.orientation)

    def __str__(self):
        if self.p == 1:
            return "S^3"
        if self.p == 0:
            return "S^1 x S^2"
        sign = "-" if self.orientation < 0 else ""
        return f"{sign}L({self.p},{self.q})"

    def to_dict(self):
        return {"p": self.p, "q": self.q, "orientation": self.orientation, "text": str(self)}


def _as_fraction(r):
    """Return ``(num, den)`` with ``den >= 0``; ``den == 0`` means infinity."""
    if r is None or (isinstance(r, str) and r.strip().lower() in ("inf", "infinity", "oo")):
        return 1, 0
    if isinstance(r, tuple):
        num, den = r
        if num == 0 and den == 0:
            raise ValidationError("surgery coefficient 0/0 is undefined")
        if den == 0:
            return 1, 0
        g = gcd(num, den)
        num, den = num // g, den // g
        if den < 0:
            num, den = -num, -den
        return num, den
    f = Fraction(r)
    return f.numerator, f.denominator


def lens_from_surgery(r):
    """The lens space given by surgery on the unknot with coefficient ``r``.

    ``r`` may be an int, a :class:`~fractions.Fraction`, a ``(num, den)``
    pair (``den = 0`` for infinity), ``None`` or ``"inf"``.
    """
    num, den = _as_fraction(r)
    if den == 0:
        return LensSpace(1, 0)
    # -num/den = p/q
    if num == 0:
        return LensSpace(0, 1)
    if num < 0:
        return LensSpace(-num, den)
    return LensSpace(num, -den)


def chain_coefficient(weights):
    """Slam-dunk coefficient of a linear chain, as a ``(num, den)`` pair."""
    if not weights:
        raise ValidationError("a chain needs at least one weight")
    num, den = weights[-1], 1
    for w in reversed(weights[:-1]):
        num, den = w * num - den, num
    if den < 0:
        num, den = -num, -den
    return num, den


def chain_to_lens(weights):
    """Boundary of the linear plumbing of disk bundles with Euler numbers ``weights``."""
    return lens_from_surgery(chain_coefficient(list(weights)))


def lens_to_chain(L):
    """A weight chain whose boundary is ``L`` as an oriented manifold."""
    if L.p == 1:
        return [1]
    if L.p == 0:
        return [0]
    # -p/q' = [-c1, ..., -cn] where p/q' = [c1, ..., cn] with all ci >= 2
    p, q = L.p, L.effective_q
    out = []
    while q:
        c = -(-p // q)
        out.append(-c)
        p, q = q, c * q - p
    return out


def lens_homeo(x, y, oriented=False):
    """Whether two lens spaces are homeomorphic.

    By default orientation is ignored: ``L(p, q) = L(p, q')`` iff
    ``q' = +-q^{+-1} mod p``.  With ``oriented=True`` only
    orientation-preserving homeomorphisms count (``q' = q^{+-1}``).
    """
    if x.p != y.p:
        return False
    p = x.p
    if p <= 2:
        return True
    a, b = x.effective_q, y.effective_q
    inv = pow(a, -1, p)
    allowed = {a, inv}
    if not oriented:
        allowed |= {(-a) % p, (-inv) % p}
    return b in allowed


class ThreeTag(enum.Enum):
    S3 = "S3"
    LENS = "Lens"
    LENS_L_P1 = "LensL_p1"
    CONN_SUM_LENS = "ConnSumLens"
    M_THREE = "MThree"
    SMALL_SEIFERT = "SmallSeifert"
    TOROIDAL = "Toroidal"
    HYPERBOLIC = "Hyperbolic"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ThreeManifoldClass:
    """A tagged description of a closed 3-manifold.

    Only the fields relevant to ``tag`` are filled in.  ``seifert`` is
    ``(e0, ((a1, b1), ...))`` with exceptional fibers of type ``b/a`` as
    recorded by the source, not normalized.
    """

    tag: ThreeTag
    citation: str = ""
    lens: LensSpace = None
    summands: tuple = ()
    lens_p: int = None
    m_params: tuple = None
    seifert: tuple = None
    h1: AbelianGroup = None
    conditions: tuple = ()
    note: str = ""

    def __post_init__(self):
        if self.tag is not ThreeTag.UNKNOWN and not self.citation:
            raise ValidationError(f"{self.tag.value} classification needs a citation")

    def __str__(self):
        t = self.tag
        if t is ThreeTag.LENS and self.lens is not None:
            return str(self.lens)
        if t is ThreeTag.LENS_L_P1:
            return f"+-L({self.lens_p},1)"
        if t is ThreeTag.CONN_SUM_LENS and self.summands:
            return " # ".join(str(s) for s in self.summands)
        if t is ThreeTag.M_THREE:
            return "M({},{},{})".format(*self.m_params)
        if t is ThreeTag.SMALL_SEIFERT and self.seifert is not None:
            e0, fibers = self.seifert
            if all(b == 1 for _, b in fibers):
                return "S^2({})".format(",".join(str(a) for a, _ in fibers))
            inv = "; ".join(f"{b}/{a}" for a, b in fibers)
            return f"SFS(e0={e0}; {inv})"
        if self.conditions:
            return f"{t.value} (conditional)"
        return t.value

    def to_dict(self):
        out = {"tag": self.tag.value, "text": str(self), "citation": self.citation}
        if self.lens is not None:
            out["lens"] = self.lens.to_dict()
        if self.summands:
            out["summands"] = [s.to_dict() for s in self.summands]
        if self.lens_p is not None:
            out["lens_p"] = self.lens_p
        if self.m_params is not None:
            out["m_params"] = list(self.m_params)
        if self.seifert is not None:
            e0, fibers = self.seifert
            out["seifert"] = {"e0": e0, "fibers": [list(f) for f in fibers]}
        if self.h1 is not None:
            out["h1"] = self.h1.to_dict()
        if self.conditions:
            out["conditions"] = list(self.conditions)
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class MThreeParams:
    a1: int
    a2: int
    a3: int

    def as_tuple(self):
        return (self.a1, self.a2, self.a3)


def load_m3_linking(path=None):
    """Read the surgery-diagram template for ``M(a1, a2, a3)``."""
    if path is None:
        text = resources.files("tracegenus").joinpath("data/m3_linking.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    data = json.loads(text)
    if not data.get("linking"):
        raise TranscriptionRequired(
            "figure transcription required: the M(a1,a2,a3) surgery diagram has no linking data"
        )
    return data


def m3_linking_matrix(params, template=None):
    """Evaluate the transcribed template at ``(a1, a2, a3)``."""
    if template is None:
        template = load_m3_linking()
    a1, a2, a3 = params.as_tuple() if isinstance(params, MThreeParams) else params
    env = {"a1": a1, "a2": a2, "a3": a3}
    rows = [[evaluate(str(x), env) for x in row] for row in template["linking"]]
    return LinkingMatrix(rows)


_ARIKAN = "planar open books with three binding components (Arikan)"


def classify_M(params, linking=None):
    """Classify ``M(a1, a2, a3)``.

    The shipped template is the star-shaped plumbing with a 0-framed
    central unknot and three meridians framed ``a1, a2, a3``.  A 0-framed
    leaf splits the manifold as a connected sum of the other two leaves;
    a +-1-framed leaf blows down to a linear chain; otherwise the result is
    Seifert fibered over ``S^2`` with three fibers.
    """
    if not isinstance(params, MThreeParams):
        params = MThreeParams(*params)
    a = list(params.as_tuple())
    if linking is None:
        linking = m3_linking_matrix(params)
    elif not isinstance(linking, LinkingMatrix):
        linking = LinkingMatrix(linking)
    h1 = h1_from_linking(linking)

    if 0 in a:
        i = a.index(0)
        rest = [lens_from_surgery(a[j]) for j in range(3) if j != i]
        rest = [L for L in rest if not L.is_s3()]
        cite = _ARIKAN + "; a 0-framed leaf splits off the other two leaves"
        if len(rest) <= 1:
            L = rest[0] if rest else LensSpace(1, 0)
            return ThreeManifoldClass(ThreeTag.LENS, cite, lens=L, m_params=params.as_tuple(), h1=h1)
        return ThreeManifoldClass(ThreeTag.CONN_SUM_LENS, cite, summands=tuple(rest),
                                  m_params=params.as_tuple(), h1=h1)
    for i in range(3):
        if a[i] in (1, -1):
            j, k = [t for t in range(3) if t != i]
            L = chain_to_lens([a[j], -a[i], a[k]])
            cite = _ARIKAN + "; blowing down a +-1-framed leaf leaves a linear chain"
            return ThreeManifoldClass(ThreeTag.LENS, cite, lens=L, m_params=params.as_tuple(), h1=h1)
    fibers = tuple((x, 1) for x in a)
    return ThreeManifoldClass(
        ThreeTag.SMALL_SEIFERT,
        _ARIKAN + "; Seifert fibered outside the reducible cases",
        seifert=(0, fibers),
        m_params=params.as_tuple(),
        h1=h1,
    )
