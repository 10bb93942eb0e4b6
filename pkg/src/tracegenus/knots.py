"""Knot specifications for the families handled by the genus oracle.

Grammar::

    spec   := ["mirror:"] body
    body   := "U" | "T(p,q)" | "P(p1,...,pr)" | "4_1"

Normal forms:

* ``T(p, q)`` keeps ``2 <= p < q``; the sign of ``p*q`` becomes the mirror
  flag, so ``T(-2,3)`` and ``mirror:T(2,3)`` are the same knot.
  ``|p| <= 1`` or ``|q| <= 1`` is the unknot.
* Pretzel knots absorb the mirror flag into their entries (the mirror of
  ``P(p1,...,pr)`` is ``P(-p1,...,-pr)``) and are stored as the least
  arrangement under rotation and reversal.  Three-strand pretzels thus
  become sorted tuples.  The torus knots among ``P(-2,3,2n-1)`` are
  rewritten: ``P(-2,3,1) = T(2,5)``, ``P(-2,3,3) = T(3,4)`` and
  ``P(-2,3,5) = T(3,5)``.
* The unknot and the figure-eight knot are amphichiral, so their flag is
  always ``+1``.
"""

import re
from dataclasses import dataclass
from math import gcd

from .errors import ValidationError

UNKNOT = "unknot"
TORUS = "torus"
PRETZEL = "pretzel"
FIGURE_EIGHT = "figure-eight"

_TORUS_PRETZELS = {
    (-2, 1, 3): (2, 5),
    (-2, 3, 3): (3, 4),
    (-2, 3, 5): (3, 5),
}


@dataclass(frozen=True)
class KnotSpec:
    kind: str
    params: tuple = ()
    mirror: int = 1

    def __str__(self):
        if self.kind == UNKNOT:
            return "U"
        if self.kind == FIGURE_EIGHT:
            return "4_1"
        if self.kind == TORUS:
            body = "T({},{})".format(*self.params)
            return body if self.mirror == 1 else "mirror:" + body
        return "P({})".format(",".join(str(x) for x in self.params))

    def mirrored(self):
        if self.kind == PRETZEL:
            return pretzel(*[-x for x in self.params])
        if self.kind == TORUS:
            return KnotSpec(TORUS, self.params, -self.mirror)
        return self

    @property
    def is_unknot(self):
        return self.kind == UNKNOT

    def to_dict(self):
        return {"kind": self.kind, "params": list(self.params), "mirror": self.mirror, "text": str(self)}


def unknot():
    return KnotSpec(UNKNOT)


def figure_eight():
    return KnotSpec(FIGURE_EIGHT)


def torus(p, q, mirror=1):
    if gcd(p, q) != 1:
        raise ValidationError(f"T({p},{q}) is a link: gcd({p},{q}) != 1")
    if abs(p) <= 1 or abs(q) <= 1:
        return unknot()
    a, b = sorted((abs(p), abs(q)))
    sign = mirror * (1 if p * q > 0 else -1)
    return KnotSpec(TORUS, (a, b), sign)


def _dihedral_min(entries):
    n = len(entries)
    cands = []
    for seq in (entries, entries[::-1]):
        for s in range(n):
            cands.append(tuple(seq[s:] + seq[:s]))
    return min(cands)


def is_pretzel_knot(entries):
    """A pretzel link has one component iff it has exactly one even entry,
    or it has an odd number of strands and no even entry."""
    evens = sum(1 for x in entries if x % 2 == 0)
    return evens == 1 or (evens == 0 and len(entries) % 2 == 1)


def pretzel(*entries, mirror=1):
    entries = [int(x) * mirror for x in entries]
    if len(entries) < 3:
        raise ValidationError(f"pretzel knots need at least 3 strands, got {len(entries)}")
    if not is_pretzel_knot(entries):
        raise ValidationError("P({}) is a link, not a knot".format(",".join(map(str, entries))))
    canon = tuple(sorted(entries)) if len(entries) == 3 else _dihedral_min(entries)
    if canon in _TORUS_PRETZELS:
        return torus(*_TORUS_PRETZELS[canon])
    neg = tuple(sorted(-x for x in canon)) if len(canon) == 3 else None
    if neg in _TORUS_PRETZELS:
        return torus(*_TORUS_PRETZELS[neg], mirror=-1)
    return KnotSpec(PRETZEL, canon, 1)


def palindromic_arrangement(entries):
    """Whether some rotation or reversal of the strands reads the same backwards."""
    n = len(entries)
    seq = list(entries)
    for s in range(n):
        r = seq[s:] + seq[:s]
        if r == r[::-1]:
            return True
    return False


def pt_family_index(k):
    """``n`` with ``k = P(-2,3,2n-1)`` (either chirality), as ``(n, chirality)``, else ``None``."""
    if k.kind != PRETZEL or len(k.params) != 3:
        return None
    for sign in (1, -1):
        e = sorted(sign * x for x in k.params)
        if -2 in e:
            e.remove(-2)
            if 3 in e:
                e.remove(3)
                c = e[0]
                if c % 2:
                    return (c + 1) // 2, sign
    return None


_TOKEN = re.compile(r"^\s*(mirror:)?\s*(.*?)\s*$", re.IGNORECASE)
_TUPLE = re.compile(r"^([TP])\s*\(([^()]*)\)$", re.IGNORECASE)


def parse_knot(text):
    m = _TOKEN.match(text or "")
    body = m.group(2)
    flip = -1 if m.group(1) else 1
    if body.upper() in ("U", "O", "UNKNOT"):
        return unknot()
    if body in ("4_1", "4-1", "fig8", "figure-eight"):
        return figure_eight()
    t = _TUPLE.match(body)
    if not t:
        raise ValidationError(f"cannot parse knot spec {text!r}; expected U, T(p,q), P(p1,...,pr) or 4_1")
    try:
        nums = [int(x) for x in t.group(2).split(",")]
    except ValueError as exc:
        raise ValidationError(f"non-integer entry in knot spec {text!r}") from exc
    if t.group(1).upper() == "T":
        if len(nums) != 2:
            raise ValidationError(f"torus knot needs two parameters, got {len(nums)}")
        return torus(nums[0], nums[1], mirror=flip)
    return pretzel(*nums, mirror=flip)


def knot_from_formula(kind, args):
    """Build a knot from catalog metadata (``kind`` plus integer arguments)."""
    if kind == UNKNOT:
        return unknot()
    if kind == FIGURE_EIGHT:
        return figure_eight()
    if kind == TORUS:
        return torus(*args)
    if kind == PRETZEL:
        return pretzel(*args)
    raise ValidationError(f"unknown knot kind {kind!r}")
