"""Parameter arithmetic for relative trisections.

A ``(g, k; p, b)``-relative trisection has central surface of genus ``g``
with ``b`` boundary components, sectors that are genus-``k`` 4-dimensional
1-handlebodies, and induces an open book on the boundary whose page has
genus ``p`` and ``b`` boundary components.
"""

from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True, order=True)
class Page:
    p: int
    b: int

    def __post_init__(self):
        if self.p < 0 or self.b < 1:
            raise ValidationError(f"page needs p >= 0 and b >= 1, got ({self.p}, {self.b})")

    @property
    def heegaard_genus(self):
        """Genus of the Heegaard splitting induced by an open book with this page."""
        return 2 * self.p + self.b - 1


def type_violations(g, k, p, b):
    """Human-readable list of the constraints that ``(g,k;p,b)`` breaks."""
    out = []
    for name, value in (("g", g), ("k", k), ("p", p)):
        if value < 0:
            out.append(f"{name} >= 0 violated ({name} = {value})")
    if b < 1:
        out.append(f"b >= 1 violated (b = {b})")
    if k < 2 * p + b - 1:
        out.append(f"2p+b-1 <= k violated ({2 * p + b - 1} > {k})")
    if k > g + p + b - 1:
        out.append(f"k <= g+p+b-1 violated ({k} > {g + p + b - 1})")
    return out


@dataclass(frozen=True)
class TrisectionType:
    g: int
    k: int
    p: int
    b: int

    def __post_init__(self):
        bad = type_violations(self.g, self.k, self.p, self.b)
        if bad:
            raise ValidationError(f"invalid trisection type {self}: " + "; ".join(bad))

    def __str__(self):
        return f"({self.g},{self.k};{self.p},{self.b})"

    def as_tuple(self):
        return (self.g, self.k, self.p, self.b)

    @property
    def page(self):
        return Page(self.p, self.b)

    @property
    def parallel_pairs(self):
        return self.k - (2 * self.p + self.b - 1)

    @property
    def dual_pairs(self):
        return self.g - self.p - self.parallel_pairs


def euler_char(t):
    """Euler characteristic ``g - 3k + 3p + 2b - 1`` of a trisected manifold."""
    if not isinstance(t, TrisectionType):
        t = TrisectionType(*t)
    return t.g - 3 * t.k + 3 * t.p + 2 * t.b - 1


def admissible_types(g, chi):
    """All ``(g, k; p, b)`` types with Euler characteristic ``chi``.

    Solving the Euler relation for ``k`` and inserting it into
    ``2p + b - 1 <= k`` gives ``3p + b <= g + 2 - chi``, which bounds both
    loops.  Sorted by ``(k, p, b)``.
    """
    if g < 0:
        raise ValidationError(f"genus must be non-negative, got {g}")
    found = []
    slack = g + 2 - chi
    p = 0
    while 3 * p + 1 <= slack:
        for b in range(1, slack - 3 * p + 1):
            num = g + 3 * p + 2 * b - 1 - chi
            if num % 3:
                continue
            k = num // 3
            if k >= 0 and not type_violations(g, k, p, b):
                found.append(TrisectionType(g, k, p, b))
        p += 1
    return sorted(found, key=lambda t: (t.k, t.p, t.b))


def max_boundary_heegaard(g, chi):
    """Largest Heegaard genus ``2p+b-1`` induced on the boundary, or ``None``."""
    types = admissible_types(g, chi)
    if not types:
        return None
    return max(t.page.heegaard_genus for t in types)


def genus_lower_bound_from_heegaard(h):
    """Least trisection genus compatible with a boundary of Heegaard genus ``h``.

    Only meaningful for 4-manifolds with Euler characteristic 2 (knot
    traces).  Found by scanning genera, not from a closed form.
    """
    if h < 0:
        raise ValidationError(f"Heegaard genus must be non-negative, got {h}")
    g = 0
    while True:
        best = max_boundary_heegaard(g, 2)
        if best is not None and best >= h:
            return g
        g += 1
