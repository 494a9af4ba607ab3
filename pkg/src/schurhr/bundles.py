"""Formal split vector bundles, rationally twisted, on a product of
projective spaces.

A bundle is a direct sum of line pieces given by integer multidegrees over
the hyperplane classes, together with a rational twist vector delta; the
Chern roots are (line_i + delta) as degree-1 classes.  On these spaces a
degree-1 class is nef exactly when its coordinates are nonnegative, so a
split twisted bundle is nef exactly when every root is coordinatewise
nonnegative.
"""

from math import comb

from .cohomology import CohClass, Space, class_det
from .errors import SpaceMismatchError
from .partitions import Partition
from .rationals import fmt_q, parse_q


class SplitBundle:
    """Direct sum of twisted line bundles on a Space."""

    __slots__ = ("space", "lines", "twist")

    def __init__(self, space, lines, twist=None):
        if not isinstance(space, Space):
            raise TypeError("space must be a Space")
        lines = tuple(tuple(int(a) for a in line) for line in lines)
        if not lines:
            raise ValueError("a bundle needs at least one line piece")
        for line in lines:
            if len(line) != space.k:
                raise SpaceMismatchError(
                    f"line multidegree {line} does not match {space!r}"
                )
        if twist is None:
            twist = (0,) * space.k
        twist = tuple(parse_q(c) for c in twist)
        if len(twist) != space.k:
            raise SpaceMismatchError(f"twist {twist} does not match {space!r}")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "lines", lines)
        object.__setattr__(self, "twist", twist)

    def __setattr__(self, name, value):
        raise AttributeError("SplitBundle is immutable")

    @property
    def rank(self):
        return len(self.lines)

    def root_vectors(self):
        """Chern root coordinate vectors (line + twist), one per line piece."""
        return [
            tuple(a + d for a, d in zip(line, self.twist)) for line in self.lines
        ]

    def chern_roots(self):
        return [CohClass.linear(self.space, v) for v in self.root_vectors()]

    def untwisted(self):
        return SplitBundle(self.space, self.lines)

    def twisted_by(self, delta):
        """The bundle with delta added to the twist (twists compose additively)."""
        delta = tuple(parse_q(c) for c in delta)
        if len(delta) != self.space.k:
            raise SpaceMismatchError("twist vector has the wrong length")
        return SplitBundle(
            self.space,
            self.lines,
            tuple(a + b for a, b in zip(self.twist, delta)),
        )

    def is_nef(self):
        return all(all(c >= 0 for c in v) for v in self.root_vectors())

    def direct_sum(self, other):
        if self.space != other.space:
            raise SpaceMismatchError("bundles live on different spaces")
        if self.twist != other.twist:
            raise ValueError("direct sums are only formed at equal twists")
        return SplitBundle(self.space, self.lines + other.lines, self.twist)

    def __eq__(self, other):
        return (
            isinstance(other, SplitBundle)
            and self.space == other.space
            and self.lines == other.lines
            and self.twist == other.twist
        )

    __hash__ = None

    def __repr__(self):
        return f"SplitBundle({self.space!r}, lines={list(self.lines)}, twist={list(self.twist)})"

    def to_json(self):
        return {
            "lines": [list(line) for line in self.lines],
            "twist": [fmt_q(c) for c in self.twist],
        }

    @classmethod
    def from_json(cls, data, space):
        return cls(space, data["lines"], data.get("twist"))


def class_is_nef(h):
    """Nefness of a degree-1 class: coordinatewise nonnegative."""
    if h.is_zero:
        return True
    if h.degree() != 1:
        raise ValueError("nefness test expects a degree-1 class")
    return all(c >= 0 for c in h.terms.values())


def class_is_ample(h):
    """Ampleness of a degree-1 class: every coordinate strictly positive."""
    if h.is_zero:
        return False
    if h.degree() != 1:
        raise ValueError("ampleness test expects a degree-1 class")
    coords = [h.coefficient(tuple(1 if i == j else 0 for i in range(h.space.k)))
              for j in range(h.space.k)]
    return all(c > 0 for c in coords)


def chern_all(E):
    """Total Chern class as the list [c_0(E), ..., c_rank(E)]."""
    space = E.space
    cs = [CohClass.unit(space)]
    for root in E.chern_roots():
        nxt = [cs[0]]
        for p in range(1, len(cs)):
            nxt.append(cs[p] + cs[p - 1] * root)
        nxt.append(cs[-1] * root)
        cs = nxt
    return cs


def chern(E, p):
    """p-th Chern class from the root expansion (zero outside 0..rank)."""
    p = int(p)
    if p < 0 or p > E.rank:
        return CohClass.zero(E.space)
    return chern_all(E)[p]


def chern_twist_rule(E, p):
    """p-th Chern class via the twist rule
    sum_k binom(e-k, p-k) c_k(untwisted E) delta^(p-k).

    Agrees exactly with the root expansion; kept as an independent route.
    """
    p = int(p)
    e = E.rank
    if p < 0 or p > e:
        return CohClass.zero(E.space)
    base = chern_all(E.untwisted())
    delta = CohClass.linear(E.space, E.twist)
    dpow = [CohClass.unit(E.space)]
    for _ in range(p):
        dpow.append(dpow[-1] * delta)
    total = CohClass.zero(E.space)
    for k in range(p + 1):
        total = total + comb(e - k, p - k) * (base[k] * dpow[p - k])
    return total


def char_class(p, E):
    """Characteristic class p(E): the symmetric polynomial p at the roots."""
    if p.nvars != E.rank:
        raise ValueError(
            f"polynomial in {p.nvars} variables cannot evaluate a rank-{E.rank} bundle"
        )
    if not p.is_symmetric():
        raise ValueError("characteristic classes need a symmetric polynomial")
    space = E.space
    roots = E.chern_roots()
    maxdeg = p.per_variable_degrees()
    powers = []
    for j, root in enumerate(roots):
        col = [CohClass.unit(space)]
        for _ in range(maxdeg[j]):
            col.append(col[-1] * root)
        powers.append(col)
    total = CohClass.zero(space)
    for exps, c in p.terms.items():
        prod = CohClass.unit(space)
        for j, x in enumerate(exps):
            if x:
                prod = prod * powers[j][x]
                if prod.is_zero:
                    break
        total = total + prod.scale(c)
    return total


def schur_class(lam, E):
    """Schur class from the determinant in the Chern classes of E."""
    lam = Partition(lam)
    if lam.first > E.rank:
        return CohClass.zero(E.space)
    parts = lam.normalized
    if not parts:
        return CohClass.unit(E.space)
    cs = chern_all(E)
    zero = CohClass.zero(E.space)
    n = len(parts)

    def entry(i):
        return cs[i] if 0 <= i <= E.rank else zero

    rows = [[entry(parts[r] - r + s) for s in range(n)] for r in range(n)]
    return class_det(rows)


def derived_schur_classes(lam, E, imax=None):
    """The classes (s_lam^(0)(E), ..., s_lam^(imax)(E)) in one pass.

    Computed on the product with an extra projective factor: twisting by
    the new hyperplane class and expanding the Schur class in its powers
    yields every shift-order slice at once.
    """
    lam = Partition(lam)
    b = lam.weight
    if imax is None:
        imax = b
    imax = min(int(imax), b)
    if imax < 0:
        return []
    if lam.first > E.rank:
        return [CohClass.zero(E.space)] * (imax + 1)
    if b == 0:
        return [CohClass.unit(E.space)]
    m = max(imax, 1)
    space = E.space
    aug = Space(space.factors + (m,))
    lifted = SplitBundle(
        aug,
        [line + (0,) for line in E.lines],
        E.twist + (1,),
    )
    s = schur_class(lam, lifted)
    buckets = [{} for _ in range(imax + 1)]
    for exps, c in s.terms.items():
        i = exps[-1]
        if i <= imax:
            buckets[i][exps[:-1]] = c
    return [CohClass(space, terms) for terms in buckets]


def derived_schur_class(lam, i, E):
    """Single shift-order slice s_lam^(i)(E); zero outside 0 <= i <= |lam|."""
    lam = Partition(lam)
    i = int(i)
    if i < 0 or i > lam.weight:
        return CohClass.zero(E.space)
    return derived_schur_classes(lam, E, imax=i)[i]
