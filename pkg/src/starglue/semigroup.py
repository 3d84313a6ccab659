"""Numerical semigroup arithmetic.

Membership, Apery sets, Frobenius number, genus, symmetry, the projectivized
semigroup inside N^2, and the gluing / star-gluing constructors with full
validity checking.  All values are immutable; every operation is a pure
function of its arguments.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from .errors import (
    Degenerate,
    InternalInconsistency,
    InvalidModulus,
    NotCoprime,
    NotNumerical,
    NotStar,
    Overlap,
    PIsGenerator,
    PNotInLeft,
    QIsGenerator,
    QNotInRight,
)

_INF = float("inf")


def _check_positive_ints(gens):
    if not gens:
        raise ValueError("generator list must be non-empty")
    for g in gens:
        if not isinstance(g, int) or isinstance(g, bool) or g <= 0:
            raise ValueError(f"generators must be positive integers, got {g!r}")


def _apery_values(gens, n):
    """Least element of <gens> in each residue class mod n.

    Shortest-path relaxation on the residue graph: nodes 0..n-1, edge
    j -> (j + g) mod n of weight g.  Requires gcd(gens) = 1 so every class
    is reachable."""
    dist = [_INF] * n
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in gens:
            nd = d + g
            nr = (r + g) % n
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    if any(d is _INF for d in dist):
        raise InternalInconsistency("residue class unreachable; gcd != 1?")
    return [int(d) for d in dist]


def _apery_with_parts(gens, n):
    """Per residue class: (least element a, least generator count among
    representations of a).  Same relaxation with lexicographic weights."""
    dist = [(_INF, _INF)] * n
    dist[0] = (0, 0)
    heap = [(0, 0, 0)]
    while heap:
        d, parts, r = heapq.heappop(heap)
        if (d, parts) > dist[r]:
            continue
        for g in gens:
            cand = (d + g, parts + 1)
            nr = (r + g) % n
            if cand < dist[nr]:
                dist[nr] = cand
                heapq.heappush(heap, (cand[0], cand[1], nr))
    return [(int(a), int(p)) for a, p in dist]


def _minimalize(gens):
    """Split sorted distinct generators into (minimal, redundant).

    g is redundant iff g = h + s with h a generator and s a nonzero element
    of the semigroup, i.e. g lies in the set of sums of two nonzero
    elements."""
    top = gens[-1]
    reach = [False] * (top + 1)
    reach[0] = True
    for v in range(1, top + 1):
        reach[v] = any(v >= g and reach[v - g] for g in gens)
    minimal, redundant = [], []
    for g in gens:
        if any(g > h and reach[g - h] for h in gens if h < g):
            redundant.append(g)
        else:
            minimal.append(g)
    return minimal, redundant


class _MinParts:
    """Lazy table of the least generator count representing each value
    (inf when the value is not in the semigroup)."""

    def __init__(self, gens):
        self.gens = gens
        self.table = [0]

    def __call__(self, v):
        t = self.table
        while len(t) <= v:
            x = len(t)
            best = _INF
            for g in self.gens:
                if g <= x and t[x - g] + 1 < best:
                    best = t[x - g] + 1
            t.append(best)
        return t[v]


@dataclass(frozen=True)
class NumericalSemigroup:
    """Numerical semigroup given by its minimal generators, sorted ascending.

    Use make_semigroup to construct: it sorts, deduplicates, discards
    non-minimal generators and validates gcd = 1.
    """

    generators: tuple[int, ...]
    redundant: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        _check_positive_ints(self.generators)
        if list(self.generators) != sorted(set(self.generators)):
            raise ValueError("generators must be sorted and distinct")

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @cached_property
    def _apery0(self):
        return _apery_values(self.generators, self.generators[0])

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"


def make_semigroup(gens) -> NumericalSemigroup:
    """Normalize a raw generator list into a numerical semigroup.

    Sorts, deduplicates and removes redundant generators silently (the
    removed ones are reported on the result's `redundant` field).  Raises
    NotNumerical when gcd != 1 and Degenerate when fewer than two minimal
    generators survive.
    """
    gens = list(gens)
    _check_positive_ints(gens)
    distinct = sorted(set(gens))
    g = 0
    for x in distinct:
        g = gcd(g, x)
    if g != 1:
        raise NotNumerical(f"gcd of generators is {g}, not 1")
    minimal, redundant = _minimalize(distinct)
    if len(minimal) < 2:
        raise Degenerate("fewer than two minimal generators")
    return NumericalSemigroup(tuple(minimal), tuple(redundant))


def contains(S: NumericalSemigroup, x: int) -> bool:
    """Membership via the Apery set of the multiplicity:
    x is in S iff x >= Ap(S, n1)[x mod n1]."""
    if x < 0:
        raise ValueError("membership is defined for non-negative integers")
    return x >= S._apery0[x % S.multiplicity]


@dataclass(frozen=True)
class AperySet:
    """Least elements of the semigroup per residue class mod the modulus;
    position j holds the class of j."""

    modulus: int
    elements: tuple[int, ...]

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def __iter__(self):
        return iter(self.elements)


def apery(S: NumericalSemigroup, n: int) -> AperySet:
    """Apery set of n in S; n must be a nonzero element of S."""
    if n <= 0 or not contains(S, n):
        raise InvalidModulus(f"{n} is not a nonzero element of {S}")
    return AperySet(n, tuple(_apery_values(S.generators, n)))


def frobenius(S: NumericalSemigroup) -> int:
    """Largest integer outside S."""
    return max(S._apery0) - S.multiplicity


def genus(S: NumericalSemigroup) -> int:
    """Number of gaps of S."""
    n = S.multiplicity
    return sum((a - r) // n for r, a in enumerate(S._apery0))


def is_symmetric(S: NumericalSemigroup) -> bool:
    """True iff the sorted Apery set pairs up to a constant sum:
    a_i + a_{n-1-i} = a_{n-1} for all i."""
    a = sorted(S._apery0)
    top = a[-1]
    return all(a[i] + a[len(a) - 1 - i] == top for i in range(len(a)))


# -- projectivized semigroup in N^2 ------------------------------------------


@dataclass(frozen=True)
class ProjectiveSemigroup:
    """Subsemigroup of N^2 generated by (n_i, n_r - n_i) for 0 <= i <= r,
    where n_0 = 0.  Every generator has coordinate sum n_r."""

    base: NumericalSemigroup
    generators2d: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        """The common coordinate sum n_r of the generators."""
        return self.base.generators[-1]

    @property
    def reversed_generators(self) -> tuple[int, ...]:
        """Generators of the reversed semigroup <n_r - n_1, ..., n_r>.

        Raw list: it may be non-minimal and may contain 1 (in which case the
        reversed semigroup is all of N); gcd is always 1."""
        nr = self.degree
        vals = sorted(nr - g for g in self.base.generators[:-1])
        return tuple(vals) + (nr,)

    @cached_property
    def _minparts(self):
        return _MinParts(self.base.generators)


def projectivize(S: NumericalSemigroup) -> ProjectiveSemigroup:
    nr = S.generators[-1]
    gens = ((0, nr),) + tuple((g, nr - g) for g in S.generators)
    return ProjectiveSemigroup(S, gens)


def contains2d(P: ProjectiveSemigroup, v) -> bool:
    """Membership of v in the projectivized semigroup.

    Every generator has coordinate sum n_r, so a member with coordinate sum
    d*n_r is a sum of exactly d generators; equivalently the first coordinate
    must be a sum of at most d of the base generators (padding with (0, n_r)).
    """
    v1, v2 = v
    if v1 < 0 or v2 < 0:
        raise ValueError("coordinates must be non-negative")
    nr = P.degree
    total = v1 + v2
    if total % nr:
        return False
    return P._minparts(v1) <= total // nr


@dataclass(frozen=True)
class ProjectiveAperySet:
    """Apery set of the projectivized semigroup with respect to n_r.

    points[0] = (0, n_r), points[-1] = (n_r, 0); the n_r - 1 interior points
    (u, m) have u ranging over the nonzero classical Apery set of the base
    and m minimal with (u, m) in the projectivized semigroup, sorted by u.
    """

    semigroup: ProjectiveSemigroup
    modulus: int
    points: tuple[tuple[int, int], ...]

    @property
    def interior(self) -> tuple[tuple[int, int], ...]:
        return self.points[1:-1]


def projective_apery(P: ProjectiveSemigroup) -> ProjectiveAperySet:
    """Compute the 2-D Apery set.

    For u in Ap(base, n_r) the least valid second coordinate is
    parts(u)*n_r - u where parts(u) is the least generator count among the
    representations of u; both come out of one lexicographic shortest-path
    pass over the residue classes."""
    nr = P.degree
    pairs = _apery_with_parts(P.base.generators, nr)
    interior = sorted((a, parts * nr - a) for a, parts in pairs if a != 0)
    points = ((0, nr),) + tuple(interior) + ((nr, 0),)
    return ProjectiveAperySet(P, nr, points)


def good_apery_mismatch(B: ProjectiveAperySet) -> tuple[int, ...]:
    """Second coordinates of the Apery set that are missing from the Apery
    set of the reversed semigroup; empty iff the Apery set is good."""
    mu = {m for _, m in B.interior} | {0}
    ap2 = set(_apery_values(B.semigroup.reversed_generators, B.modulus))
    return tuple(sorted(mu - ap2))


def is_good_apery(B: ProjectiveAperySet) -> bool:
    """True iff the second coordinates (plus 0) reproduce the Apery set of
    the reversed semigroup with respect to n_r."""
    return not good_apery_mismatch(B)


# -- gluing -------------------------------------------------------------------


def represent(gens, value) -> tuple[int, ...] | None:
    """Some non-negative integer combination of gens equal to value, or None.

    Deterministic: backtracks through a reachability table preferring the
    smallest generator index at each step."""
    if value < 0:
        return None
    reach = [False] * (value + 1)
    reach[0] = True
    for v in range(1, value + 1):
        reach[v] = any(v >= g and reach[v - g] for g in gens)
    if not reach[value]:
        return None
    coeffs = [0] * len(gens)
    v = value
    while v:
        for i, g in enumerate(gens):
            if v >= g and reach[v - g]:
                coeffs[i] += 1
                v -= g
                break
    return tuple(coeffs)


@dataclass(frozen=True)
class GluingSpec:
    """Data of a gluing: scale the left generators by q and the right ones
    by p, where p = sum(bvec * left.generators) and
    q = sum(avec * right.generators).

    With star=True the p-representation must be concentrated on the largest
    left generator and sum(avec) <= that coefficient.
    """

    left: NumericalSemigroup
    right: NumericalSemigroup
    p: int
    q: int
    bvec: tuple[int, ...]
    avec: tuple[int, ...]
    star: bool = False

    def validate(self) -> None:
        m, n = self.left.generators, self.right.generators
        if len(self.bvec) != len(m) or len(self.avec) != len(n):
            raise ValueError("coefficient vector length mismatch")
        if any(c < 0 for c in self.bvec) or any(c < 0 for c in self.avec):
            raise ValueError("coefficient vectors must be non-negative")
        if sum(b * g for b, g in zip(self.bvec, m)) != self.p:
            raise PNotInLeft(f"bvec does not represent p={self.p} over {self.left}")
        if sum(a * g for a, g in zip(self.avec, n)) != self.q:
            raise QNotInRight(f"avec does not represent q={self.q} over {self.right}")
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"gcd(p, q) = {gcd(self.p, self.q)}")
        if self.p in m:
            raise PIsGenerator(f"p={self.p} is a generator of the left semigroup")
        if self.q in n:
            raise QIsGenerator(f"q={self.q} is a generator of the right semigroup")
        common = {self.q * g for g in m} & {self.p * g for g in n}
        if common:
            raise Overlap(f"scaled generator lists share {sorted(common)}")
        if self.star:
            if any(self.bvec[:-1]):
                raise NotStar("star gluing needs p concentrated on the largest left generator")
            if sum(self.avec) > self.bvec[-1]:
                raise NotStar(
                    f"sum(avec)={sum(self.avec)} exceeds b_l={self.bvec[-1]}"
                )

    def glued_generators(self) -> tuple[int, ...]:
        """Scaled generators in left-then-right order (not sorted)."""
        return tuple(self.q * g for g in self.left.generators) + tuple(
            self.p * g for g in self.right.generators
        )

    def to_json(self) -> dict:
        return {
            "left": format_generators(self.left),
            "right": format_generators(self.right),
            "p": self.p,
            "q": self.q,
            "bvec": list(self.bvec),
            "avec": list(self.avec),
            "star": self.star,
        }

    @staticmethod
    def from_json(data: dict) -> "GluingSpec":
        return GluingSpec(
            left=make_semigroup(parse_generators(data["left"])),
            right=make_semigroup(parse_generators(data["right"])),
            p=data["p"],
            q=data["q"],
            bvec=tuple(data["bvec"]),
            avec=tuple(data["avec"]),
            star=bool(data["star"]),
        )


def gluing_spec(left, right, p, q, bvec=None, avec=None, star=False) -> GluingSpec:
    """Build and validate a GluingSpec, solving for missing coefficient
    vectors (PNotInLeft / QNotInRight when no representation exists)."""
    if bvec is None:
        bvec = represent(left.generators, p)
        if bvec is None:
            raise PNotInLeft(f"p={p} is not an element of {left}")
    if avec is None:
        avec = represent(right.generators, q)
        if avec is None:
            raise QNotInRight(f"q={q} is not an element of {right}")
    spec = GluingSpec(left, right, p, q, tuple(bvec), tuple(avec), star)
    spec.validate()
    return spec


@dataclass(frozen=True)
class GlueResult:
    """Glued semigroup plus the provenance of each scaled generator."""

    semigroup: NumericalSemigroup
    provenance: tuple[tuple[int, str, int], ...]  # (glued value, side, source)


def glue(spec: GluingSpec) -> GlueResult:
    """Glue the two semigroups: generators {q*m_i} united with {p*n_j}."""
    spec.validate()
    glued = make_semigroup(spec.glued_generators())
    prov = tuple(
        sorted(
            [(spec.q * g, "left", g) for g in spec.left.generators]
            + [(spec.p * g, "right", g) for g in spec.right.generators]
        )
    )
    return GlueResult(glued, prov)


def star_glue(left: NumericalSemigroup, right: NumericalSemigroup, b_l: int, avec) -> GluingSpec:
    """Build a star gluing: p = b_l * (largest left generator), q = avec
    applied to the right generators, requiring sum(avec) <= b_l.

    Also confirms that p * n_k ends up the largest glued generator, which
    the star inequality forces."""
    avec = tuple(avec)
    if b_l < 2:
        raise NotStar(f"b_l must be at least 2, got {b_l}")
    if len(avec) != len(right.generators) or any(a < 0 for a in avec):
        raise ValueError("avec must be non-negative, one entry per right generator")
    if sum(avec) == 0:
        raise ValueError("avec must have positive sum")
    if sum(avec) > b_l:
        raise NotStar(f"sum(avec)={sum(avec)} exceeds b_l={b_l}")
    p = b_l * left.generators[-1]
    q = sum(a * g for a, g in zip(avec, right.generators))
    bvec = (0,) * (len(left.generators) - 1) + (b_l,)
    spec = GluingSpec(left, right, p, q, bvec, avec, star=True)
    spec.validate()
    top = max(spec.glued_generators())
    if top != p * right.generators[-1]:
        raise InternalInconsistency(
            "star gluing did not put p*n_k on top; validation is broken"
        )
    return spec


# -- text round trips ----------------------------------------------------------


def parse_generators(text: str) -> tuple[int, ...]:
    """Parse a comma-separated generator list like "3,5"."""
    try:
        gens = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse generator list {text!r}") from None
    return gens


def format_generators(S) -> str:
    gens = S.generators if isinstance(S, NumericalSemigroup) else S
    return ",".join(map(str, gens))
