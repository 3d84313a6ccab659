"""Arithmetic Cohen-Macaulayness and Gorensteinness of projective closures.

Two independent ACM tests (leading monomials of the affine basis vs the good
Apery set of the projectivized semigroup) and two independent Gorenstein
tests (Apery point pairing vs palindromy of the reduced Hilbert numerator);
full_verdict runs all of them and refuses to return silently when criteria
that provably agree disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (
    InternalInconsistency,
    NotCohenMacaulay,
    PreconditionViolated,
    SpecMismatch,
)
from .poly import mono_divides
from .semigroup import (
    NumericalSemigroup,
    ProjectiveSemigroup,
    good_apery_mismatch,
    projective_apery,
    projectivize,
)
from .toric import (
    MonomialCurveIdeal,
    ProjectiveCurveIdeal,
    defining_ideal,
    projective_closure_ideal,
    sort_curve_ideal,
)


@dataclass(frozen=True)
class HilbertSeries:
    """Hilbert series numerator(t) / (1-t)^denominator_power, constant
    coefficient first; reduced means numerator(1) != 0."""

    numerator: tuple[int, ...]
    denominator_power: int
    reduced: bool

    @property
    def is_palindromic(self) -> bool:
        return self.numerator == tuple(reversed(self.numerator))

    def expand(self, degree: int) -> list[int]:
        """Series coefficients up to the given degree."""
        p = self.denominator_power
        out = []
        for d in range(degree + 1):
            total = 0
            for i, c in enumerate(self.numerator):
                if i > d:
                    break
                total += c * (comb(d - i + p - 1, p - 1) if p else (d == i))
            out.append(total)
        return out


def _minimalize_monomials(gens):
    out = []
    for m in sorted(gens, key=lambda e: (sum(e), e)):
        if all(not mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict[int, int] = {}
    for i, c in a.items():
        for j, d in b.items():
            k = i + j
            v = out.get(k, 0) + c * d
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def _pivot_variable(gens) -> int | None:
    """Most frequent variable among generators supported on >= 2 variables;
    None when every generator is a pure power (base case)."""
    nvars = len(gens[0])
    mixed_vars = set()
    for m in gens:
        support = [i for i, e in enumerate(m) if e]
        if len(support) >= 2:
            mixed_vars.update(support)
    if not mixed_vars:
        return None
    freq = [0] * nvars
    for m in gens:
        for i, e in enumerate(m):
            if e:
                freq[i] += 1
    return max(mixed_vars, key=lambda i: (freq[i], -i))


def hilbert_numerator(gens, nvars: int) -> list[int]:
    """Numerator of the Hilbert series of R/I over (1-t)^nvars for the
    monomial ideal I, by pivot splitting: with x a pivot variable,
    N(I) = N(I + (x)) + t * N(I : x).  Base case (pairwise coprime pure
    powers x^a): product of (1 - t^a)."""
    total: dict[int, int] = {}
    stack = [(_minimalize_monomials([tuple(m) for m in gens]), 0)]
    while stack:
        A, shift = stack.pop()
        if any(sum(m) == 0 for m in A):
            continue  # ideal is the whole ring, contributes nothing
        pivot = _pivot_variable(A) if A else None
        if pivot is None:
            poly = {0: 1}
            for m in A:
                poly = _poly_mul(poly, {0: 1, sum(m): -1})
            for d, c in poly.items():
                v = total.get(d + shift, 0) + c
                if v:
                    total[d + shift] = v
                elif d + shift in total:
                    del total[d + shift]
        else:
            unit = tuple(1 if i == pivot else 0 for i in range(nvars))
            plus = _minimalize_monomials(A + [unit])
            colon = _minimalize_monomials(
                [
                    tuple(e - 1 if i == pivot and e else e for i, e in enumerate(m))
                    for m in A
                ]
            )
            stack.append((plus, shift))
            stack.append((colon, shift + 1))
    if not total:
        return [0]
    top = max(total)
    return [total.get(d, 0) for d in range(top + 1)]


def hilbert_series(gens, nvars: int) -> HilbertSeries:
    """Hilbert series of R/I for the monomial ideal I, reduced to lowest
    terms (all common (1-t) factors cancelled)."""
    num = hilbert_numerator(gens, nvars)
    power = nvars
    while power > 0 and sum(num) == 0 and any(num):
        # divide by (1 - t): q_i = n_i + q_{i-1}, degree drops by one
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q if q else [0]
        power -= 1
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    if num == [0]:
        power = 0
    return HilbertSeries(tuple(num), power, True)


# -- ACM criteria ----------------------------------------------------------------


def is_acm_groebner(P: ProjectiveCurveIdeal):
    """Leading-monomial test: the closure is arithmetically Cohen-Macaulay
    iff no leading monomial of the reduced affine basis involves the last
    curve variable (the one carrying the largest weight).

    Returns (flag, witness); the witness is the offending generator."""
    affine = P.affine
    if not affine.basis.reduced or not affine.basis.order.is_identity_degrevlex():
        raise PreconditionViolated("leading-monomial test needs the reduced degrevlex basis")
    if affine.weights[-1] != max(affine.weights):
        raise PreconditionViolated(
            "last variable must carry the largest generator; re-present the ideal first"
        )
    last = len(affine.ambient) - 1
    for g in affine.basis.generators:
        if g.lm()[last]:
            return False, str(g)
    return True, None


def is_acm_apery(P: ProjectiveSemigroup):
    """Good-Apery-set test.  Returns (flag, witness); the witness lists the
    second coordinates missing from the reversed semigroup's Apery set."""
    mismatch = good_apery_mismatch(projective_apery(P))
    if mismatch:
        return False, mismatch
    return True, None


# -- Gorenstein criteria -----------------------------------------------------------


def is_gorenstein_apery(P: ProjectiveSemigroup):
    """Apery pairing test, valid only on ACM closures: with the interior
    Apery points sorted by first coordinate, the top point must equal
    b_i + b_{top-i} for every i.  Returns (flag, witness) with the first
    failing index as witness."""
    acm, _ = is_acm_apery(P)
    if not acm:
        raise NotCohenMacaulay("Apery Gorenstein test needs an ACM closure")
    pts = projective_apery(P).interior
    m = len(pts)
    top = pts[-1]
    for i in range(1, m):
        a, b = pts[i - 1], pts[m - 1 - i]
        if (a[0] + b[0], a[1] + b[1]) != top:
            return False, i
    return True, None


def closure_hilbert_series(P: ProjectiveCurveIdeal) -> HilbertSeries:
    """Reduced Hilbert series of the closure's coordinate ring, computed
    from the initial ideal of the homogenized basis."""
    lms = [g.lm() for g in P.basis.generators]
    return hilbert_series(lms, len(P.ambient))


def is_gorenstein_hilbert(P: ProjectiveCurveIdeal):
    """Hilbert-series test, valid only on ACM closures: the closure is
    Gorenstein iff the reduced Hilbert numerator is palindromic (the
    functional equation H(1/t) = t^l H(t) in dimension two).  Returns
    (flag, witness) with the numerator as witness."""
    acm, _ = is_acm_groebner(P)
    if not acm:
        raise NotCohenMacaulay("Hilbert Gorenstein test needs an ACM closure")
    series = closure_hilbert_series(P)
    if series.denominator_power != 2:
        raise InternalInconsistency(
            f"ACM projective curve must have dimension 2, got {series.denominator_power}"
        )
    return series.is_palindromic, series.numerator


# -- combined verdict ---------------------------------------------------------------


@dataclass(frozen=True)
class CurveVerdict:
    """Outcome of all four criteria for one curve.

    The Gorenstein flags are None when the closure is not ACM (the tests
    are then inapplicable, which is different from failing them)."""

    semigroup: NumericalSemigroup
    acm_groebner: bool
    acm_apery: bool
    gorenstein_apery: bool | None
    gorenstein_hilbert: bool | None
    witnesses: tuple[tuple[str, object], ...]
    closure: ProjectiveCurveIdeal
    apery_points: tuple[tuple[int, int], ...]
    hilbert: HilbertSeries

    @property
    def acm(self) -> bool:
        return self.acm_groebner

    @property
    def gorenstein(self) -> bool:
        return bool(self.gorenstein_apery)

    def witness(self, name: str):
        for key, value in self.witnesses:
            if key == name:
                return value
        return None

    def to_json(self) -> dict:
        from .semigroup import format_generators
        from .toric import ideal_to_json

        return {
            "generators": format_generators(self.semigroup),
            "acm_groebner": self.acm_groebner,
            "acm_apery": self.acm_apery,
            "gorenstein_apery": self.gorenstein_apery,
            "gorenstein_hilbert": self.gorenstein_hilbert,
            "witnesses": {k: v for k, v in self.witnesses},
            "closure": ideal_to_json(self.closure),
            "apery_points": [list(p) for p in self.apery_points],
            "hilbert_numerator": list(self.hilbert.numerator),
            "hilbert_denominator_power": self.hilbert.denominator_power,
        }


def full_verdict(
    S: NumericalSemigroup,
    *,
    affine_ideal: MonomialCurveIdeal | None = None,
    max_embedding_dim: int = 8,
    limit: int = 5000,
    deadline=None,
) -> CurveVerdict:
    """Run the whole pipeline: defining ideal, projective closure, both ACM
    tests, and both Gorenstein tests when applicable.

    `affine_ideal` may supply a precomputed basis (for glued curves this
    avoids re-eliminating from scratch); it is re-presented with ascending
    weights when its last variable does not carry the largest one.  The two
    ACM criteria (and, on ACM curves, the two Gorenstein criteria) must
    agree; disagreement raises InternalInconsistency."""
    if affine_ideal is None:
        ideal = defining_ideal(
            S, max_embedding_dim=max_embedding_dim, limit=limit, deadline=deadline
        )
    else:
        if affine_ideal.semigroup != S:
            raise SpecMismatch("supplied ideal belongs to a different semigroup")
        if not affine_ideal.basis.reduced:
            raise PreconditionViolated("supplied ideal must carry a reduced basis")
        ideal = affine_ideal
        if ideal.weights[-1] != max(ideal.weights):
            ideal = sort_curve_ideal(ideal, limit=limit, deadline=deadline)
    closure = projective_closure_ideal(ideal)
    proj = projectivize(S)
    acm_g, offender = is_acm_groebner(closure)
    acm_a, missing = is_acm_apery(proj)
    if acm_g != acm_a:
        raise InternalInconsistency(
            f"ACM criteria disagree on {S}: groebner={acm_g}, apery={acm_a}"
        )
    witnesses: list[tuple[str, object]] = []
    if offender is not None:
        witnesses.append(("acm_offending_generator", offender))
    if missing is not None:
        witnesses.append(("apery_missing_values", list(missing)))
    series = closure_hilbert_series(closure)
    gor_a = gor_h = None
    if acm_g:
        gor_a, pair_index = is_gorenstein_apery(proj)
        gor_h, numerator = is_gorenstein_hilbert(closure)
        if gor_a != gor_h:
            raise InternalInconsistency(
                f"Gorenstein criteria disagree on {S}: apery={gor_a}, hilbert={gor_h}"
            )
        if pair_index is not None:
            witnesses.append(("apery_pairing_index", pair_index))
        witnesses.append(("hilbert_numerator", list(numerator)))
    return CurveVerdict(
        semigroup=S,
        acm_groebner=acm_g,
        acm_apery=acm_a,
        gorenstein_apery=gor_a,
        gorenstein_hilbert=gor_h,
        witnesses=tuple(witnesses),
        closure=closure,
        apery_points=projective_apery(proj).points,
        hilbert=series,
    )
