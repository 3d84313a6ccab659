"""Defining ideals of affine monomial curves and their projective closures.

The defining ideal of <n_1, ..., n_r> is the kernel of x_i -> t^{n_i},
computed by block-order elimination of the parameters; the projective
closure is obtained by termwise homogenization of the reduced degrevlex
basis (and cross-checkable against a direct two-parameter elimination).
Glued ideals are assembled from the two factor bases plus the single
connecting binomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InternalInconsistency,
    PreconditionViolated,
    SpecMismatch,
    TooLarge,
)
from .poly import (
    GroebnerBasis,
    MonomialOrder,
    Polynomial,
    VariableSet,
    buchberger,
    homogenize_basis,
)
from .semigroup import GluingSpec, NumericalSemigroup, glue

HOMOGENIZING_VARIABLE = "x0"


def curve_variables(r: int) -> VariableSet:
    return VariableSet(tuple(f"x{i}" for i in range(1, r + 1)))


def glued_variables(l: int, k: int) -> VariableSet:
    names = tuple(f"x{i}" for i in range(1, l + 1)) + tuple(
        f"y{j}" for j in range(1, k + 1)
    )
    return VariableSet(names)


@dataclass(frozen=True)
class MonomialCurveIdeal:
    """Toric ideal of a monomial curve presentation.

    weights[i] is the semigroup generator attached to ambient variable i;
    every basis element is a pure binomial balanced under those weights.
    """

    semigroup: NumericalSemigroup
    ambient: VariableSet
    weights: tuple[int, ...]
    basis: GroebnerBasis


@dataclass(frozen=True)
class ProjectiveCurveIdeal:
    """Homogenized toric ideal of the projective closure."""

    affine: MonomialCurveIdeal
    ambient: VariableSet
    basis: GroebnerBasis
    homogeneous: bool


def weighted_degree(exps, weights) -> int:
    return sum(e * w for e, w in zip(exps, weights))


def vanishes_under_weights(f: Polynomial, weights) -> bool:
    """True iff f maps to 0 under x_i -> t^{weights[i]} (substitute and
    collect the univariate coefficients)."""
    collected: dict[int, object] = {}
    for exps, coeff in f.terms:
        d = weighted_degree(exps, weights)
        c = collected.get(d, 0) + coeff
        if c:
            collected[d] = c
        elif d in collected:
            del collected[d]
    return not collected


def _check_toric_basis(ideal: MonomialCurveIdeal) -> None:
    for g in ideal.basis.generators:
        if not g.is_binomial_difference():
            raise InternalInconsistency(f"non-binomial generator {g} in toric basis")
        if not vanishes_under_weights(g, ideal.weights):
            raise InternalInconsistency(f"generator {g} is not weight balanced")


def _parametrization_kernel(
    images, var_names, *, limit=5000, deadline=None
) -> GroebnerBasis:
    """Reduced degrevlex basis of the kernel of x_i -> params^images[i].

    images[i] is the exponent vector of the i-th variable's image over the
    parameter block.  Elimination runs under a block order (parameters
    first, degrevlex inside blocks); the surviving parameter-free
    generators are then re-reduced under plain degrevlex on the curve
    variables.  Both runs select pairs by the weighted degree under which
    the binomials are homogeneous (parameters weight 1, each variable the
    degree of its image), which keeps the elimination from cascading."""
    nparams = len(images[0])
    nvars = len(var_names)
    param_names = tuple(f"t{j}" for j in range(nparams))
    ambient = VariableSet(param_names + tuple(var_names))
    total = nparams + nvars
    elim = MonomialOrder.elimination(total, front=tuple(range(nparams)))
    var_weights = tuple(sum(image) for image in images)
    weights = (1,) * nparams + var_weights
    gens = []
    for i, image in enumerate(images):
        var_part = tuple(1 if j == i else 0 for j in range(nvars))
        gens.append(
            Polynomial(
                ambient,
                elim,
                [
                    (tuple(image) + (0,) * nvars, -1),
                    ((0,) * nparams + var_part, 1),
                ],
            )
        )
    gb = buchberger(gens, elim, limit=limit, deadline=deadline, selection_weights=weights)
    target = VariableSet(tuple(var_names))
    order = MonomialOrder.degrevlex(nvars)
    kept = []
    for g in gb.generators:
        if all(all(e == 0 for e in exps[:nparams]) for exps, _ in g.terms):
            kept.append(
                Polynomial(order=order, ambient=target, terms=[(exps[nparams:], c) for exps, c in g.terms])
            )
    if not kept:
        raise InternalInconsistency("elimination produced an empty kernel basis")
    return buchberger(
        kept, order, limit=limit, deadline=deadline, selection_weights=var_weights
    )


def defining_ideal(
    S: NumericalSemigroup, *, max_embedding_dim: int = 8, limit: int = 5000, deadline=None
) -> MonomialCurveIdeal:
    """Reduced degrevlex basis of the toric ideal of the affine monomial
    curve (t^{n_1}, ..., t^{n_r})."""
    r = len(S.generators)
    if r > max_embedding_dim:
        raise TooLarge(f"embedding dimension {r} exceeds limit {max_embedding_dim}")
    images = [(n,) for n in S.generators]
    basis = _parametrization_kernel(
        images, curve_variables(r).names, limit=limit, deadline=deadline
    )
    ideal = MonomialCurveIdeal(S, curve_variables(r), S.generators, basis)
    _check_toric_basis(ideal)
    return ideal


def projective_closure_ideal(I: MonomialCurveIdeal) -> ProjectiveCurveIdeal:
    """Homogenize the reduced affine basis termwise.

    The result is the reduced basis of the homogenized ideal for the
    degrevlex order with the homogenizing variable least, with identical
    leading monomials."""
    if not I.basis.reduced or not I.basis.order.is_identity_degrevlex():
        raise PreconditionViolated(
            "projective closure needs the reduced ambient-order degrevlex basis"
        )
    hom = homogenize_basis(I.basis, HOMOGENIZING_VARIABLE)
    ambient = I.ambient.extend(HOMOGENIZING_VARIABLE)
    for g in hom.generators:
        if not g.is_homogeneous():
            raise InternalInconsistency(f"homogenization left {g} inhomogeneous")
    return ProjectiveCurveIdeal(I, ambient, hom, True)


def projective_closure_by_elimination(
    S: NumericalSemigroup, *, limit: int = 5000, deadline=None
) -> GroebnerBasis:
    """Independent route to the projective closure ideal: eliminate both
    parameters from x_i -> t^{n_i} s^{n_r - n_i}, x0 -> s^{n_r}."""
    nr = S.generators[-1]
    images = [(nr - n, n) for n in S.generators] + [(nr, 0)]
    names = curve_variables(len(S.generators)).names + (HOMOGENIZING_VARIABLE,)
    return _parametrization_kernel(images, names, limit=limit, deadline=deadline)


# -- glued ideals ---------------------------------------------------------------


def _embed(f: Polynomial, ambient: VariableSet, order: MonomialOrder, offset: int, width: int) -> Polynomial:
    pad_left = (0,) * offset
    pad_right = (0,) * (width - offset - len(f.ambient))
    return Polynomial(
        ambient, order, [(pad_left + exps + pad_right, c) for exps, c in f.terms]
    )


def glued_ideal(
    spec: GluingSpec, I1: MonomialCurveIdeal, I2: MonomialCurveIdeal
) -> MonomialCurveIdeal:
    """Generating set of the glued curve's ideal: both factor bases plus the
    connecting binomial x^bvec - y^avec.

    The basis is the union embedded in x1..xl, y1..yk; it generates the
    glued toric ideal but is only flagged as a (reduced) Groebner basis
    after a Buchberger run confirms it (see complete_glued_ideal)."""
    if I1.semigroup != spec.left:
        raise SpecMismatch("I1 is not the defining ideal of the left semigroup")
    if I2.semigroup != spec.right:
        raise SpecMismatch("I2 is not the defining ideal of the right semigroup")
    l, k = len(spec.left.generators), len(spec.right.generators)
    ambient = glued_variables(l, k)
    width = l + k
    order = MonomialOrder.degrevlex(width)
    gens = [_embed(f, ambient, order, 0, width) for f in I1.basis.generators]
    gens += [_embed(g, ambient, order, l, width) for g in I2.basis.generators]
    rho = Polynomial(
        ambient,
        order,
        [
            (tuple(spec.bvec) + (0,) * k, 1),
            ((0,) * l + tuple(spec.avec), -1),
        ],
    )
    gens.append(rho)
    weights = tuple(spec.q * m for m in spec.left.generators) + tuple(
        spec.p * n for n in spec.right.generators
    )
    glued = glue(spec).semigroup
    ideal = MonomialCurveIdeal(glued, ambient, weights, GroebnerBasis(tuple(gens), order, False))
    _check_toric_basis(ideal)
    return ideal


def complete_glued_ideal(
    raw: MonomialCurveIdeal, *, limit: int = 5000, deadline=None
) -> tuple[MonomialCurveIdeal, bool]:
    """Run Buchberger on an assembled glued basis.

    Returns the ideal with its reduced basis and a flag telling whether the
    run added no generators (every processed S-polynomial reduced to zero),
    i.e. whether the assembled set was already a Groebner basis."""
    stats: dict = {}
    gb = buchberger(
        raw.basis.generators,
        raw.basis.order,
        limit=limit,
        deadline=deadline,
        stats=stats,
        selection_weights=raw.weights,
    )
    ideal = MonomialCurveIdeal(raw.semigroup, raw.ambient, raw.weights, gb)
    _check_toric_basis(ideal)
    return ideal, stats["additions"] == 0


def star_basis_check(
    spec: GluingSpec, I1: MonomialCurveIdeal, I2: MonomialCurveIdeal, *, deadline=None
) -> bool:
    """True iff Buchberger adds nothing to the assembled star basis
    G1 u G2 u {connecting binomial} under degrevlex x1>..>xl>y1>..>yk."""
    if not spec.star:
        raise ValueError("star_basis_check requires a star gluing spec")
    if not (I1.basis.reduced and I2.basis.reduced):
        raise PreconditionViolated("factor bases must be reduced")
    raw = glued_ideal(spec, I1, I2)
    _, added_nothing = complete_glued_ideal(raw, deadline=deadline)
    return added_nothing


def sort_curve_ideal(I: MonomialCurveIdeal, *, limit: int = 5000, deadline=None) -> MonomialCurveIdeal:
    """Re-present a curve ideal with weights ascending (canonical x1..xr
    ambient): permute the variables and recompute the reduced degrevlex
    basis.  Needed before the leading-monomial ACM test whenever the last
    variable does not carry the largest weight."""
    r = len(I.weights)
    perm = sorted(range(r), key=lambda i: I.weights[i])
    ambient = curve_variables(r)
    order = MonomialOrder.degrevlex(r)
    gens = []
    for g in I.basis.generators:
        gens.append(
            Polynomial(
                ambient,
                order,
                [(tuple(exps[perm[j]] for j in range(r)), c) for exps, c in g.terms],
            )
        )
    weights = tuple(sorted(I.weights))
    basis = buchberger(
        gens, order, limit=limit, deadline=deadline, selection_weights=weights
    )
    ideal = MonomialCurveIdeal(I.semigroup, ambient, weights, basis)
    _check_toric_basis(ideal)
    return ideal


def ideal_to_json(ideal) -> dict:
    """Serialize a curve ideal (affine or projective) for the CLI."""
    basis = ideal.basis
    ambient = ideal.ambient
    return {
        "ambient": list(ambient.names),
        "order": basis.order.describe(ambient),
        "generators": [str(g) for g in basis.generators],
        "reduced": basis.reduced,
    }
