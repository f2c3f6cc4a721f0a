"""Polynomial self-maps of affine space: Jacobians, etale checks,
constructive inversion, and the equivalence harness tying injectivity,
coordinate determinacy and invertibility together for etale maps.

Etaleness is machine-decided only here, where it reduces to "the
Jacobian determinant is a nonzero constant".  For maps between general
varieties it is a user assertion, and a wrong assertion voids the
dichotomy guarantee of :func:`etale_dichotomy`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    EngineInconsistencyError,
    MissingAssertionError,
    NotEtaleError,
    NotInjectiveError,
)
from .morphisms import AffineVariety, Morphism, SurjectivityReport
from .poly import Poly, VarContext


class Endomorphism(Morphism):
    """A polynomial map from affine n-space to affine n-space.

    Source and target are full affine spaces of the same dimension; the
    target ring may use different variable names (handy for printing
    inverses), but both are w-defined automatically so no membership
    checks run at construction.
    """

    def __init__(self, source_ctx: VarContext, target_ctx: VarContext, coords,
                 assert_etale: bool = False):
        if source_ctx.arity != target_ctx.arity:
            raise ValueError("endomorphism needs source and target of equal dimension")
        super().__init__(
            AffineVariety.affine_space(source_ctx),
            AffineVariety.affine_space(target_ctx),
            coords,
            check=False,
            assert_etale=assert_etale,
        )

    @property
    def dimension_n(self) -> int:
        return self.source.ctx.arity


@dataclass(frozen=True)
class InversionResult:
    inverse: Endomorphism | None
    failing_coordinate: int | None

    @property
    def ok(self) -> bool:
        return self.inverse is not None


@dataclass(frozen=True)
class JCReport:
    """Joint verdicts of the invertibility criteria for an etale map.

    ``consistent`` records that injectivity, coordinate determinacy and
    constructive invertibility all agreed; a False value is a potential
    engine defect, never a mathematical discovery.
    """

    etale: bool
    injective: bool | None
    coords_determined: tuple[bool, ...]
    invertible: bool
    inverse: tuple[Poly, ...] | None
    consistent: bool


@dataclass(frozen=True)
class DichotomyReport:
    branch: str | None  # "codim_one" | "biregular" | None (unknown image)
    surjectivity: SurjectivityReport
    complement_codim: int | None
    inverse: tuple[Poly, ...] | None


def jacobian_matrix(endo: Endomorphism) -> list[list[Poly]]:
    names = endo.source.ctx.names
    return [[coord.derivative(name) for name in names] for coord in endo.coords]


def jacobian_determinant(endo: Endomorphism) -> Poly:
    """Determinant of the matrix of partial derivatives, exactly."""
    from .resultants import poly_matrix_det

    return poly_matrix_det(jacobian_matrix(endo), endo.source.ctx)


def is_etale(endo: Endomorphism) -> bool:
    """For self-maps of affine space: Jacobian determinant is a nonzero constant."""
    det = jacobian_determinant(endo)
    return det.is_constant() and not det.is_zero()


def invert(endo: Endomorphism) -> InversionResult:
    """Constructive two-sided inverse, if one exists.

    Each source coordinate is interpolated through the map; on success
    the candidate inverse must satisfy both composition identities as
    pure polynomial identities (no ideal reduction is involved since
    source and target are affine spaces), otherwise no inverse exists
    and the first non-interpolable coordinate is reported.
    """
    inverse_coords: list[Poly] = []
    src = endo.source.ctx
    tgt = endo.target.ctx
    for j, name in enumerate(src.names):
        result = endo.interpolate(Poly.variable(src, name))
        if not result.ok:
            return InversionResult(None, j)
        inverse_coords.append(result.interpolant)
    back = dict(zip(src.names, inverse_coords))
    forward = dict(zip(tgt.names, endo.coords))
    for j, name in enumerate(src.names):
        if inverse_coords[j].substitute(forward) != Poly.variable(src, name):
            raise EngineInconsistencyError("inverse candidate failed left composition identity")
    for i, name in enumerate(tgt.names):
        if endo.coords[i].substitute(back) != Poly.variable(tgt, name):
            # All coordinates interpolate yet the map is not onto: the
            # candidate is a retraction, not an inverse.
            return InversionResult(None, None)
    return InversionResult(Endomorphism(tgt, src, inverse_coords), None)


def jc_criteria(endo: Endomorphism, depth: int = 8) -> JCReport:
    """Evaluate the invertibility criteria independently and compare.

    Requires an etale input (constant nonzero Jacobian determinant);
    injectivity, per-coordinate determinacy and constructive inversion
    are then computed along separate code paths and must agree.
    """
    if not is_etale(endo):
        raise NotEtaleError(
            f"Jacobian determinant {jacobian_determinant(endo)} is not a nonzero constant"
        )
    injective = endo.is_injective()
    determined = tuple(
        endo.determined_by(Poly.variable(endo.source.ctx, name))
        for name in endo.source.ctx.names
    )
    inversion = invert(endo)
    consistent = injective == all(determined) == inversion.ok
    inverse = inversion.inverse.coords if inversion.ok else None
    return JCReport(True, injective, determined, inversion.ok, inverse, consistent)


def etale_dichotomy(morphism: Morphism, depth: int = 8) -> DichotomyReport:
    """For an injective etale map into a factorial target: the missed
    locus is a hypersurface, or the map is an isomorphism.

    Etaleness of a general variety map is taken from the user assertion
    flag; the verdict is only as good as that assertion.
    """
    if not morphism.assert_etale:
        raise MissingAssertionError("dichotomy requires the assert_etale flag on the map")
    if not morphism.target.assert_factorial:
        raise MissingAssertionError("dichotomy requires assert_factorial on the target")
    if not morphism.is_injective():
        raise NotInjectiveError("dichotomy requires an injective map")
    surj = morphism.almost_surjective(depth)
    if surj.almost_surjective is None:
        return DichotomyReport(None, surj, None, None)
    if surj.almost_surjective:
        bireg = morphism.biregular(depth)
        if bireg.verdict is not True:
            raise EngineInconsistencyError("injective almost-surjective map failed the biregularity check")
        return DichotomyReport("biregular", surj, surj.target_dim - surj.complement_dim, bireg.inverse)
    codim = surj.target_dim - surj.complement_dim
    if codim != 1:
        raise EngineInconsistencyError(
            f"dichotomy violated (complement codimension {codim}); the etale assertion is likely wrong"
        )
    return DichotomyReport("codim_one", surj, codim, None)


# -- random certified-invertible maps ----------------------------------------------


def random_tame_automorphism(
    rng: random.Random,
    source_ctx: VarContext | None = None,
    target_ctx: VarContext | None = None,
    max_moves: int = 3,
    degree_cap: int = 4,
) -> tuple[Endomorphism, Endomorphism]:
    """A random plane automorphism with its inverse, as a word in
    elementary shears and invertible integer linear maps.

    The pair is certified on construction: both compositions reduce to
    the identity exactly.  Degrees are capped so downstream Groebner
    computations stay desk scale.
    """
    src = source_ctx or VarContext(("x", "y"))
    tgt = target_ctx or VarContext(("u", "v"))
    if src.arity != 2 or tgt.arity != 2:
        raise ValueError("the generator builds plane automorphisms")

    sx, sy = Poly.variables(src)
    tu, tv = Poly.variables(tgt)
    forward: list[Poly] = [sx, sy]         # coords of the map, over src
    backward: list[Poly] = [tu, tv]        # coords of the inverse, over tgt

    def apply_move(move_src: list[Poly], move_inv_tgt: list[Poly]) -> bool:
        # New map = move o current; new inverse = current inverse o move^-1.
        move_assign = dict(zip(src.names, forward))
        new_forward = [m.substitute(move_assign) for m in move_src]
        inv_assign = dict(zip(tgt.names, move_inv_tgt))
        new_backward = [b.substitute(inv_assign) for b in backward]
        if max(p.total_degree() for p in new_forward + new_backward) > degree_cap:
            return False
        forward[:] = new_forward
        backward[:] = new_backward
        return True

    def elementary() -> tuple[list[Poly], list[Poly]]:
        i = rng.randrange(2)
        other_src = [sy, sx][i]
        other_tgt = [tv, tu][i]
        coeffs = [rng.choice([-2, -1, 1, 2]) for _ in range(2)]
        exps = sorted({rng.randint(1, 2) for _ in range(2)})
        shift_src = sum((c * other_src ** e for c, e in zip(coeffs, exps)), Poly.zero(src))
        shift_tgt = sum((c * other_tgt ** e for c, e in zip(coeffs, exps)), Poly.zero(tgt))
        move = [sx, sy]
        move[i] = move[i] + shift_src
        inv = [tu, tv]
        inv[i] = inv[i] - shift_tgt
        return move, inv

    def linear() -> tuple[list[Poly], list[Poly]]:
        k = rng.choice([-2, -1, 1, 2])
        kind = rng.randrange(3)
        if kind == 0:      # x += k*y
            return [sx + k * sy, sy], [tu - k * tv, tv]
        if kind == 1:      # y += k*x
            return [sx, sy + k * sx], [tu, tv - k * tu]
        return [sy, sx], [tv, tu]  # swap

    moves = rng.randint(1, max_moves)
    placed = 0
    for step in range(moves):
        want_elementary = step == 0 or rng.random() < 0.6
        move = elementary() if want_elementary else linear()
        if apply_move(*move):
            placed += 1
    if placed == 0:
        apply_move(*linear())

    endo = Endomorphism(src, tgt, forward)
    inverse = Endomorphism(tgt, src, backward)
    fwd_assign = dict(zip(tgt.names, forward))
    for coord, var in zip(backward, (sx, sy)):
        if coord.substitute(fwd_assign) != var:
            raise EngineInconsistencyError("tame generator produced an inconsistent pair")
    return endo, inverse
