"""Affine varieties, polynomial maps between them, and image analysis.

Everything here works with exact ideal arithmetic over the rationals and
interprets geometric statements over an algebraically closed extension:
vanishing questions go through radical membership, never through point
sampling.  A map is given by coordinate polynomials on the source; its
image, the functions it determines, interpolation of such functions by
regular functions on the target, injectivity and biregularity are all
decided by elimination orders on a combined context.

Verdict semantics worth pinning down:

* ``dominant``   - the image is dense in the target.
* ``almost surjective`` - the closure of the set of target points missed
  by the map has dimension at most dim(target) - 2 (the empty set has
  dimension -1, so surjective maps qualify).
* image descriptions are unions of pieces ``V(closed) - V(minus)``; when
  flagged inexact they under-approximate the image but always have the
  correct closure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ContextMismatchError,
    DegenerateDivisorError,
    EngineInconsistencyError,
    MissingAssertionError,
    NotDominantError,
    PreconditionError,
    TargetNotAffineSpaceError,
)
from .groebner import Ideal, normal_form
from .orders import Block, GREVLEX
from .poly import Poly, VarContext


@dataclass(frozen=True)
class AffineVariety:
    """An ambient coordinate ring plus a defining ideal.

    The two assertion flags record hypotheses the user vouches for
    (irreducibility, factoriality of the coordinate ring); the engine
    never verifies them, it only refuses operations whose meaning
    depends on an absent assertion.  A unit ideal is allowed and means
    the empty variety.
    """

    ctx: VarContext
    ideal: Ideal
    assert_irreducible: bool = False
    assert_factorial: bool = False

    def __post_init__(self):
        if self.ideal.ctx != self.ctx:
            raise ContextMismatchError("variety ideal lives in a different context")

    @staticmethod
    def affine_space(ctx: VarContext, assert_factorial: bool = True) -> "AffineVariety":
        # Polynomial rings are factorial, so the flag defaults to set.
        return AffineVariety(ctx, Ideal.zero(ctx), assert_irreducible=True, assert_factorial=assert_factorial)

    def is_empty(self) -> bool:
        return self.ideal.is_unit()

    def dimension(self) -> int:
        return self.ideal.dimension()

    def __str__(self) -> str:
        return f"V({self.ideal}) in k{self.ctx}"


@dataclass(frozen=True)
class InterpolationResult:
    """Outcome of asking for a regular target function with given pullback.

    ``status`` is one of:

    * ``"interpolant"``       - ``interpolant`` pulls back to g on the source.
    * ``"not_in_subalgebra"`` - g is constant on fibers but no regular
      target function pulls back to it.
    * ``"not_determined"``    - g is not even constant on fibers.

    ``witness`` is the reduction of g by the elimination basis of the
    graph ideal; for failures it still contains source variables.
    """

    status: str
    interpolant: Poly | None
    witness: Poly

    @property
    def ok(self) -> bool:
        return self.status == "interpolant"


@dataclass(frozen=True)
class MinPolyResult:
    """Defining relation of a function over the image of a map.

    The relation lives in the target ring extended by ``var`` (the fresh
    graph coordinate).  When the relation has degree one and the map is
    dominant, ``rational_pair = (num, den)`` certifies g = (num/den) o map.
    """

    status: str  # "relation" | "no_relation" | "not_hypersurface"
    relation: Poly | None
    var: str
    degree: int | None
    rational_pair: tuple[Poly, Poly] | None
    dominant: bool
    graph_ideal: Ideal

    @property
    def ok(self) -> bool:
        return self.status == "relation"


@dataclass(frozen=True)
class ConstructibleSet:
    """Finite union of pieces V(closed) - V(minus) inside an ambient ring.

    ``exact`` distinguishes a proven description of a map's image from a
    sound under-approximation (subset of the image whose closure still
    equals the image closure).  Membership of rational points is decided
    by evaluation.
    """

    ctx: VarContext
    pieces: tuple[tuple[Ideal, Ideal], ...]
    exact: bool

    def contains(self, point: Sequence[Fraction | int]) -> bool:
        for closed, minus in self.pieces:
            if all(g.evaluate(point) == 0 for g in closed.generators):
                if any(g.evaluate(point) != 0 for g in minus.generators):
                    return True
        return False

    def closure_ideal(self) -> Ideal:
        """Ideal of the Zariski closure of the union."""
        parts = [_piece_closure(closed, minus) for closed, minus in self.pieces]
        return _intersect_many(self.ctx, parts)

    def to_json_dict(self) -> dict:
        return {
            "pieces": [
                {
                    "closed": [str(g) for g in closed.generators],
                    "minus": [str(g) for g in minus.generators],
                }
                for closed, minus in self.pieces
            ],
            "exact": self.exact,
        }


@dataclass(frozen=True)
class SurjectivityReport:
    """Image description plus the dimension bookkeeping behind the verdict.

    ``almost_surjective`` / ``surjective`` are True, False, or None for
    "unknown" (only possible when the image description is inexact and
    neither the certified part of the complement nor the over-estimate
    settles the question).
    """

    image: ConstructibleSet
    complement_closure: Ideal
    complement_dim: int
    target_dim: int
    almost_surjective: bool | None
    surjective: bool | None

    @property
    def known(self) -> bool:
        return self.almost_surjective is not None


@dataclass(frozen=True)
class BiregularReport:
    verdict: bool | None
    injective: bool
    surjectivity: SurjectivityReport
    inverse: tuple[Poly, ...] | None
    consistent: bool


class _GraphData:
    """Combined context [renamed source | target] with the graph ideal."""

    __slots__ = ("ctx", "src_names", "rename", "block", "ideal", "head")

    def __init__(self, morphism: "Morphism"):
        src = morphism.source.ctx
        tgt = morphism.target.ctx
        taken = set(tgt.names)
        src_names: list[str] = []
        for name in src.names:
            fresh = name
            while fresh in taken or fresh in src_names:
                fresh += "'"
            src_names.append(fresh)
        self.src_names = tuple(src_names)
        self.rename = dict(zip(src.names, src_names))
        self.ctx = VarContext(self.src_names + tgt.names)
        self.head = tuple(range(len(src_names)))
        self.block = Block(self.head)
        gens = [g.transport(self.ctx, self.rename) for g in morphism.source.ideal.generators]
        for name, coord in zip(tgt.names, morphism.coords):
            gens.append(Poly.variable(self.ctx, name) - coord.transport(self.ctx, self.rename))
        self.ideal = Ideal(self.ctx, gens)


class Morphism:
    """A polynomial map between affine varieties.

    ``coords`` are polynomials on the source ambient ring, one per target
    variable.  Construction checks well-definedness (target equations
    pull back into the source ideal) unless ``check=False``.
    """

    __slots__ = ("source", "target", "coords", "assert_etale", "_memo")

    def __init__(
        self,
        source: AffineVariety,
        target: AffineVariety,
        coords: Iterable[Poly],
        check: bool = True,
        assert_etale: bool = False,
    ):
        coords = tuple(coords)
        if len(coords) != target.ctx.arity:
            raise ValueError(f"need {target.ctx.arity} coordinates, got {len(coords)}")
        for c in coords:
            if c.ctx != source.ctx:
                raise ContextMismatchError("coordinate polynomial not over the source ring")
        self.source = source
        self.target = target
        self.coords = coords
        self.assert_etale = assert_etale
        self._memo: dict = {}
        if check:
            assignment = dict(zip(target.ctx.names, coords))
            for g in target.ideal.generators:
                if not source.ideal.contains(g.substitute(assignment)):
                    raise PreconditionError(
                        f"map is not well defined: target equation {g} does not pull back into the source ideal"
                    )

    # -- plumbing ------------------------------------------------------------

    def _graph(self) -> _GraphData:
        got = self._memo.get("graph")
        if got is None:
            got = _GraphData(self)
            self._memo["graph"] = got
        return got

    def _coord_assignment(self) -> dict[str, Poly]:
        return dict(zip(self.target.ctx.names, self.coords))

    def _fiber(self) -> tuple[VarContext, Ideal, dict[str, str]]:
        """Doubled source context with the fiber-product ideal.

        Variables x and their primed copies x', the source equations in
        both copies, and the equations identifying the two images.
        """
        got = self._memo.get("fiber")
        if got is None:
            src = self.source.ctx
            primed: list[str] = []
            for name in src.names:
                fresh = name + "'"
                while fresh in src.names or fresh in primed:
                    fresh += "'"
                primed.append(fresh)
            ctx2 = VarContext(src.names + tuple(primed))
            rename = dict(zip(src.names, primed))
            gens = [g.transport(ctx2) for g in self.source.ideal.generators]
            gens += [g.transport(ctx2, rename) for g in self.source.ideal.generators]
            for c in self.coords:
                gens.append(c.transport(ctx2) - c.transport(ctx2, rename))
            got = (ctx2, Ideal(ctx2, gens), rename)
            self._memo["fiber"] = got
        return got

    def _elimination_split(self) -> tuple[tuple[Poly, ...], Poly]:
        """Target-only part of the graph basis, and the product of the
        leading coefficients (over the source block) of the rest.

        The second value cuts out the locus where specializing the basis
        at a target point could degenerate; away from it every point of
        the eliminated variety lifts to the source.
        """
        got = self._memo.get("elim")
        if got is not None:
            return got
        graph = self._graph()
        basis = graph.ideal.groebner_basis(graph.block)
        tgt = self.target.ctx
        head = graph.head
        elim: list[Poly] = []
        lc_product = Poly.one(tgt)
        for g in basis:
            best = None
            for mono in g.monomials():
                part = tuple(mono[i] for i in head)
                if best is None or GREVLEX.key(part) > GREVLEX.key(best):
                    best = part
            if best is None or not any(best):
                elim.append(g.transport(tgt))
                continue
            coeff_terms = {
                mono: c
                for mono, c in g.terms()
                if tuple(mono[i] for i in head) == best
            }
            lead_coeff = Poly(graph.ctx, {
                tuple(0 if i in head else e for i, e in enumerate(m)): c
                for m, c in coeff_terms.items()
            })
            lc_product = lc_product * lead_coeff.transport(tgt)
        got = (tuple(elim), lc_product)
        self._memo["elim"] = got
        return got

    # -- ring-level operations ---------------------------------------------------

    def pullback(self, f: Poly) -> Poly:
        """Canonical representative of f o map in the source coordinate ring."""
        if f.ctx != self.target.ctx:
            raise ContextMismatchError("pullback argument must live on the target ring")
        return self.source.ideal.normal_form(f.substitute(self._coord_assignment()))

    def image_closure(self) -> Ideal:
        """Ideal of the Zariski closure of the image."""
        got = self._memo.get("image_closure")
        if got is None:
            elim, _ = self._elimination_split()
            got = Ideal(self.target.ctx, elim)
            got._prime_cache(GREVLEX, tuple(elim))
            self._memo["image_closure"] = got
        return got

    def dominant(self) -> bool:
        """Whether the image is dense in the target variety."""
        target_ideal = self.target.ideal
        return all(target_ideal.radical_contains(g) for g in self.image_closure().generators)

    def graph_closure(self, g: Poly) -> tuple[Ideal, str]:
        """Closure of {(map(x), g(x))} in target x line; returns (ideal, var).

        The ideal lives on the target ring extended by a fresh variable
        holding the value of g.
        """
        if g.ctx != self.source.ctx:
            raise ContextMismatchError("graph argument must live on the source ring")
        graph = self._graph()
        w = graph.ctx.fresh_name("w")
        big = graph.ctx.extended([w])
        gens = [p.transport(big) for p in graph.ideal.generators]
        gens.append(Poly.variable(big, w) - g.transport(big, graph.rename))
        big_ideal = Ideal(big, gens)
        return big_ideal.eliminate(graph.src_names), w

    def dimension_of_graph(self, g: Poly) -> int:
        ideal, _ = self.graph_closure(g)
        return ideal.dimension()

    # -- determinacy and interpolation ----------------------------------------------

    def determined_by(self, g: Poly) -> bool:
        """Whether g is constant on every fiber (over the algebraic closure)."""
        if g.ctx != self.source.ctx:
            raise ContextMismatchError("argument must live on the source ring")
        ctx2, fiber, rename = self._fiber()
        return fiber.radical_contains(g.transport(ctx2) - g.transport(ctx2, rename))

    def interpolate(self, g: Poly) -> InterpolationResult:
        """Find a regular target function pulling back to g, if one exists.

        Reduces g by the graph ideal under an elimination order with the
        source block dominant; success means the normal form only uses
        target variables and is then the canonical interpolant.  The
        identity interpolant o map = g (mod source ideal) is re-checked
        on every success.
        """
        if g.ctx != self.source.ctx:
            raise ContextMismatchError("argument must live on the source ring")
        graph = self._graph()
        basis = graph.ideal.groebner_basis(graph.block)
        nf = normal_form(g.transport(graph.ctx, graph.rename), basis, graph.block)
        src_set = set(graph.src_names)
        if nf.variables_used() & src_set:
            status = "not_in_subalgebra" if self.determined_by(g) else "not_determined"
            return InterpolationResult(status, None, nf)
        interpolant = nf.transport(self.target.ctx)
        residual = interpolant.substitute(self._coord_assignment()) - g
        if not self.source.ideal.contains(residual):
            raise EngineInconsistencyError("interpolant certificate failed to verify")
        return InterpolationResult("interpolant", interpolant, nf)

    def extend(self, composite: Poly) -> InterpolationResult:
        """Regular extension to the target of the function induced on the image.

        The function is handed to the machine through its composite with
        the map; requires a dominant map so that the extension, when it
        exists, is unique (the canonical reduced interpolant).
        """
        if not self.dominant():
            raise NotDominantError("extension requires a dominant map (unique extensions otherwise unavailable)")
        return self.interpolate(composite)

    def minimal_polynomial(self, g: Poly) -> MinPolyResult:
        """Defining relation of g over the image, on an affine-space target.

        The graph closure in target x line is zero (no relation), a
        hypersurface (principal: the relation, with its degree in the
        fresh variable), or smaller (not a hypersurface).  Degree one
        plus dominance certifies g as a ratio of pulled-back functions.
        """
        if self.target.ideal.generators:
            raise TargetNotAffineSpaceError("minimal_polynomial needs a target with zero defining ideal")
        ideal, w = self.graph_closure(g)
        dominant = self.dominant()
        generator = ideal.principal_generator()
        if generator is None:
            return MinPolyResult("not_hypersurface", None, w, None, None, dominant, ideal)
        if generator.is_zero():
            return MinPolyResult("no_relation", None, w, None, None, dominant, ideal)
        degree = generator.degree_in(w)
        top = generator.coefficients_in(w).get(degree)
        if top is not None and top.leading_coefficient() < 0:
            # Present the relation with a positively-normalized top
            # coefficient in the graph variable (same principal ideal).
            generator = -generator
        assignment = {n: c for n, c in zip(self.target.ctx.names, self.coords)}
        assignment[w] = g
        if not self.source.ideal.contains(generator.substitute(assignment)):
            raise EngineInconsistencyError("graph relation certificate failed to verify")
        pair = None
        if degree == 1 and dominant:
            coeffs = generator.coefficients_in(w)
            den = coeffs.get(1, Poly.zero(ideal.ctx)).transport(self.target.ctx)
            num = (-coeffs.get(0, Poly.zero(ideal.ctx))).transport(self.target.ctx)
            residual = self.pullback(den) * g - self.pullback(num)
            if not self.source.ideal.contains(residual):
                raise EngineInconsistencyError("degree-1 relation certificate failed to verify")
            pair = (num, den)
        return MinPolyResult("relation", generator, w, degree, pair, dominant, ideal)

    # -- divisibility transfer ----------------------------------------------------

    def divides_transfer(self, f: Poly, g: Poly) -> tuple[bool, bool]:
        """(f o map divides g o map on the source, f divides g on the target).

        A (True, False) outcome is a certified witness that the map
        misses a hypersurface worth of target points.
        """
        if f.ctx != self.target.ctx or g.ctx != self.target.ctx:
            raise ContextMismatchError("divisibility arguments live on the target ring")
        if self.target.ideal.contains(f):
            raise PreconditionError("f vanishes on the target variety; divisibility is vacuous")
        f_src = self.pullback(f)
        g_src = self.pullback(g)
        if f_src.is_zero() and not g_src.is_zero():
            raise DegenerateDivisorError("f o map vanishes identically while g o map does not")
        source_divides = (self.source.ideal + (f_src,)).contains(g_src)
        target_divides = (self.target.ideal + (f,)).contains(g)
        return source_divides, target_divides

    # -- injectivity / image ------------------------------------------------------

    def is_injective(self) -> bool:
        """Geometric injectivity: the fiber product lies in the diagonal."""
        ctx2, fiber, rename = self._fiber()
        for name in self.source.ctx.names:
            delta = Poly.variable(ctx2, name) - Poly.variable(ctx2, rename[name])
            if not fiber.radical_contains(delta):
                return False
        return True

    def constructible_image(self, depth: int = 8) -> ConstructibleSet:
        """Piecewise description of the image, by leading-coefficient descent.

        Each round contributes the piece of the eliminated variety where
        the elimination basis specializes cleanly (all leading
        coefficients over the source block nonzero), then restricts the
        map over the missed locus and recurses, up to ``depth`` rounds or
        until the restriction stabilizes.  The result is flagged exact
        when the recursion provably covered the whole image.
        """
        if depth < 1:
            raise ValueError("depth must be at least 1")
        tgt_ctx = self.target.ctx
        pieces: list[tuple[Ideal, Ideal]] = []
        current: Morphism = self
        seen: set[tuple] = set()
        exact = False
        remaining: Ideal | None = None
        for _ in range(depth):
            closure = current.image_closure()
            if closure.is_unit():
                exact = True
                remaining = None
                break
            _, lc_product = current._elimination_split()
            minus = Ideal(tgt_ctx, (lc_product,))
            if not _piece_is_empty(closure, minus):
                pieces.append((closure, minus))
            if lc_product.is_constant():
                # Nonzero constant: the piece is all of the closed set.
                exact = True
                remaining = None
                break
            remaining = closure + (lc_product,)
            restricted_source = current.source.ideal + (lc_product.substitute(current._coord_assignment()),)
            state = restricted_source.groebner_basis()
            if state in seen:
                break
            seen.add(state)
            current = Morphism(
                AffineVariety(current.source.ctx, restricted_source),
                AffineVariety(tgt_ctx, remaining,
                              assert_irreducible=False,
                              assert_factorial=False),
                current.coords,
                check=False,
            )
        if not exact and remaining is not None:
            closed_parts = [closed for closed, minus in pieces if minus.is_unit()]
            if _covered_by_closed(remaining, closed_parts):
                exact = True
        return ConstructibleSet(tgt_ctx, tuple(pieces), exact)

    def almost_surjective(self, depth: int = 8) -> SurjectivityReport:
        """Classify how much of the target the image misses.

        The verdict compares dim(closure(missed set)) against
        dim(target) - 2.  With an inexact image description the verdict
        is still definite when either the over-estimated complement is
        already small enough (True) or the certified part of the
        complement - everything outside the image closure - is already
        too big (False); otherwise it is None.
        """
        target_ideal = self.target.ideal
        target_dim = target_ideal.dimension()
        image = self.constructible_image(depth)
        comp_pieces = _complement_pieces(target_ideal, image)
        comp_closure = _intersect_many(self.target.ctx, [_piece_closure(c, m) for c, m in comp_pieces])
        comp_dim = comp_closure.dimension()
        certain = _intersect_many(
            self.target.ctx,
            [target_ideal.saturation(g) for g in self.image_closure().generators if not g.is_zero()],
        ) if self.image_closure().generators else Ideal.unit(self.target.ctx)
        certain_dim = certain.dimension()
        threshold = target_dim - 2
        if image.exact:
            almost = comp_dim <= threshold
            surjective = comp_dim == -1
        elif comp_dim <= threshold:
            almost = True
            surjective = True if comp_dim == -1 else (False if certain_dim >= 0 else None)
        elif certain_dim >= target_dim - 1:
            almost = False
            surjective = False
        else:
            almost = None
            surjective = False if certain_dim >= 0 else None
        return SurjectivityReport(image, comp_closure, comp_dim, target_dim, almost, surjective)

    def biregular(self, depth: int = 8) -> BiregularReport:
        """Isomorphism test: injective and almost surjective, with the
        inverse constructed coordinate by coordinate as a certificate.

        Requires the target's factoriality assertion.  The set-theoretic
        verdict and the success of the inverse construction must agree;
        disagreement raises, because it would be an engine defect.
        """
        if not self.target.assert_factorial:
            raise MissingAssertionError("biregularity test requires assert_factorial on the target")
        injective = self.is_injective()
        surj = self.almost_surjective(depth)
        if surj.almost_surjective is None:
            return BiregularReport(None, injective, surj, None, True)
        verdict = injective and surj.almost_surjective
        inverse = self._try_inverse()
        consistent = verdict == (inverse is not None)
        if not consistent:
            raise EngineInconsistencyError(
                "set-theoretic biregularity verdict disagrees with inverse construction"
            )
        return BiregularReport(verdict, injective, surj, inverse, consistent)

    def _try_inverse(self) -> tuple[Poly, ...] | None:
        """Interpolate every source coordinate and check both compositions."""
        inverse: list[Poly] = []
        for name in self.source.ctx.names:
            result = self.interpolate(Poly.variable(self.source.ctx, name))
            if not result.ok:
                return None
            inverse.append(result.interpolant)
        back = dict(zip(self.source.ctx.names, inverse))
        for name, coord in zip(self.target.ctx.names, self.coords):
            residual = coord.substitute(back) - Poly.variable(self.target.ctx, name)
            if not self.target.ideal.contains(residual):
                return None
        return tuple(inverse)

    def __str__(self) -> str:
        arrows = ", ".join(f"{n} = {c}" for n, c in zip(self.target.ctx.names, self.coords))
        return f"({arrows})"


# -- constructible-set helpers ------------------------------------------------------


def _piece_closure(closed: Ideal, minus: Ideal) -> Ideal:
    """Ideal of the closure of V(closed) - V(minus)."""
    gens = [g for g in minus.generators if not g.is_zero()]
    if not gens:
        return Ideal.unit(closed.ctx)
    return _intersect_many(closed.ctx, [closed.saturation(g) for g in gens])


def _piece_is_empty(closed: Ideal, minus: Ideal) -> bool:
    if closed.is_unit():
        return True
    gens = [g for g in minus.generators if not g.is_zero()]
    if not gens:
        return True
    return all(closed.radical_contains(g) for g in gens)


def _intersect_many(ctx: VarContext, ideals: list[Ideal]) -> Ideal:
    result: Ideal | None = None
    for ideal in ideals:
        result = ideal if result is None else result.intersect(ideal)
    return result if result is not None else Ideal.unit(ctx)


def _covered_by_closed(remaining: Ideal, closed_parts: list[Ideal]) -> bool:
    """Whether V(remaining) lies inside the union of the closed parts.

    Decided by radical membership of the generators of the product ideal
    of the parts (the product vanishes exactly on the union).
    """
    if not closed_parts:
        return False
    for combo in itertools.product(*[part.generators for part in closed_parts]):
        product = combo[0]
        for g in combo[1:]:
            product = product * g
        if not remaining.radical_contains(product):
            return False
    return True


def _complement_pieces(ambient_ideal: Ideal, cset: ConstructibleSet) -> list[tuple[Ideal, Ideal]]:
    """Pieces of V(ambient_ideal) minus the union described by ``cset``."""
    ctx = cset.ctx
    current: list[tuple[Ideal, Ideal]] = [(ambient_ideal, Ideal.unit(ctx))]
    for closed, minus in cset.pieces:
        negated = [(minus, Ideal.unit(ctx)), (Ideal.zero(ctx), closed)]
        merged: list[tuple[Ideal, Ideal]] = []
        seen: set[tuple[tuple[Poly, ...], tuple[Poly, ...]]] = set()
        for a_closed, a_minus in current:
            for b_closed, b_minus in negated:
                piece = (a_closed + b_closed, a_minus.product(b_minus))
                if _piece_is_empty(*piece):
                    continue
                key = (piece[0].groebner_basis(), piece[1].generators)
                if key in seen:
                    continue
                seen.add(key)
                merged.append(piece)
        current = merged
    return current
