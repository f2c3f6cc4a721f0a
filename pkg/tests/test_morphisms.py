"""Morphism lab: pullback, graphs, determinacy, interpolation, minimal
polynomials, image analysis, divisibility transfer, biregularity."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from polymap import (
    AffineVariety,
    DegenerateDivisorError,
    Ideal,
    MissingAssertionError,
    Morphism,
    NotDominantError,
    Poly,
    PreconditionError,
    TargetNotAffineSpaceError,
    VarContext,
    parse_poly,
)

from conftest import random_point, random_poly

UV = VarContext(("u", "v"))


def pullback_pairs(morphism, rng, count, max_deg=4):
    """Random (p, p o map) pairs: guaranteed-interpolable test inputs."""
    out = []
    for _ in range(count):
        p = random_poly(rng, morphism.target.ctx, max_deg=max_deg, max_terms=4)
        out.append((p, morphism.pullback(p)))
    return out


class TestConstruction:
    def test_ill_defined_map_rejected(self):
        # t -> (t, t) does not land on the cusp curve.
        t = VarContext(("t",))
        curve = AffineVariety(UV, Ideal(UV, (parse_poly("u^3 - v^2", UV),)))
        line = AffineVariety.affine_space(t)
        with pytest.raises(PreconditionError):
            Morphism(line, curve, [Poly.variable(t, "t"), Poly.variable(t, "t")])

    def test_map_onto_subvariety_accepted(self):
        t = VarContext(("t",))
        curve = AffineVariety(UV, Ideal(UV, (parse_poly("u^3 - v^2", UV),)))
        line = AffineVariety.affine_space(t)
        m = Morphism(line, curve, [parse_poly("t^2", t), parse_poly("t^3", t)])
        # image closure equals the curve's own ideal: dense in the target
        assert m.image_closure().same_ideal(curve.ideal)
        assert m.dominant()


class TestPullback:
    def test_examples(self, fixture_morphisms):
        cusp = fixture_morphisms["cusp"]
        shear = fixture_morphisms["shear"]
        assert cusp.pullback(Poly.variable(UV, "u")) == parse_poly("t^2", cusp.source.ctx)
        assert shear.pullback(parse_poly("u*v", UV)) == parse_poly("x^2*y", shear.source.ctx)
        assert cusp.pullback(Poly.one(UV)) == Poly.one(cusp.source.ctx)

    def test_ring_morphism(self, fixture_morphisms):
        rng = random.Random(41)
        sl2 = fixture_morphisms["sl2row"]
        for _ in range(15):
            f = random_poly(rng, UV)
            g = random_poly(rng, UV)
            assert sl2.pullback(f + g) == sl2.source.ideal.normal_form(sl2.pullback(f) + sl2.pullback(g))
            assert sl2.pullback(f * g) == sl2.source.ideal.normal_form(sl2.pullback(f) * sl2.pullback(g))


class TestGraphClosure:
    def test_square_root_graph(self, fixture_morphisms):
        square = fixture_morphisms["square"]
        t = square.source.ctx
        ideal, w = square.graph_closure(Poly.variable(t, "t"))
        expected = parse_poly(f"{w}^2 - u", ideal.ctx)
        assert ideal.same_ideal(Ideal(ideal.ctx, (expected,)))
        assert ideal.dimension() == 1

    def test_substitution_identity_graph(self, fixture_morphisms):
        square = fixture_morphisms["square"]
        t = square.source.ctx
        ideal, w = square.graph_closure(parse_poly("t^4 + 3*t^2", t))
        expected = parse_poly(f"{w} - u^2 - 3*u", ideal.ctx)
        assert ideal.same_ideal(Ideal(ideal.ctx, (expected,)))

    def test_identity_line_graph(self):
        t = VarContext(("t",))
        m = Morphism(AffineVariety.affine_space(t), AffineVariety.affine_space(VarContext(("u",))),
                     [Poly.variable(t, "t")])
        ideal, w = m.graph_closure(Poly.variable(t, "t"))
        assert ideal.same_ideal(Ideal(ideal.ctx, (parse_poly(f"{w} - u", ideal.ctx),)))

    def test_graph_dimensions(self, fixture_morphisms):
        cusp = fixture_morphisms["cusp"]
        identity2 = fixture_morphisms["identity2"]
        assert cusp.dimension_of_graph(Poly.variable(cusp.source.ctx, "t")) == 1
        assert identity2.dimension_of_graph(Poly.variable(identity2.source.ctx, "x")) == 2


class TestDetermined:
    def test_examples(self, fixture_morphisms):
        shear = fixture_morphisms["shear"]
        cusp = fixture_morphisms["cusp"]
        xy = shear.source.ctx
        assert shear.determined_by(parse_poly("x*y^2", xy))
        assert not shear.determined_by(Poly.variable(xy, "y"))
        assert cusp.determined_by(Poly.variable(cusp.source.ctx, "t"))

    def test_pullbacks_always_determined(self, fixture_morphisms):
        rng = random.Random(42)
        for name in ("sym2", "square", "sl2row"):
            m = fixture_morphisms[name]
            for p, g in pullback_pairs(m, rng, 4, max_deg=3):
                assert m.determined_by(g)


class TestInterpolate:
    def test_square_substitution(self, fixture_morphisms):
        square = fixture_morphisms["square"]
        g = parse_poly("t^4 + 3*t^2", square.source.ctx)
        result = square.interpolate(g)
        assert result.ok
        assert result.interpolant == parse_poly("u^2 + 3*u", square.target.ctx)

    def test_cusp_coordinate_fails(self, fixture_morphisms):
        cusp = fixture_morphisms["cusp"]
        result = cusp.interpolate(Poly.variable(cusp.source.ctx, "t"))
        assert result.status == "not_in_subalgebra"
        assert result.interpolant is None
        assert not result.witness.is_zero()

    def test_shear_fiber_function_fails(self, fixture_morphisms):
        shear = fixture_morphisms["shear"]
        result = shear.interpolate(parse_poly("x*y^2", shear.source.ctx))
        assert result.status == "not_in_subalgebra"

    def test_not_determined_status(self, fixture_morphisms):
        shear = fixture_morphisms["shear"]
        result = shear.interpolate(Poly.variable(shear.source.ctx, "y"))
        assert result.status == "not_determined"

    def test_round_trip_property(self, fixture_morphisms):
        rng = random.Random(43)
        for name in ("sym2", "square", "sl2row", "triangular"):
            m = fixture_morphisms[name]
            assignment = dict(zip(m.target.ctx.names, m.coords))
            for p, g in pullback_pairs(m, rng, 6):
                result = m.interpolate(g)
                assert result.ok, (name, str(p))
                residual = result.interpolant.substitute(assignment) - g
                assert m.source.ideal.contains(residual)


class TestMinimalPolynomial:
    def test_degree_two_relation(self, fixture_morphisms):
        square = fixture_morphisms["square"]
        result = square.minimal_polynomial(Poly.variable(square.source.ctx, "t"))
        assert result.status == "relation"
        assert result.degree == 2
        assert result.relation == parse_poly(f"{result.var}^2 - u", result.relation.ctx)
        assert result.rational_pair is None

    def test_degree_one_with_rational_pair(self, fixture_morphisms):
        square = fixture_morphisms["square"]
        g = parse_poly("t^4 + 3*t^2", square.source.ctx)
        result = square.minimal_polynomial(g)
        assert result.status == "relation" and result.degree == 1
        num, den = result.rational_pair
        assert num == parse_poly("u^2 + 3*u", square.target.ctx)
        assert den == Poly.one(square.target.ctx)

    def test_cusp_codimension_two_graph(self, fixture_morphisms):
        cusp = fixture_morphisms["cusp"]
        result = cusp.minimal_polynomial(Poly.variable(cusp.source.ctx, "t"))
        assert result.status == "not_hypersurface"
        assert result.dominant is False
        # witness ideal is the full graph closure, not principal
        assert result.graph_ideal.principal_generator() is None

    def test_affine_space_target_required(self):
        t = VarContext(("t",))
        curve = AffineVariety(UV, Ideal(UV, (parse_poly("u^3 - v^2", UV),)))
        m = Morphism(AffineVariety.affine_space(t), curve, [parse_poly("t^2", t), parse_poly("t^3", t)])
        with pytest.raises(TargetNotAffineSpaceError):
            m.minimal_polynomial(Poly.variable(t, "t"))

    def test_degree_one_whenever_determined(self, fixture_morphisms):
        rng = random.Random(44)
        for name in ("sym2", "square", "sl2row"):
            m = fixture_morphisms[name]
            for p, g in pullback_pairs(m, rng, 4, max_deg=3):
                result = m.minimal_polynomial(g)
                assert result.degree == 1, name
                num, den = result.rational_pair
                interpolant = m.interpolate(g).interpolant
                # the degree-1 pair reduces to the interpolant exactly
                assert (num - den * interpolant).is_zero() or \
                    m.target.ideal.contains(num - den * interpolant)


class TestImageClosure:
    def test_cusp_curve(self, fixture_morphisms):
        cusp = fixture_morphisms["cusp"]
        closure = cusp.image_closure()
        assert closure.generators == (parse_poly("u^3 - v^2", UV),)
        rng = random.Random(45)
        for _ in range(20):
            t = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            for g in closure.generators:
                assert g.evaluate([t * t, t ** 3]) == 0

    def test_dominant_examples(self, fixture_morphisms):
        assert fixture_morphisms["shear"].image_closure().is_zero_ideal()
        assert fixture_morphisms["shear"].dominant()
        assert not fixture_morphisms["cusp"].dominant()

    def test_identity_on_variety_recovers_target_ideal(self):
        xz = VarContext(("x", "z"))
        pq = VarContext(("p", "q"))
        hyper_src = AffineVariety(xz, Ideal(xz, (parse_poly("x*z - 1", xz),)))
        hyper_tgt = AffineVariety(pq, Ideal(pq, (parse_poly("p*q - 1", pq),)), assert_factorial=True)
        m = Morphism(hyper_src, hyper_tgt, [Poly.variable(xz, "x"), Poly.variable(xz, "z")])
        assert m.image_closure().same_ideal(Ideal(pq, (parse_poly("p*q - 1", pq),)))
        assert m.dominant()


class TestDividesTransfer:
    def test_cusp_witness(self, fixture_morphisms):
        cusp = fixture_morphisms["cusp"]
        assert cusp.divides_transfer(Poly.variable(UV, "u"), Poly.variable(UV, "v")) == (True, False)

    def test_shear_transfer_holds(self, fixture_morphisms):
        shear = fixture_morphisms["shear"]
        assert shear.divides_transfer(parse_poly("u", UV), parse_poly("u*v", UV)) == (True, True)

    def test_equal_arguments(self, fixture_morphisms):
        rng = random.Random(46)
        sym2 = fixture_morphisms["sym2"]
        for _ in range(5):
            f = random_poly(rng, UV, max_deg=2)
            if f.is_zero():
                continue
            assert sym2.divides_transfer(f, f) == (True, True)

    def test_zero_divisor_precondition(self, fixture_morphisms):
        sym2 = fixture_morphisms["sym2"]
        with pytest.raises(PreconditionError):
            sym2.divides_transfer(Poly.zero(UV), Poly.one(UV))

    def test_degenerate_case(self):
        # t -> (0, t): u pulls back to 0 while v does not.
        t = VarContext(("t",))
        m = Morphism(AffineVariety.affine_space(t), AffineVariety.affine_space(UV),
                     [Poly.zero(t), Poly.variable(t, "t")])
        with pytest.raises(DegenerateDivisorError):
            m.divides_transfer(Poly.variable(UV, "u"), Poly.variable(UV, "v"))


class TestExtend:
    def test_sl2row_extension(self, fixture_morphisms):
        sl2 = fixture_morphisms["sl2row"]
        composite = parse_poly("a^2 + a*b", sl2.source.ctx)
        result = sl2.extend(composite)
        assert result.ok
        assert result.interpolant == parse_poly("u^2 + u*v", UV)

    def test_unique_extension_reproduces_original(self, fixture_morphisms):
        # For dominant maps the pullback is injective, so extending p o map
        # returns exactly p.
        rng = random.Random(47)
        for name in ("shear", "sym2", "square", "identity2"):
            m = fixture_morphisms[name]
            for p, g in pullback_pairs(m, rng, 5, max_deg=3):
                result = m.extend(g)
                assert result.ok
                assert result.interpolant == p

    def test_identity_extends_to_itself(self, fixture_morphisms):
        identity2 = fixture_morphisms["identity2"]
        g = parse_poly("x^2 - 3*y", identity2.source.ctx)
        assert identity2.extend(g).interpolant == parse_poly("u^2 - 3*v", UV)

    def test_non_dominant_rejected(self, fixture_morphisms):
        cusp = fixture_morphisms["cusp"]
        with pytest.raises(NotDominantError):
            cusp.extend(parse_poly("t^2", cusp.source.ctx))


class TestInjective:
    def test_examples(self, fixture_morphisms):
        assert fixture_morphisms["cusp"].is_injective()
        assert not fixture_morphisms["shear"].is_injective()
        assert fixture_morphisms["identity2"].is_injective()
        assert not fixture_morphisms["square"].is_injective()
        assert fixture_morphisms["hyperbola"].is_injective()


class TestConstructibleImage:
    def test_shear_pieces(self, fixture_morphisms):
        image = fixture_morphisms["shear"].constructible_image()
        assert image.exact
        assert len(image.pieces) == 2
        (c0, m0), (c1, m1) = image.pieces
        assert c0.is_zero_ideal() and [str(g) for g in m0.generators] == ["u"]
        assert c1.same_ideal(Ideal(UV, (Poly.variable(UV, "u"), Poly.variable(UV, "v"))))
        assert m1.is_unit()

    def test_identity_covers_whole_target(self, fixture_morphisms):
        image = fixture_morphisms["identity2"].constructible_image()
        assert image.exact
        assert len(image.pieces) == 1
        closed, minus = image.pieces[0]
        assert closed.is_zero_ideal() and minus.is_unit()

    def test_membership_against_closed_form_oracles(self, fixture_morphisms):
        rng = random.Random(48)

        def oracle(name, pt):
            u, v = pt
            if name == "shear":
                return u != 0 or (u == 0 and v == 0)
            if name == "sl2row":
                return (u, v) != (0, 0)
            if name in ("sym2", "identity2"):
                return True
            raise AssertionError(name)

        for name in ("shear", "sl2row", "sym2", "identity2"):
            image = fixture_morphisms[name].constructible_image()
            assert image.exact
            points = [random_point(rng, 2, bound=4) for _ in range(150)]
            points += [[Fraction(0), Fraction(0)], [Fraction(0), Fraction(3)], [Fraction(2), Fraction(0)]]
            for pt in points:
                assert image.contains(pt) == oracle(name, pt), (name, pt)

    def test_membership_against_fiber_solver_on_fixtures(self, fixture_morphisms):
        # Independent classification of 200 points per fixture by solving
        # the fiber system: a preimage exists over the closure exactly
        # when the fiber ideal is proper.  Exact descriptions must agree
        # everywhere; inexact ones must never over-claim.
        rng = random.Random(52)
        for name in ("cusp", "shear", "sl2row", "hyperbola", "sym2", "square", "identity2"):
            m = fixture_morphisms[name]
            image = m.constructible_image()
            arity = m.target.ctx.arity
            points = [random_point(rng, arity, bound=4) for _ in range(170)]
            # make sure plenty of genuine image points are classified too
            for _ in range(30):
                source_pt = random_point(rng, m.source.ctx.arity, bound=4)
                if m.source.ideal.generators:
                    continue  # only parameter-free sources lift this way
                points.append([c.evaluate(source_pt) for c in m.coords])
            while len(points) < 200:
                points.append(random_point(rng, arity, bound=9))
            for pt in points:
                fiber_gens = tuple(c - Poly.constant(m.source.ctx, val) for c, val in zip(m.coords, pt))
                fiber = m.source.ideal + fiber_gens
                has_preimage = not fiber.is_unit()
                claimed = image.contains(pt)
                if image.exact:
                    assert claimed == has_preimage, (name, pt)
                elif claimed:
                    assert has_preimage, (name, pt)

    def test_cusp_sound_underapproximation(self, fixture_morphisms):
        # The cusp image description is honest about inexactness; every
        # point it claims must genuinely lift (t = v/u when u != 0).
        image = fixture_morphisms["cusp"].constructible_image()
        assert not image.exact
        rng = random.Random(49)
        for _ in range(200):
            t = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            pt = [t * t, t ** 3]
            if image.contains(pt):
                assert pt[0] != 0 or pt == [0, 0]
        # closure of the description still equals the image closure
        assert image.closure_ideal().same_ideal(fixture_morphisms["cusp"].image_closure())

    def test_hyperbola_punctured_line(self, fixture_morphisms):
        image = fixture_morphisms["hyperbola"].constructible_image()
        assert image.exact
        assert image.contains([Fraction(5)])
        assert not image.contains([Fraction(0)])

    def test_random_plane_maps_against_fiber_solver(self):
        # Independent oracle: a target point has a preimage over the
        # algebraic closure exactly when its fiber ideal is proper.
        rng = random.Random(51)
        xy = VarContext(("x", "y"))
        src = AffineVariety.affine_space(xy)
        tgt = AffineVariety.affine_space(UV)
        for trial in range(12):
            coords = [random_poly(rng, xy, max_deg=2, max_terms=3, bound=2) for _ in range(2)]
            m = Morphism(src, tgt, coords)
            image = m.constructible_image(depth=6)
            points = [random_point(rng, 2, bound=3) for _ in range(20)]
            for _ in range(8):
                source_pt = random_point(rng, 2, bound=3)
                points.append([c.evaluate(source_pt) for c in coords])
            for pt in points:
                fiber = Ideal(xy, tuple(c - Poly.constant(xy, val) for c, val in zip(coords, pt)))
                has_preimage = not fiber.is_unit()
                if image.contains(pt):
                    assert has_preimage, (trial, [str(c) for c in coords], pt)
                elif image.exact:
                    assert not has_preimage, (trial, [str(c) for c in coords], pt)


class TestAlmostSurjective:
    def test_cusp_definite_false_despite_inexact_image(self, fixture_morphisms):
        rep = fixture_morphisms["cusp"].almost_surjective()
        assert rep.almost_surjective is False
        assert rep.surjective is False
        assert rep.complement_closure.is_zero_ideal()  # dense complement
        assert rep.complement_dim == 2 and rep.target_dim == 2
        assert not rep.image.exact

    def test_shear_hypersurface_complement(self, fixture_morphisms):
        rep = fixture_morphisms["shear"].almost_surjective()
        assert rep.almost_surjective is False
        assert [str(g) for g in rep.complement_closure.generators] == ["u"]
        assert rep.complement_dim == rep.target_dim - 1 == 1

    def test_sl2row_misses_only_origin(self, fixture_morphisms):
        rep = fixture_morphisms["sl2row"].almost_surjective()
        assert rep.almost_surjective is True
        assert rep.surjective is False
        assert rep.complement_dim == 0 == rep.target_dim - 2
        origin = Ideal(UV, (Poly.variable(UV, "u"), Poly.variable(UV, "v")))
        assert rep.complement_closure.same_ideal(origin)

    def test_surjective_fixtures(self, fixture_morphisms):
        for name in ("identity2", "sym2", "square", "triangular"):
            rep = fixture_morphisms[name].almost_surjective()
            assert rep.almost_surjective is True and rep.surjective is True, name
            assert rep.complement_dim == -1

    def test_report_invariant(self, fixture_morphisms):
        for name in ("cusp", "shear", "sl2row", "sym2", "square", "hyperbola"):
            rep = fixture_morphisms[name].almost_surjective()
            if rep.almost_surjective is not None:
                assert rep.almost_surjective == (rep.complement_dim <= rep.target_dim - 2), name


class TestBiregular:
    def test_triangular_automorphism(self, fixture_morphisms):
        rep = fixture_morphisms["triangular"].biregular()
        assert rep.verdict is True and rep.consistent
        assert [str(p) for p in rep.inverse] == ["-v^2 + u", "v"]

    def test_injective_only(self, fixture_morphisms):
        rep = fixture_morphisms["cusp"].biregular()
        assert rep.verdict is False
        assert rep.injective and rep.surjectivity.almost_surjective is False

    def test_almost_surjective_only(self, fixture_morphisms):
        rep = fixture_morphisms["sl2row"].biregular()
        assert rep.verdict is False
        assert not rep.injective and rep.surjectivity.almost_surjective is True

    def test_requires_factorial_assertion(self):
        xy = VarContext(("x", "y"))
        m = Morphism(
            AffineVariety.affine_space(xy),
            AffineVariety.affine_space(UV, assert_factorial=False),
            [Poly.variable(xy, "x"), Poly.variable(xy, "y")],
        )
        with pytest.raises(MissingAssertionError):
            m.biregular()

    def test_graph_dimension_matches_target_for_determined_functions(self, fixture_morphisms):
        # On almost-surjective fixtures with factorial targets, graphs of
        # determined functions have the target's dimension.
        rng = random.Random(50)
        for name in ("sym2", "square", "sl2row", "identity2"):
            m = fixture_morphisms[name]
            target_dim = m.target.ideal.dimension()
            for p, g in pullback_pairs(m, rng, 3, max_deg=3):
                assert m.dimension_of_graph(g) == target_dim, name
