#!/usr/bin/env python3
"""Which functions on the source factor through a map, and which of those
are restrictions of regular functions on the target?

Two classic maps frame the question:

* cusp   t -> (t^2, t^3)    injective, image is the cuspidal cubic
* shear  (x, y) -> (x, x*y) dominant, image misses the punctured line u = 0
"""

from polymap import Poly, load_fixture, parse_poly

cusp = load_fixture("cusp").morphism()
shear = load_fixture("shear").morphism()

print("=" * 60)
print("1. The cusp: determined but not interpolable")
print("=" * 60)

t = Poly.variable(cusp.source.ctx, "t")
print(f"t is constant on fibers of the cusp map: {cusp.determined_by(t)}")
result = cusp.interpolate(t)
print(f"interpolation status: {result.status}")
print("so t = v/u on the image is a genuine function there, but no")
print("polynomial in (u, v) restricts to it: the map misses too much.")

print()
print("=" * 60)
print("2. The shear: same failure, dominant map")
print("=" * 60)

g = parse_poly("x*y^2", shear.source.ctx)
print(f"x*y^2 determined by the shear: {shear.determined_by(g)}")
print(f"interpolation status: {shear.interpolate(g).status}")
y = Poly.variable(shear.source.ctx, "y")
print(f"y determined by the shear: {shear.determined_by(y)}")
print(f"interpolation status for y: {shear.interpolate(y).status}")

print()
print("=" * 60)
print("3. A surjective map interpolates everything it determines")
print("=" * 60)

square = load_fixture("square").morphism()
g = parse_poly("t^4 + 3*t^2", square.source.ctx)
result = square.interpolate(g)
print(f"t^4 + 3*t^2 through t -> t^2: interpolant {result.interpolant}")

print()
print("=" * 60)
print("4. Minimal polynomials over the image")
print("=" * 60)

mp = square.minimal_polynomial(Poly.variable(square.source.ctx, "t"))
print(f"relation of t over the image of t -> t^2: {mp.relation}  (degree {mp.degree})")
mp = square.minimal_polynomial(g)
num, den = mp.rational_pair
print(f"relation of t^4 + 3*t^2: {mp.relation}  (degree {mp.degree}),")
print(f"   so the function is ({num}) / ({den}) composed with the map.")
mp = cusp.minimal_polynomial(Poly.variable(cusp.source.ctx, "t"))
print(f"relation of t over the cusp: {mp.status}  (the graph closure has codimension 2)")

print()
print("=" * 60)
print("5. Regular extension from the image")
print("=" * 60)

sl2 = load_fixture("sl2row").morphism()
composite = parse_poly("a^2 + a*b", sl2.source.ctx)
print(f"(a, b, c, d) with a*d - b*c = 1, map (a, b); composite a^2 + a*b")
print(f"extends to the regular function: {sl2.extend(composite).interpolant}")
