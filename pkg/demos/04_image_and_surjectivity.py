#!/usr/bin/env python3
"""Describing images exactly and measuring what a map misses.

A map is almost surjective when the closure of the missed set has
dimension at most dim(target) - 2; that is precisely the condition
under which determined functions admit regular interpolants.
"""

from polymap import Poly, load_fixture

print("=" * 60)
print("1. Constructible image of the shear (x, y) -> (x, x*y)")
print("=" * 60)

shear = load_fixture("shear").morphism()
image = shear.constructible_image()
for closed, minus in image.pieces:
    print(f"   piece: V({closed})  minus  V({minus})")
print(f"exact description: {image.exact}")
print(f"contains (1, 5): {image.contains([1, 5])}")
print(f"contains (0, 0): {image.contains([0, 0])}")
print(f"contains (0, 3): {image.contains([0, 3])}")

print()
print("=" * 60)
print("2. Almost surjectivity across the fixture library")
print("=" * 60)

for name in ("cusp", "shear", "sl2row", "hyperbola", "sym2", "square", "identity2"):
    rep = load_fixture(name).morphism().almost_surjective()
    comp = ", ".join(str(g) for g in rep.complement_closure.generators) or "0"
    print(f"   {name:10s} almost_surjective={str(rep.almost_surjective):5s} "
          f"surjective={str(rep.surjective):5s} complement closure=<{comp}> "
          f"(dim {rep.complement_dim} vs target {rep.target_dim})")

print()
print("=" * 60)
print("3. A divisibility witness certifies a missed hypersurface")
print("=" * 60)

cusp = load_fixture("cusp").morphism()
uv = cusp.target.ctx
u, v = Poly.variables(uv)
source_div, target_div = cusp.divides_transfer(u, v)
print(f"on the source, u-pullback t^2 divides v-pullback t^3: {source_div}")
print(f"on the target, u divides v: {target_div}")
print("the pair (True, False) is a certificate that the cusp map is not")
print("almost surjective, independent of the image computation.")
