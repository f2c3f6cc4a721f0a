"""Shared helpers: seeded random generators and session-scoped fixtures.

Morphism instances are shared across the whole test session so their
internal graph/fiber caches warm up once.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from polymap import Morphism, Poly, VarContext, load_fixture, random_tame_automorphism


def random_poly(rng: random.Random, ctx: VarContext, max_deg: int = 3,
                max_terms: int = 4, bound: int = 3) -> Poly:
    """Sparse random polynomial with small integer coefficients."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ctx.arity
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(ctx.arity)] += 1
        c = rng.randint(-bound, bound)
        if c:
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + c
    return Poly(ctx, {m: Fraction(c) for m, c in terms.items() if c})


def random_nonzero_poly(rng, ctx, **kw) -> Poly:
    while True:
        p = random_poly(rng, ctx, **kw)
        if not p.is_zero():
            return p


def random_point(rng: random.Random, arity: int, bound: int = 9) -> list[Fraction]:
    return [Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(arity)]


@pytest.fixture(scope="session")
def fixture_morphisms() -> dict[str, Morphism]:
    names = ("cusp", "shear", "sl2row", "hyperbola", "sym2", "square", "triangular", "identity2")
    return {name: load_fixture(name).morphism() for name in names}


@pytest.fixture(scope="session")
def tame_pool():
    """50 certified plane automorphisms with their word-built inverses."""
    rng = random.Random(20260808)
    return [random_tame_automorphism(rng) for _ in range(50)]
