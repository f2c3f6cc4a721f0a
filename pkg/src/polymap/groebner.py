"""Groebner-basis kernel: division, Buchberger, elimination, membership,
radical membership, quotients, saturation and Krull dimension.

The kernel is deliberately plain Buchberger with the two classical pair
criteria and a normal selection strategy; inputs here are desk scale
(few variables, small degrees) and determinism matters more than raw
speed.  Reduced bases are canonical for (ideal, order): every run, under
any selection strategy, returns the identical monic reduced basis.
"""

from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ContextMismatchError, PolymapError
from .orders import Block, GREVLEX, MonomialOrder
from .poly import Monomial, Poly, VarContext, _raw


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def normal_form(f: Poly, basis: Sequence[Poly], order: MonomialOrder = GREVLEX) -> Poly:
    """Remainder of multivariate division of ``f`` by ``basis``.

    The divisor picked at each step is the first basis element whose
    leading monomial divides the current leading monomial, so the result
    is deterministic for a fixed basis tuple; it is canonical whenever
    the basis is a Groebner basis for ``order``.
    """
    if not basis:
        return f
    ctx = f.ctx
    for g in basis:
        if g.ctx != ctx:
            raise ContextMismatchError("normal_form: mixed contexts")
    key = order.key_function(ctx.arity)
    divisors = [(g.leading_monomial(order), g._terms, g.leading_coefficient(order)) for g in basis if not g.is_zero()]
    work = dict(f._terms)
    remainder: dict[Monomial, Fraction] = {}
    while work:
        lm = max(work, key=key)
        lc = work[lm]
        hit = None
        for glm, gterms, glc in divisors:
            if _divides(glm, lm):
                hit = (glm, gterms, glc)
                break
        if hit is None:
            remainder[lm] = lc
            del work[lm]
            continue
        glm, gterms, glc = hit
        shift = _mono_sub(lm, glm)
        factor = lc / glc
        for gm, gc in gterms.items():
            mono = _mono_mul(gm, shift)
            acc = work.get(mono, Fraction(0)) - factor * gc
            if acc:
                work[mono] = acc
            elif mono in work:
                del work[mono]
    return _raw(f.ctx, remainder)


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    lcm = _mono_lcm(lf, lg)
    mf = _raw(f.ctx, {_mono_sub(lcm, lf): Fraction(1) / f.leading_coefficient(order)})
    mg = _raw(f.ctx, {_mono_sub(lcm, lg): Fraction(1) / g.leading_coefficient(order)})
    return mf * f - mg * g


def _interreduce(polys: list[Poly], order: MonomialOrder) -> list[Poly]:
    """Reduce each element against the others until stable; drop zeros."""
    current = [p.monic(order) for p in polys if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            rest = current[:i] + current[i + 1:]
            reduced = normal_form(current[i], rest, order)
            if reduced != current[i]:
                changed = True
                if reduced.is_zero():
                    current = [p for j, p in enumerate(current) if j != i]
                else:
                    current[i] = reduced.monic(order)
                break
    return current


def buchberger(
    generators: Iterable[Poly],
    order: MonomialOrder = GREVLEX,
    strategy: str = "normal",
) -> tuple[Poly, ...]:
    """The unique monic reduced Groebner basis of the generated ideal.

    ``strategy`` picks the next critical pair: "normal" selects a pair of
    minimal lcm degree (ties by lcm order key and insertion index),
    "first" works first-in first-out.  By uniqueness of reduced bases the
    returned tuple does not depend on the strategy; exposing it lets the
    determinism claim be tested rather than assumed.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return ()
    ctx = gens[0].ctx
    if strategy not in ("normal", "first"):
        raise ValueError(f"unknown selection strategy {strategy!r}")
    key = order.key_function(ctx.arity)

    basis = _interreduce(gens, order)
    if not basis:
        return ()
    lms = [g.leading_monomial(order) for g in basis]

    pairs: dict[tuple[int, int], Monomial] = {}
    counter = itertools.count()
    ticket: dict[tuple[int, int], int] = {}

    def add_pair(i: int, j: int) -> None:
        pair = (i, j) if i < j else (j, i)
        pairs[pair] = _mono_lcm(lms[pair[0]], lms[pair[1]])
        ticket[pair] = next(counter)

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            add_pair(i, j)

    def select() -> tuple[int, int]:
        if strategy == "first":
            return min(pairs, key=lambda p: ticket[p])
        return min(pairs, key=lambda p: (sum(pairs[p]), key(pairs[p]), ticket[p]))

    while pairs:
        i, j = select()
        lcm = pairs.pop((i, j))
        # Buchberger's first criterion: coprime leading monomials.
        if lcm == _mono_mul(lms[i], lms[j]):
            continue
        # Chain criterion: some k with LM(k) | lcm and both side pairs done.
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if not _divides(lms[k], lcm):
                continue
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a not in pairs and b not in pairs:
                skip = True
                break
        if skip:
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero():
            continue
        h = h.monic(order)
        basis.append(h)
        lms.append(h.leading_monomial(order))
        new = len(basis) - 1
        for k in range(new):
            add_pair(k, new)

    return _reduce_basis(basis, order)


def _reduce_basis(basis: list[Poly], order: MonomialOrder) -> tuple[Poly, ...]:
    """Minimize (prune divisible leading terms) then tail-reduce; sort."""
    lms = [g.leading_monomial(order) for g in basis]
    keep: list[int] = []
    for i, lm in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if _divides(other, lm) and (other != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    reduced: list[Poly] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others, order).monic(order))
    key = order.key_function(reduced[0].ctx.arity) if reduced else None
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return tuple(reduced)


class Ideal:
    """An ideal of a polynomial ring, with cached reduced Groebner bases.

    The generator list is immutable; the per-order basis cache is
    lock-protected and idempotent, so instances are safe to share
    between threads.
    """

    __slots__ = ("ctx", "generators", "_cache", "_lock")

    def __init__(self, ctx: VarContext, generators: Iterable[Poly] = ()):
        gens = []
        for g in generators:
            if g.ctx != ctx:
                raise ContextMismatchError("generator context differs from ideal context")
            if not g.is_zero():
                gens.append(g)
        self.ctx = ctx
        self.generators = tuple(gens)
        self._cache: dict[tuple[MonomialOrder, str], tuple[Poly, ...]] = {}
        self._lock = threading.Lock()

    @staticmethod
    def zero(ctx: VarContext) -> "Ideal":
        return Ideal(ctx, ())

    @staticmethod
    def unit(ctx: VarContext) -> "Ideal":
        return Ideal(ctx, (Poly.one(ctx),))

    # -- bases ---------------------------------------------------------------

    def groebner_basis(self, order: MonomialOrder = GREVLEX, strategy: str = "normal") -> tuple[Poly, ...]:
        cache_key = (order, strategy)
        with self._lock:
            got = self._cache.get(cache_key)
        if got is not None:
            return got
        basis = buchberger(self.generators, order, strategy)
        with self._lock:
            self._cache.setdefault(cache_key, basis)
            return self._cache[cache_key]

    def _prime_cache(self, order: MonomialOrder, basis: tuple[Poly, ...]) -> None:
        with self._lock:
            self._cache.setdefault((order, "normal"), basis)

    def normal_form(self, f: Poly, order: MonomialOrder = GREVLEX) -> Poly:
        if f.ctx != self.ctx:
            raise ContextMismatchError("normal_form argument context differs from ideal context")
        return normal_form(f, self.groebner_basis(order), order)

    # -- predicates ------------------------------------------------------------

    def contains(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero()

    def radical_contains(self, f: Poly) -> bool:
        """Membership in the radical, decided with a fresh inverse variable.

        ``f`` vanishes on the vanishing locus of this ideal (over an
        algebraically closed extension) exactly when adjoining s*f - 1
        makes the ideal trivial.
        """
        if f.ctx != self.ctx:
            raise ContextMismatchError("radical membership argument context differs")
        if f.is_zero():
            return True
        s = self.ctx.fresh_name("s")
        big = self.ctx.extended([s])
        gens = [g.transport(big) for g in self.generators]
        gens.append(Poly.variable(big, s) * f.transport(big) - 1)
        return Ideal(big, gens).is_unit()

    def is_zero_ideal(self) -> bool:
        return not self.groebner_basis()

    def is_unit(self) -> bool:
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0].is_constant()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def same_ideal(self, other: "Ideal") -> bool:
        """Exact ideal equality via canonical reduced bases."""
        if self.ctx != other.ctx:
            raise ContextMismatchError("comparing ideals over different contexts")
        return self.groebner_basis() == other.groebner_basis()

    # -- constructions -----------------------------------------------------------

    def __add__(self, other: "Ideal | Iterable[Poly]") -> "Ideal":
        extra = other.generators if isinstance(other, Ideal) else tuple(other)
        return Ideal(self.ctx, self.generators + tuple(extra))

    def product(self, other: "Ideal") -> "Ideal":
        if self.ctx != other.ctx:
            raise ContextMismatchError("product of ideals over different contexts")
        if not self.generators or not other.generators:
            return Ideal.zero(self.ctx)
        return Ideal(self.ctx, tuple(a * b for a in self.generators for b in other.generators))

    def eliminate(self, drop: Iterable[str]) -> "Ideal":
        """Intersection with the subring on the kept variables.

        Returns an ideal over the restricted context; its vanishing locus
        is the closure of the coordinate projection of this ideal's locus.
        """
        drop = list(dict.fromkeys(drop))
        if not drop:
            return self
        indices = tuple(sorted(self.ctx.index(name) for name in drop))
        order = Block(indices)
        basis = self.groebner_basis(order)
        dropped = set(indices)
        kept_names = [n for i, n in enumerate(self.ctx.names) if i not in dropped]
        small = VarContext(kept_names)
        kept = [
            g.transport(small)
            for g in basis
            if all(all(m[i] == 0 for i in indices) for m in g.monomials())
        ]
        result = Ideal(small, kept)
        # The head-free part of a reduced block basis is itself the reduced
        # grevlex basis of the elimination ideal; seed the cache with it.
        result._prime_cache(GREVLEX, tuple(kept))
        return result

    def quotient(self, f: Poly) -> "Ideal":
        """Colon ideal (I : f) = {g : g*f in I}."""
        if f.ctx != self.ctx:
            raise ContextMismatchError("quotient argument context differs")
        if f.is_zero():
            raise ValueError("quotient by the zero polynomial")
        intersection = self.intersect(Ideal(self.ctx, (f,)))
        return Ideal(self.ctx, tuple(exact_div(g, f) for g in intersection.generators))

    def saturation(self, f: Poly) -> "Ideal":
        """Stable colon ideal (I : f^inf), by iterating quotients."""
        current = self
        while True:
            step = current.quotient(f)
            if step.same_ideal(current):
                return current
            current = step

    def intersect(self, other: "Ideal") -> "Ideal":
        """Ideal intersection via a scaling variable and elimination."""
        if self.ctx != other.ctx:
            raise ContextMismatchError("intersecting ideals over different contexts")
        t = self.ctx.fresh_name("t")
        big = self.ctx.extended([t])
        tv = Poly.variable(big, t)
        gens = [tv * g.transport(big) for g in self.generators]
        gens += [(Poly.one(big) - tv) * g.transport(big) for g in other.generators]
        mixed = Ideal(big, gens).eliminate([t])
        return Ideal(self.ctx, tuple(g.transport(self.ctx) for g in mixed.generators))

    # -- invariants -----------------------------------------------------------------

    def dimension(self) -> int:
        """Krull dimension of the quotient ring; -1 for the unit ideal.

        Computed combinatorially: the dimension equals the largest size of
        a variable subset that meets the support of no leading monomial of
        the reduced grevlex basis.
        """
        basis = self.groebner_basis(GREVLEX)
        if not basis:
            return self.ctx.arity
        if self.is_unit():
            return -1
        supports = [frozenset(i for i, e in enumerate(g.leading_monomial(GREVLEX)) if e) for g in basis]
        n = self.ctx.arity
        for size in range(n, 0, -1):
            for subset in itertools.combinations(range(n), size):
                chosen = set(subset)
                if not any(s <= chosen for s in supports):
                    return size
        return 0

    def principal_generator(self) -> Poly | None:
        """The single reduced-basis element, when the basis is a singleton.

        Returns the zero polynomial for the zero ideal and None when the
        reduced grevlex basis has several elements (a sufficient but not
        necessary criterion for non-principality; exact for elimination
        ideals of polynomial rings, where height-one primes are principal).
        """
        basis = self.groebner_basis(GREVLEX)
        if not basis:
            return Poly.zero(self.ctx)
        if len(basis) == 1:
            return basis[0]
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ctx == other.ctx and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.ctx, self.generators))

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return f"Ideal{self}"


def exact_div(f: Poly, divisor: Poly) -> Poly:
    """Exact polynomial quotient f / divisor; raises if it does not divide.

    For a lone divisor the division algorithm keeps the whole remainder
    tail divisible, so divisibility shows up as a zero remainder.
    """
    if divisor.is_zero():
        raise ZeroDivisionError("exact division by zero polynomial")
    if f.is_zero():
        return f
    order = GREVLEX
    lm = divisor.leading_monomial(order)
    lc = divisor.leading_coefficient(order)
    work = dict(f._terms)
    quotient: dict[Monomial, Fraction] = {}
    key = order.key_function(f.ctx.arity)
    while work:
        top = max(work, key=key)
        if not _divides(lm, top):
            raise PolymapError(f"{divisor} does not divide {f}")
        shift = _mono_sub(top, lm)
        factor = work[top] / lc
        quotient[shift] = factor
        for gm, gc in divisor._terms.items():
            mono = _mono_mul(gm, shift)
            acc = work.get(mono, Fraction(0)) - factor * gc
            if acc:
                work[mono] = acc
            elif mono in work:
                del work[mono]
    return _raw(f.ctx, quotient)
