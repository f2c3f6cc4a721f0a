"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a map from monomials to nonzero Fraction coefficients,
where a monomial is an exponent tuple with one entry per variable of a
fixed :class:`VarContext`:

    x^2*y - 3   over (x, y)   ->   {(2, 1): 1, (0, 0): -3}

The zero polynomial is the empty map.  Storage is canonical and
independent of any monomial order, so equality is plain term-map
equality; orders only matter for leading terms and printing.  All
values are immutable and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import ContextMismatchError, UnknownVariableError
from .orders import GREVLEX, MonomialOrder

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")


@dataclass(frozen=True)
class VarContext:
    """An ordered tuple of distinct variable names, fixing a polynomial ring."""

    names: tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        seen = set()
        for name in names:
            if not _NAME_RE.match(name):
                raise UnknownVariableError(f"invalid variable name {name!r}")
            if name in seen:
                raise UnknownVariableError(f"duplicate variable name {name!r}")
            seen.add(name)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def arity(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r} in context {self.names}") from None

    def fresh_name(self, base: str) -> str:
        """A name not present in this context, derived from ``base`` by priming."""
        name = base
        while name in self._index:
            name += "'"
        return name

    def extended(self, extra: Iterable[str]) -> "VarContext":
        return VarContext(self.names + tuple(extra))

    def __str__(self) -> str:
        return "(" + ", ".join(self.names) + ")"


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: VarContext, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            arity = ctx.arity
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                if len(mono) != arity or any(e < 0 for e in mono):
                    raise ValueError(f"bad exponent tuple {mono!r} for context {ctx}")
                clean[tuple(mono)] = coeff
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ctx: VarContext) -> "Poly":
        return Poly(ctx)

    @staticmethod
    def one(ctx: VarContext) -> "Poly":
        return Poly.constant(ctx, 1)

    @staticmethod
    def constant(ctx: VarContext, value: Scalar) -> "Poly":
        return Poly(ctx, {(0,) * ctx.arity: Fraction(value)})

    @staticmethod
    def variable(ctx: VarContext, name: str) -> "Poly":
        exps = [0] * ctx.arity
        exps[ctx.index(name)] = 1
        return Poly(ctx, {tuple(exps): Fraction(1)})

    @staticmethod
    def variables(ctx: VarContext) -> list["Poly"]:
        return [Poly.variable(ctx, n) for n in ctx.names]

    # -- basic structure ---------------------------------------------------

    def terms(self) -> Iterable[tuple[Monomial, Fraction]]:
        return self._terms.items()

    def monomials(self) -> Iterable[Monomial]:
        return self._terms.keys()

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def num_terms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * self.ctx.arity, Fraction(0))

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def degree_in(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self.ctx.index(var)
        if not self._terms:
            return -1
        return max(m[i] for m in self._terms)

    def variables_used(self) -> set[str]:
        used: set[str] = set()
        for mono in self._terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(self.ctx.names[i])
        return used

    # -- order-dependent views --------------------------------------------

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- ring arithmetic ----------------------------------------------------

    def _check_ctx(self, other: "Poly") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError(f"contexts differ: {self.ctx} vs {other.ctx}")

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.ctx, other)
        self._check_ctx(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono)
            if acc is None:
                out[mono] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[mono] = acc
                else:
                    del out[mono]
        return _raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return _raw(self.ctx, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.ctx, other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly.constant(self.ctx, other) - self

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                return Poly.zero(self.ctx)
            return _raw(self.ctx, {m: c * other for m, c in self._terms.items()})
        self._check_ctx(other)
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                acc = out.get(mono)
                if acc is None:
                    out[mono] = ca * cb
                else:
                    acc = acc + ca * cb
                    if acc:
                        out[mono] = acc
                    else:
                        del out[mono]
        return _raw(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take nonnegative integer exponents")
        result = Poly.one(self.ctx)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def monic(self, order: MonomialOrder = GREVLEX) -> "Poly":
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        inv = Fraction(1) / lc
        return _raw(self.ctx, {m: c * inv for m, c in self._terms.items()})

    # -- calculus / substitution -------------------------------------------

    def derivative(self, var: str) -> "Poly":
        """Formal partial derivative."""
        i = self.ctx.index(var)
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            e = mono[i]
            if e == 0:
                continue
            lowered = mono[:i] + (e - 1,) + mono[i + 1:]
            out[lowered] = out.get(lowered, Fraction(0)) + coeff * e
        return Poly(self.ctx, out)

    def substitute(self, assignment: Mapping[str, "Poly"]) -> "Poly":
        """Ring morphism sending each context variable to a polynomial.

        Every variable of this context must be assigned; all images must
        share one target context.
        """
        for name in self.ctx.names:
            if name not in assignment:
                raise UnknownVariableError(f"missing assignment for variable {name!r}")
        images = [assignment[name] for name in self.ctx.names]
        target = images[0].ctx if images else self.ctx
        for img in images:
            if img.ctx != target:
                raise ContextMismatchError("assignment images live in different contexts")
        powers: list[dict[int, Poly]] = [{} for _ in images]

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            got = cache.get(e)
            if got is None:
                got = images[i] ** e
                cache[e] = got
            return got

        total = Poly.zero(target)
        for mono, coeff in self._terms.items():
            term = Poly.constant(target, coeff)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point (one value per context variable)."""
        if len(point) != self.ctx.arity:
            raise ValueError(f"point has {len(point)} coordinates, context needs {self.ctx.arity}")
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for v, e in zip(values, mono):
                if e:
                    term *= v ** e
            total += term
        return total

    def coefficients_in(self, var: str) -> dict[int, "Poly"]:
        """View as univariate in ``var``: degree -> coefficient polynomial.

        Coefficients stay in the same context with the variable's exponent
        cleared, so they never involve ``var``.
        """
        i = self.ctx.index(var)
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mono, coeff in self._terms.items():
            e = mono[i]
            stripped = mono[:i] + (0,) + mono[i + 1:]
            buckets.setdefault(e, {})[stripped] = coeff
        return {e: _raw(self.ctx, terms) for e, terms in buckets.items()}

    def transport(self, target: VarContext, rename: Mapping[str, str] | None = None) -> "Poly":
        """Re-express over another context, optionally renaming variables.

        Unmapped variables keep their names; a variable actually used by
        the polynomial must exist (after renaming) in the target context.
        """
        rename = rename or {}
        positions: list[int | None] = []
        for name in self.ctx.names:
            mapped = rename.get(name, name)
            positions.append(target.index(mapped) if mapped in target else None)
        out: dict[Monomial, Fraction] = {}
        zero = [0] * target.arity
        for mono, coeff in self._terms.items():
            exps = zero[:]
            for i, e in enumerate(mono):
                if not e:
                    continue
                j = positions[i]
                if j is None:
                    raise UnknownVariableError(
                        f"variable {self.ctx.names[i]!r} used by {self} has no image in {target}"
                    )
                exps[j] += e
            key = tuple(exps)
            out[key] = out.get(key, Fraction(0)) + coeff
        return Poly(target, out)

    # -- equality / printing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                return self == Poly.constant(self.ctx, other)
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ctx, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        """Canonical form: descending grevlex, explicit ``*`` and ``^``."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mono, coeff in self.sorted_terms(GREVLEX):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ctx.names, mono)
                if e
            ]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _raw(ctx: VarContext, terms: dict[Monomial, Fraction]) -> Poly:
    """Internal constructor for already-canonical term maps (no copies)."""
    p = object.__new__(Poly)
    object.__setattr__(p, "ctx", ctx)
    object.__setattr__(p, "_terms", terms)
    object.__setattr__(p, "_hash", None)
    return p
