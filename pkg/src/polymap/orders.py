"""Monomial orders on exponent vectors.

An order is represented by a key function: ``m1`` is smaller than ``m2``
exactly when ``order.key(m1) < order.key(m2)`` under tuple comparison.
Every order here is a well-order compatible with multiplication, so the
constant monomial is minimal and division algorithms terminate.
"""

from __future__ import annotations

from dataclasses import dataclass

Monomial = tuple[int, ...]


def _grevlex_key(exponents: Monomial) -> tuple:
    # Graded, ties broken by the smallest *last* difference: reverse and
    # negate so plain tuple comparison does the right thing.
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


@dataclass(frozen=True)
class MonomialOrder:
    """Base class; subclasses are hashable and usable as cache keys."""

    def key(self, exponents: Monomial) -> tuple:
        raise NotImplementedError

    def key_function(self, arity: int):
        """A plain callable usable in hot loops; default is ``self.key``."""
        return self.key

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, exponents: Monomial) -> tuple:
        return exponents

    def __str__(self) -> str:
        return "lex"


@dataclass(frozen=True)
class GrLex(MonomialOrder):
    def key(self, exponents: Monomial) -> tuple:
        return (sum(exponents), exponents)

    def __str__(self) -> str:
        return "grlex"


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    def key(self, exponents: Monomial) -> tuple:
        return _grevlex_key(exponents)

    def __str__(self) -> str:
        return "grevlex"


@dataclass(frozen=True)
class Block(MonomialOrder):
    """Elimination order: the head variables dominate the rest.

    Monomials are compared grevlex on the head block first, then grevlex
    on the remaining variables, so any monomial containing a head variable
    beats every head-free monomial.  ``head`` holds variable positions.
    """

    head: tuple[int, ...]

    @staticmethod
    def first(k: int) -> "Block":
        """The order whose head block is the first ``k`` context variables."""
        return Block(tuple(range(k)))

    def key(self, exponents: Monomial) -> tuple:
        head = set(self.head)
        inside = tuple(exponents[i] for i in self.head)
        outside = tuple(e for i, e in enumerate(exponents) if i not in head)
        return (_grevlex_key(inside), _grevlex_key(outside))

    def key_function(self, arity: int):
        """Precompiled key for a fixed arity; avoids per-call set building."""
        inside = self.head
        outside = tuple(i for i in range(arity) if i not in set(self.head))

        def key(exponents: Monomial) -> tuple:
            hd = tuple(exponents[i] for i in inside)
            tl = tuple(exponents[i] for i in outside)
            return (_grevlex_key(hd), _grevlex_key(tl))

        return key

    def __str__(self) -> str:
        return f"block{list(self.head)}"


LEX = Lex()
GRLEX = GrLex()
GREVLEX = GrevLex()

ORDERS_BY_NAME = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}


def order_by_name(name: str) -> MonomialOrder:
    try:
        return ORDERS_BY_NAME[name]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}; choose from {sorted(ORDERS_BY_NAME)}") from None
