"""Monomials and monomial ideals in a fixed polynomial ring K[x_1..x_d].

Ideals are immutable values in canonical form: a minimal generating set sorted
by (total degree, then lex with the first variable largest).  Two ideals are
equal iff their generator tuples are identical.  The field K never appears;
everything here is exponent-vector combinatorics.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import ContextMismatch, ZeroIdealError

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class RingContext:
    """Ordered variable names of the coefficient ring A = K[x_1..x_d]."""

    var_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {list(names)}")
        for v in names:
            if not isinstance(v, str) or not _IDENT.match(v):
                raise ValueError(f"invalid variable name {v!r}")

    @property
    def dim(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def monomial(self, exponents: Sequence[int] | None = None, **powers: int) -> "Monomial":
        if exponents is None:
            e = [0] * self.dim
            for name, a in powers.items():
                e[self.index(name)] = a
            exponents = e
        return Monomial(self, tuple(exponents))

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.dim)

    def parse_monomial(self, text: str) -> "Monomial":
        """Inverse of :meth:`Monomial.render` (``x^2*y``, ``1``)."""
        text = text.strip()
        e = [0] * self.dim
        if text == "1":
            return Monomial(self, tuple(e))
        for factor in text.split("*"):
            name, _, power = factor.strip().partition("^")
            e[self.index(name)] += int(power) if power else 1
        return Monomial(self, tuple(e))

    def ideal(self, *gens: "str | Monomial | Sequence[int]") -> "MonomialIdeal":
        """Build an ideal from rendered strings, monomials or exponent vectors."""
        vecs = []
        for g in gens:
            if isinstance(g, str):
                g = self.parse_monomial(g)
            if isinstance(g, Monomial):
                if g.ctx != self:
                    raise ContextMismatch("monomial from another ring")
                vecs.append(g.exponents)
            else:
                vecs.append(tuple(g))
        return MonomialIdeal.from_exponents(self, vecs)

    def zero_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, ())

    def unit_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, ((0,) * self.dim,))

    def prime(self, names: Iterable[str]) -> "MonomialIdeal":
        """The monomial prime generated by the named variables."""
        vecs = []
        for name in names:
            e = [0] * self.dim
            e[self.index(name)] = 1
            vecs.append(tuple(e))
        return MonomialIdeal.from_exponents(self, vecs)

    def render_exponents(self, e: Sequence[int]) -> str:
        parts = []
        for name, a in zip(self.var_names, e):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Monomial:
    ctx: RingContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        e = tuple(self.exponents)
        object.__setattr__(self, "exponents", e)
        if len(e) != self.ctx.dim:
            raise ContextMismatch(
                f"monomial has {len(e)} exponents, ring has {self.ctx.dim} variables"
            )
        for a in e:
            if isinstance(a, bool) or not isinstance(a, int) or a < 0:
                raise ValueError(f"exponents must be non-negative integers, got {e}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.exponents) if a)

    def divides(self, other: "Monomial") -> bool:
        _same(self.ctx, other.ctx)
        return kernels.divides(self.exponents, other.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same(self.ctx, other.ctx)
        return Monomial(self.ctx, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same(self.ctx, other.ctx)
        return Monomial(self.ctx, tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        _same(self.ctx, other.ctx)
        return Monomial(self.ctx, tuple(map(min, self.exponents, other.exponents)))

    def render(self) -> str:
        return self.ctx.render_exponents(self.exponents)

    __str__ = render


class MonomialIdeal:
    """A monomial ideal in canonical form.

    ``gens`` holds exponent tuples; use :meth:`monomials` for :class:`Monomial`
    objects.  The empty tuple is the zero ideal and ``((0,...,0),)`` the unit
    ideal.  Construct through :meth:`from_exponents` or :func:`minimalize`
    unless the generators are already canonical.
    """

    __slots__ = ("ctx", "gens", "_hash")

    def __init__(self, ctx: RingContext, gens: tuple[tuple[int, ...], ...]):
        self.ctx = ctx
        self.gens = gens
        self._hash = None

    @classmethod
    def from_exponents(cls, ctx: RingContext, vecs: Iterable[Sequence[int]]) -> "MonomialIdeal":
        checked = []
        for v in vecs:
            v = tuple(v)
            if len(v) != ctx.dim:
                raise ContextMismatch(
                    f"generator {v} has {len(v)} exponents, ring has {ctx.dim} variables"
                )
            for a in v:
                if isinstance(a, bool) or not isinstance(a, int) or a < 0:
                    raise ValueError(f"exponents must be non-negative integers, got {v}")
            checked.append(v)
        return cls(ctx, kernels.minimalize(checked))

    # value semantics

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ctx == other.ctx and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self.gens))
        return self._hash

    def sort_key(self):
        return (len(self.gens), tuple(kernels.canon_key(g) for g in self.gens))

    def __lt__(self, other: "MonomialIdeal") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"MonomialIdeal{self.render()}"

    def render(self) -> str:
        return "(" + (", ".join(self.rendered_gens()) or "0") + ")"

    def rendered_gens(self) -> list[str]:
        return [self.ctx.render_exponents(g) for g in self.gens]

    __str__ = render

    # predicates

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_prime(self) -> bool:
        """Monomial primes are generated by variables (or are zero)."""
        return all(sum(g) == 1 for g in self.gens)

    def monomials(self) -> list[Monomial]:
        return [Monomial(self.ctx, g) for g in self.gens]

    def max_exponents(self) -> tuple[int, ...]:
        if not self.gens:
            return (0,) * self.ctx.dim
        return tuple(map(max, *self.gens)) if len(self.gens) > 1 else self.gens[0]

    def __contains__(self, m) -> bool:
        return contains_monomial(self, m)

    # operator sugar

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __and__(self, other):
        return intersect(self, other)



def _same(a: RingContext, b: RingContext) -> None:
    if a != b:
        raise ContextMismatch(f"ring {list(a.var_names)} vs {list(b.var_names)}")


def _vec(m, ctx: RingContext) -> tuple[int, ...]:
    if isinstance(m, Monomial):
        _same(m.ctx, ctx)
        return m.exponents
    m = tuple(m)
    if len(m) != ctx.dim:
        raise ContextMismatch(f"monomial {m} does not match ring of dimension {ctx.dim}")
    return m


def minimalize(ctx: RingContext, gens: Iterable) -> MonomialIdeal:
    """Canonical form of the ideal generated by ``gens``."""
    return MonomialIdeal.from_exponents(ctx, (_vec(g, ctx) for g in gens))


def contains_monomial(I: MonomialIdeal, m) -> bool:
    return kernels.divides_any(I.gens, _vec(m, I.ctx))


def ideal_leq(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """I ⊆ J."""
    _same(I.ctx, J.ctx)
    gens = J.gens
    return all(kernels.divides_any(gens, g) for g in I.gens)


def ideal_eq(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I == J


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same(I.ctx, J.ctx)
    return MonomialIdeal(I.ctx, kernels.minimalize(I.gens + J.gens))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same(I.ctx, J.ctx)
    return MonomialIdeal(I.ctx, kernels.minimalize(kernels.pairwise_mul(I.gens, J.gens)))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError(f"power needs k >= 0, got {k}")
    result = I.ctx.unit_ideal()
    base = I
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same(I.ctx, J.ctx)
    return MonomialIdeal(I.ctx, kernels.minimalize(kernels.pairwise_lcm(I.gens, J.gens)))


def intersect_all(ideals: Iterable[MonomialIdeal], ctx: RingContext) -> MonomialIdeal:
    """Intersection of a family; the empty family gives the unit ideal."""
    result = ctx.unit_ideal()
    for Q in ideals:
        result = intersect(result, Q)
    return result


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection of (I : g) over the generators g of J."""
    _same(I.ctx, J.ctx)
    if J.is_zero():
        raise ZeroIdealError("colon by the zero ideal is not defined here")
    result = None
    for g in J.gens:
        Ig = MonomialIdeal(I.ctx, kernels.minimalize(kernels.colon_monomial(I.gens, g)))
        result = Ig if result is None else intersect(result, Ig)
        if result.is_zero():
            break
    return result


def saturate(I: MonomialIdeal, J: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """Return ``(I : J^∞, l)`` with l the least index where the colon chain stalls.

    l = 0 means J is regular on A/I, i.e. (I : J) = I.
    """
    l = 0
    cur = I
    while True:
        nxt = colon(cur, J)
        if nxt == cur:
            return cur, l
        cur = nxt
        l += 1


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(
        I.ctx, kernels.minimalize([tuple(1 if a else 0 for a in g) for g in I.gens])
    )


def prime_variables(prime: MonomialIdeal) -> tuple[int, ...]:
    """Variable indices generating a monomial prime."""
    return tuple(sorted(g.index(1) for g in prime.gens))
