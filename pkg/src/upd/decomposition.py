"""Irreducible and primary decomposition of monomial ideals.

The irreducible decomposition uses the splitting rule

    I + (u*v) = (I + (u)) ∩ (I + (v))      for coprime monomials u, v,

applied until every generator is a pure power.  Grouping the irreducible
pieces by radical gives the standard primary decomposition.  :func:`assemble`
puts per-prime components from different decompositions back together and
checks the result instead of trusting it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import kernels
from .errors import (
    IntersectionMismatch,
    NotPrimary,
    RedundantComponent,
    UnitIdealError,
)
from .monomial import (
    MonomialIdeal,
    ideal_leq,
    ideal_sum,
    intersect,
    intersect_all,
    power,
    prime_variables,
    radical,
)


@dataclass(frozen=True)
class PrimaryComponent:
    prime: MonomialIdeal
    component: MonomialIdeal

    def as_dict(self) -> dict:
        return {"prime": self.prime.rendered_gens(), "component": self.component.rendered_gens()}


@dataclass(frozen=True)
class PrimaryDecomposition:
    ideal: MonomialIdeal
    components: tuple[PrimaryComponent, ...]
    irredundant: bool
    minimal: bool

    @property
    def primes(self) -> tuple[MonomialIdeal, ...]:
        return tuple(c.prime for c in self.components)

    def component_for(self, prime: MonomialIdeal) -> MonomialIdeal | None:
        for c in self.components:
            if c.prime == prime:
                return c.component
        return None

    def as_dict(self) -> dict:
        return {
            "ideal": self.ideal.rendered_gens(),
            "components": [c.as_dict() for c in self.components],
            "irredundant": self.irredundant,
            "minimal": self.minimal,
        }


def prime_key(P: MonomialIdeal):
    return (len(P.gens), prime_variables(P))


def _reject_unit(I: MonomialIdeal) -> None:
    if I.is_unit():
        raise UnitIdealError("the unit ideal has no primary decomposition")


def _pivot(I: MonomialIdeal, var_order: Sequence[int]):
    for g in I.gens:
        support = [i for i in var_order if g[i]]
        if len(support) > 1:
            i = support[0]
            u = tuple(a if j == i else 0 for j, a in enumerate(g))
            v = tuple(0 if j == i else a for j, a in enumerate(g))
            return u, v
    return None


def irreducible_decomposition(
    I: MonomialIdeal, var_order: Sequence[int] | None = None, reverse_gens: bool = False
) -> list[MonomialIdeal]:
    """Irredundant list of irreducible monomial ideals intersecting to I.

    The pivot is the first generator (canonical order, or reversed when
    ``reverse_gens``) whose support has two or more variables; it is split off
    the first of its variables in ``var_order`` (default: ring order).  The
    order only changes the work done: an irredundant irreducible decomposition
    of a monomial ideal is unique up to ordering.
    """
    _reject_unit(I)
    if I.is_zero():
        return [I]
    ctx = I.ctx
    order = tuple(range(ctx.dim)) if var_order is None else tuple(var_order)
    if sorted(order) != list(range(ctx.dim)):
        raise ValueError(f"var_order must permute 0..{ctx.dim - 1}")

    leaves: list[MonomialIdeal] = []
    seen: set[MonomialIdeal] = set()
    stack = [I]
    while stack:
        J = stack.pop()
        if J in seen:
            continue
        seen.add(J)
        gens_view = J if not reverse_gens else MonomialIdeal(ctx, J.gens[::-1])
        split = _pivot(gens_view, order)
        if split is None:
            leaves.append(J)
            continue
        u, v = split
        left = MonomialIdeal(ctx, kernels.minimalize(J.gens + (u,)))
        right = MonomialIdeal(ctx, kernels.minimalize(J.gens + (v,)))
        # pushed in reverse so the u-branch is explored first
        stack.append(right)
        stack.append(left)

    pruned = []
    for i, Q in enumerate(leaves):
        if Q in pruned:
            continue
        # an irreducible monomial ideal contains an intersection of monomial
        # ideals only if it contains one of them
        if any(j != i and ideal_leq(R, Q) and R != Q for j, R in enumerate(leaves)):
            continue
        pruned.append(Q)
    return pruned


def associated_primes(I: MonomialIdeal) -> frozenset[MonomialIdeal]:
    """Ass(A/I), read off as the radicals of the irreducible components."""
    return frozenset(radical(Q) for Q in irreducible_decomposition(I))


def minimal_primes(primes) -> list[MonomialIdeal]:
    primes = list(primes)
    return sorted(
        (P for P in primes if not any(R != P and ideal_leq(R, P) for R in primes)),
        key=prime_key,
    )


def _drop_one_redundant(I: MonomialIdeal, comps: list[PrimaryComponent]) -> list[int]:
    ctx = I.ctx
    bad = []
    for i in range(len(comps)):
        rest = intersect_all((c.component for j, c in enumerate(comps) if j != i), ctx)
        if rest == I:
            bad.append(i)
    return bad


def primary_decomposition(
    I: MonomialIdeal, var_order: Sequence[int] | None = None, reverse_gens: bool = False
) -> PrimaryDecomposition:
    """Irredundant, minimal primary decomposition; components sorted by prime."""
    _reject_unit(I)
    ctx = I.ctx
    if I.is_zero():
        return PrimaryDecomposition(I, (PrimaryComponent(I, I),), True, True)
    groups: dict[MonomialIdeal, MonomialIdeal] = {}
    for Q in irreducible_decomposition(I, var_order, reverse_gens):
        P = radical(Q)
        groups[P] = intersect(groups[P], Q) if P in groups else Q
    comps = [PrimaryComponent(P, groups[P]) for P in sorted(groups, key=prime_key)]
    # grouping can leave a redundant embedded component; drop them one at a time
    while True:
        bad = _drop_one_redundant(I, comps)
        if not bad:
            break
        del comps[bad[-1]]
    return PrimaryDecomposition(I, tuple(comps), irredundant=True, minimal=True)


def is_primary(Q: MonomialIdeal) -> MonomialIdeal | None:
    """The associated prime of Q if Q is primary, else None."""
    primes = associated_primes(Q)
    if len(primes) == 1:
        return next(iter(primes))
    return None


def localized_component(I: MonomialIdeal, P: MonomialIdeal, k: int) -> MonomialIdeal:
    """(I : m^∞) + P^k with m the product of the variables outside P.

    Contracting I from the localization at P and adding P^k gives a
    P-primary ideal; for P in Ass(A/I) and k large it is a P-primary component
    of I, usually different from the one :func:`primary_decomposition` picks
    for an embedded prime.
    """
    ctx = I.ctx
    inside = set(prime_variables(P))
    outside = tuple(0 if i in inside else 1 for i in range(ctx.dim))
    local = I
    if any(outside):
        # (I : m^∞) just deletes the outside variables from every generator
        local = MonomialIdeal(
            ctx,
            kernels.minimalize(
                [tuple(0 if o else a for a, o in zip(g, outside)) for g in I.gens]
            ),
        )
    return ideal_sum(local, power(P, k))


def check_irredundant(I: MonomialIdeal, components: Sequence[MonomialIdeal]) -> bool:
    ctx = I.ctx
    for i in range(len(components)):
        rest = intersect_all((Q for j, Q in enumerate(components) if j != i), ctx)
        if rest == I:
            return False
    return True


def assemble(I: MonomialIdeal, picks: Mapping[MonomialIdeal, MonomialIdeal]) -> PrimaryDecomposition:
    """Assemble one P-primary component per associated prime into a decomposition.

    Raises rather than trusts: the prime set, primariness, the intersection and
    irredundancy are all checked.
    """
    _reject_unit(I)
    ctx = I.ctx
    ass = associated_primes(I)
    if set(picks) != set(ass):
        missing = sorted((P.render() for P in ass - set(picks)))
        extra = sorted((P.render() for P in set(picks) - ass))
        raise IntersectionMismatch(
            f"picks must cover Ass(A/I) exactly; missing {missing}, extra {extra}"
        )
    comps = []
    for P in sorted(picks, key=prime_key):
        Q = picks[P]
        got = is_primary(Q) if not Q.is_unit() else None
        if got != P:
            raise NotPrimary(f"{Q.render()} is not {P.render()}-primary")
        comps.append(PrimaryComponent(P, Q))
    total = intersect_all((c.component for c in comps), ctx)
    if total != I:
        raise IntersectionMismatch(
            f"components intersect to {total.render()}, expected {I.render()}"
        )
    if not check_irredundant(I, [c.component for c in comps]):
        raise RedundantComponent("some component can be dropped without changing the intersection")
    return PrimaryDecomposition(I, tuple(comps), irredundant=True, minimal=True)
