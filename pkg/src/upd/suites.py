"""Seeded randomized invariant suites, checked against the staircase oracle.

Each check takes a random pair (I, J) and raises AssertionError on a
violation.  :func:`run_suites` drives every check over ``cases`` pairs drawn
from one ``random.Random(seed)``, so a seed fixes the whole case sequence.
Failures are shrunk greedily (drop generators, lower exponents) before being
reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import oracle as sc
from .decomposition import (
    assemble,
    associated_primes,
    irreducible_decomposition,
    is_primary,
    localized_component,
    minimal_primes,
    primary_decomposition,
    prime_key,
)
from .family import ideal_to_json
from .monomial import (
    MonomialIdeal,
    RingContext,
    colon,
    ideal_eq,
    ideal_leq,
    ideal_sum,
    intersect,
    intersect_all,
    minimalize,
    power,
    product,
    radical,
    saturate,
)
from .theorems import (
    artin_rees_holds,
    bounded_decomposition,
    h0_via_components,
    k_min,
)

VAR_NAMES = ("x", "y", "z")


def random_case(rng: random.Random) -> tuple[MonomialIdeal, MonomialIdeal]:
    """d <= 3, <= 6 generators, exponents <= 5; I is never the unit ideal."""
    d = rng.randint(1, 3)
    ctx = RingContext(VAR_NAMES[:d])

    def gens(allow_one: bool):
        out = []
        for _ in range(rng.randint(1, 6)):
            e = tuple(rng.randint(0, 5) for _ in range(d))
            if any(e) or allow_one:
                out.append(e)
        return out or [tuple(1 if i == 0 else 0 for i in range(d))]

    return MonomialIdeal.from_exponents(ctx, gens(False)), MonomialIdeal.from_exponents(ctx, gens(True))


def degree_bound(I: MonomialIdeal, J: MonomialIdeal) -> int:
    def top(K):
        return max((sum(g) for g in K.gens), default=0)

    return top(I) + top(J) + 2


def _same_staircase(engine: MonomialIdeal, grid: np.ndarray, D: int, what: str) -> None:
    got = sc.grid_to_exponents(sc.grid_of(engine, D), D)
    want = sc.grid_to_exponents(grid, D)
    if got != want:
        extra = sorted(got - want)[:3]
        missing = sorted(want - got)[:3]
        raise AssertionError(f"{what}: staircase mismatch, extra {extra}, missing {missing}")


# -- monomial core -----------------------------------------------------------


def check_canonical(I, J, rng):
    ctx = I.ctx
    vecs = list(I.gens) + [tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens]
    rng.shuffle(vecs)
    again = minimalize(ctx, vecs)
    assert again == I, "minimalize is not order-independent / absorbing"
    assert minimalize(ctx, again.gens) == again, "minimalize is not idempotent"


def check_sum(I, J, rng):
    D = degree_bound(I, J)
    _same_staircase(ideal_sum(I, J), sc.grid_of(I, D) | sc.grid_of(J, D), D, "sum")


def check_product(I, J, rng):
    D = degree_bound(I, J)
    _same_staircase(product(I, J), sc.minkowski(sc.grid_of(I, D), sc.grid_of(J, D)), D, "product")


def check_power(I, J, rng):
    k = rng.randint(0, 3)
    D = degree_bound(I, J)
    _same_staircase(power(I, k), sc.power_grid(I, k, D), D, f"power k={k}")


def check_intersect(I, J, rng):
    D = degree_bound(I, J)
    _same_staircase(intersect(I, J), sc.grid_of(I, D) & sc.grid_of(J, D), D, "intersect")


def check_colon(I, J, rng):
    D = degree_bound(I, J)
    _same_staircase(colon(I, J), sc.colon_grid(I, J, D), D, "colon")


def check_saturate(I, J, rng):
    D = degree_bound(I, J)
    sat, l = saturate(I, J)
    _same_staircase(sat, sc.saturation_grid(I, J, D), D, "saturate")
    chain = I
    for _ in range(l):
        chain = colon(chain, J)
    assert chain == sat, "(I : J^l) differs from the saturation at l = stab_index"
    assert colon(sat, J) == sat, "chain did not stabilize"
    if l > 0:
        assert colon(I, power(J, l - 1)) != sat, "stab_index is not the least index"
    assert saturate(sat, J) == (sat, 0), "saturation is not idempotent"


def check_radical(I, J, rng):
    D = degree_bound(I, J)
    _same_staircase(radical(I), sc.radical_grid(I, D), D, "radical")


def check_laws(I, J, rng):
    ctx = I.ctx
    K = MonomialIdeal.from_exponents(ctx, [tuple(rng.randint(0, 3) for _ in range(ctx.dim))])
    assert ideal_sum(I, J) == ideal_sum(J, I)
    assert intersect(I, J) == intersect(J, I)
    assert ideal_sum(ideal_sum(I, J), K) == ideal_sum(I, ideal_sum(J, K))
    assert intersect(intersect(I, J), K) == intersect(I, intersect(J, K))
    assert ideal_sum(I, I) == I and intersect(I, I) == I
    meet, join = intersect(I, J), ideal_sum(I, J)
    assert ideal_leq(meet, I) and ideal_leq(I, join)
    assert ideal_eq(I, J) == (ideal_leq(I, J) and ideal_leq(J, I))
    assert ideal_leq(I, colon(I, J)), "(I : J) must contain I"
    assert colon(colon(I, J), K) == colon(I, product(J, K)), "((I:J):K) != (I:JK)"


# -- decomposition -----------------------------------------------------------


def check_decomposition(I, J, rng):
    dec = primary_decomposition(I)
    ctx = I.ctx
    comps = [c.component for c in dec.components]
    assert intersect_all(comps, ctx) == I, "components do not intersect to I"
    D = degree_bound(I, J)
    grid = np.ones((D + 1,) * ctx.dim, dtype=bool)
    for Q in comps:
        grid &= sc.grid_of(Q, D)
    _same_staircase(I, grid, D, "decomposition intersection")
    for c in dec.components:
        assert is_primary(c.component) == c.prime, f"{c.component} is not {c.prime}-primary"
    assert set(dec.primes) == set(associated_primes(I)), "primes differ from Ass"
    assert len(set(dec.primes)) == len(dec.primes), "primes repeat"
    for i in range(len(comps)):
        rest = intersect_all([Q for j, Q in enumerate(comps) if j != i], ctx)
        assert rest != I, "decomposition is redundant"
    # Ass does not depend on presentation or splitting order
    order = list(range(ctx.dim))
    rng.shuffle(order)
    assert associated_primes(I) == frozenset(
        radical(Q) for Q in irreducible_decomposition(I, order, reverse_gens=True)
    )


def check_h0_components(I, J, rng):
    assert h0_via_components(I, J) == saturate(I, J)[0], "components formula != saturation"


def alternative_components(I: MonomialIdeal, rng: random.Random) -> dict:
    """Candidate per-prime components from several independent constructions."""
    ctx = I.ctx
    order = list(range(ctx.dim))
    rng.shuffle(order)
    a = primary_decomposition(I)
    b = primary_decomposition(I, order, reverse_gens=True)
    big = sum(I.max_exponents()) + 1
    options: dict = {}
    for P in associated_primes(I):
        opts = [a.component_for(P), b.component_for(P)]
        for k in (big, big + rng.randint(1, 3)):
            opts.append(localized_component(I, P, k))
        options[P] = opts
    if not I.is_zero():
        k = max(k_min(I, P) for P in options)
        for c in bounded_decomposition(I, k).components:
            options[c.prime].append(c.component)
    return options


def check_compatibility(I, J, rng):
    options = alternative_components(I, rng)
    for _ in range(3):
        picks = {P: rng.choice(opts) for P, opts in options.items()}
        dec = assemble(I, picks)
        assert dec.irredundant and dec.minimal
    for P in minimal_primes(options):
        assert len(set(options[P])) == 1, f"minimal component for {P} is not unique"


def check_certificate(I, J, rng):
    if I.is_zero():
        return
    ks = {P: k_min(I, P) for P in associated_primes(I)}
    k = max(ks.values())
    cert = bounded_decomposition(I, k)
    assert cert.checks.all_ok, f"certificate flags {cert.checks}"
    for P, kp in ks.items():
        if kp > 1:
            assert not artin_rees_holds(I, P, kp - 1), "k_min is not minimal"
        for m in range(kp, kp + 4):
            assert artin_rees_holds(I, P, m), "identity not monotone in k"


SUITES: dict[str, Callable] = {
    "core.canonical": check_canonical,
    "core.sum": check_sum,
    "core.product": check_product,
    "core.power": check_power,
    "core.intersect": check_intersect,
    "core.colon": check_colon,
    "core.saturate": check_saturate,
    "core.radical": check_radical,
    "core.laws": check_laws,
    "decomp.primary": check_decomposition,
    "decomp.compatibility": check_compatibility,
    "theorem.h0_components": check_h0_components,
    "theorem.certificate": check_certificate,
}


@dataclass
class Failure:
    suite: str
    message: str
    I: MonomialIdeal
    J: MonomialIdeal

    def as_dict(self) -> dict:
        return {
            "kind": "oracle_failure",
            "suite": self.suite,
            "message": self.message,
            "I": ideal_to_json(self.I),
            "J": ideal_to_json(self.J),
        }


@dataclass
class Summary:
    seed: int
    cases: int
    passed: dict = field(default_factory=dict)
    failed: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"oracle-check seed={self.seed} cases={self.cases}"]
        for name in SUITES:
            out.append(f"{name}: passed={self.passed.get(name, 0)} failed={self.failed.get(name, 0)}")
        out.append(
            f"total: passed={sum(self.passed.values())} failed={sum(self.failed.values())}"
        )
        return out


def _fails(check, I, J, seed) -> str | None:
    try:
        check(I, J, random.Random(seed))
    except Exception as exc:  # any exception is a failing case
        return f"{type(exc).__name__}: {exc}"
    return None


def shrink(check, I: MonomialIdeal, J: MonomialIdeal, seed) -> tuple[MonomialIdeal, MonomialIdeal, str]:
    """Greedy minimization of a failing (I, J)."""
    msg = _fails(check, I, J, seed)
    ctx = I.ctx
    improved = True
    while improved:
        improved = False
        for which in (0, 1):
            K = (I, J)[which]
            gens = list(K.gens)
            candidates = [gens[:i] + gens[i + 1:] for i in range(len(gens)) if len(gens) > 1]
            for i, g in enumerate(gens):
                for v in range(ctx.dim):
                    if g[v] > 0:
                        h = list(g)
                        h[v] -= 1
                        candidates.append(gens[:i] + [tuple(h)] + gens[i + 1:])
            for cand in candidates:
                if which == 0 and all(not any(g) for g in cand):
                    continue
                K2 = MonomialIdeal.from_exponents(ctx, cand)
                pair = (K2, J) if which == 0 else (I, K2)
                m = _fails(check, pair[0], pair[1], seed)
                if m is not None:
                    I, J, msg = pair[0], pair[1], m
                    improved = True
                    break
            if improved:
                break
    return I, J, msg


def run_suites(seed: int, cases: int, suites: dict | None = None) -> Summary:
    if cases < 1:
        raise ValueError("cases must be >= 1")
    suites = SUITES if suites is None else suites
    rng = random.Random(seed)
    summary = Summary(seed, cases)
    for i in range(cases):
        I, J = random_case(rng)
        for name, check in suites.items():
            sub_seed = f"{seed}:{i}:{name}"
            msg = _fails(check, I, J, sub_seed)
            if msg is None:
                summary.passed[name] = summary.passed.get(name, 0) + 1
                continue
            summary.failed[name] = summary.failed.get(name, 0) + 1
            sI, sJ, smsg = shrink(check, I, J, sub_seed)
            summary.failures.append(Failure(name, smsg or msg, sI, sJ))
    return summary


__all__ = ["SUITES", "Summary", "random_case", "run_suites", "shrink", "degree_bound", "prime_key"]
