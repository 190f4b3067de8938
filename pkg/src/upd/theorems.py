"""Uniform bounds for families of monomial ideals, as executable checks.

Ideal-side dictionary for a component L_n = A/I(n):

* the zero submodule O_n is I(n) itself;
* H_J^0(L_n) corresponds to the saturation (I(n) : J^∞);
* P^k L_n + O_n corresponds to P^k + I(n);
* (0 :_{L_n} J^l) corresponds to (I(n) : J^l).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .decomposition import (
    PrimaryComponent,
    assemble,
    associated_primes,
    check_irredundant,
    is_primary,
    prime_key,
    primary_decomposition,
)
from .errors import (
    AssemblyError,
    CapExceeded,
    KTooSmall,
    UnitIdealError,
    ZeroIdealError,
)
from .family import Box, FamilySpec, ass_union, iterate
from .monomial import (
    MonomialIdeal,
    colon,
    ideal_leq,
    ideal_sum,
    intersect,
    intersect_all,
    power,
    product,
    saturate,
)

EMPTY_ROW = "L_n = 0"


def h0(I_n: MonomialIdeal, J: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """Saturation (I_n : J^∞) and the index where the colon chain stalls."""
    if J.is_zero():
        raise ZeroIdealError("H^0 with respect to the zero ideal")
    return saturate(I_n, J)


def default_cap(I_n: MonomialIdeal) -> int:
    """4 + sum over variables of the largest exponent appearing in I_n."""
    return 4 + sum(I_n.max_exponents())


def artin_rees_holds(I_n: MonomialIdeal, P: MonomialIdeal, k: int, sat: MonomialIdeal | None = None) -> bool:
    """(P^k + I_n) ∩ (I_n : P^∞) == I_n."""
    if sat is None:
        sat = h0(I_n, P)[0]
    return intersect(ideal_sum(power(P, k), I_n), sat) == I_n


def _search(pred: Callable[[int, MonomialIdeal], bool], P: MonomialIdeal, cap: int, what: str) -> int:
    Pk = P
    for k in range(1, cap + 1):
        if pred(k, Pk):
            return k
        Pk = product(Pk, P)
    raise CapExceeded(what, cap, prime=P.render())


def k_min(I_n: MonomialIdeal, P: MonomialIdeal, cap: int | None = None) -> int:
    """Least k >= 1 with (P^k + I_n) ∩ (I_n : P^∞) = I_n.

    The left side shrinks as k grows, so an upward scan finds the threshold.
    """
    if P.is_zero():
        # P = (0) only arises for I_n = (0), where every intersection is (0)
        return 1
    cap = default_cap(I_n) if cap is None else cap
    sat = h0(I_n, P)[0]
    return _search(
        lambda k, Pk: intersect(ideal_sum(Pk, I_n), sat) == I_n, P, cap, "k_min"
    )


def minimal_s(I_n: MonomialIdeal, Q: MonomialIdeal, P: MonomialIdeal, cap: int | None = None) -> int:
    """Least s >= 1 with P^s + I_n ⊆ Q."""
    if not ideal_leq(I_n, Q):
        raise ValueError(f"{Q.render()} does not contain {I_n.render()}")
    if P.is_zero():
        return 1
    cap = default_cap(Q) if cap is None else cap
    return _search(lambda s, Ps: ideal_leq(Ps, Q), P, cap, "minimal_s")


# ---------------------------------------------------------------------------
# scans


@dataclass(frozen=True)
class PrimeEntry:
    prime: MonomialIdeal
    k_min: int
    l: int

    def as_dict(self) -> dict:
        return {"prime": self.prime.rendered_gens(), "k_min": self.k_min, "l": self.l}


@dataclass(frozen=True)
class ScanRow:
    n: tuple[int, ...]
    ideal: MonomialIdeal
    status: str
    primes: tuple[PrimeEntry, ...]
    k_min: int | None

    def as_dict(self) -> dict:
        return {
            "n": list(self.n),
            "ideal": self.ideal.rendered_gens(),
            "status": self.status,
            "k_min": self.k_min,
            "primes": [p.as_dict() for p in self.primes],
        }


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[ScanRow, ...]
    uniform_k: int | None
    stabilized: bool
    guarantee: str
    window: int

    def aggregate(self) -> dict:
        return {
            "aggregate": True,
            "uniform_k": self.uniform_k,
            "stabilized": self.stabilized,
            "guarantee": self.guarantee,
            "window": self.window,
            "points": len(self.rows),
        }


def scan_point(I_n: MonomialIdeal, n: Sequence[int], cap: int | None = None) -> ScanRow:
    n = tuple(n)
    if I_n.is_unit():
        return ScanRow(n, I_n, EMPTY_ROW, (), None)
    entries = []
    for P in sorted(associated_primes(I_n), key=prime_key):
        if P.is_zero():
            entries.append(PrimeEntry(P, 1, 0))
            continue
        try:
            k = k_min(I_n, P, cap)
        except CapExceeded as exc:
            exc.n = n
            raise
        entries.append(PrimeEntry(P, k, h0(I_n, P)[1]))
    return ScanRow(n, I_n, "ok", tuple(entries), max(e.k_min for e in entries))


def stabilization_window(box: Box) -> tuple[int, ...]:
    return tuple(max(5, w // 4) for w in box.widths())


def trailing_constant(box: Box, values: dict) -> bool:
    """True when ``values`` is constant on the trailing corner of the box.

    The corner takes the last W_j points of each range, W_j = max(5, width_j/4).
    A range narrower than its window leaves too little evidence: False.
    Points without a value (L_n = 0) are ignored.
    """
    windows = stabilization_window(box)
    if any(w > width for w, width in zip(windows, box.widths())):
        return False
    corner = Box(tuple((hi - w + 1, hi) for (lo, hi), w in zip(box.ranges, windows)))
    seen = {values[n] for n in corner.points() if values.get(n) is not None}
    return len(seen) == 1


def scan_uniform_k(
    spec: FamilySpec,
    box: Box,
    cap: int | None = None,
    mapper: Callable = map,
) -> ScanReport:
    """Per-n k_min over a box, with uniform_k = max and a stabilization flag.

    ``mapper`` lets callers evaluate points in parallel; it must preserve order.
    """
    pts = list(iterate(spec, box))
    rows = tuple(mapper(_scan_job, [(I, n, cap) for n, I in pts]))
    ks = [r.k_min for r in rows if r.k_min is not None]
    uniform = max(ks) if ks else None
    stabilized = trailing_constant(box, {r.n: r.k_min for r in rows})
    return ScanReport(rows, uniform, stabilized, spec.mode.guarantee, max(stabilization_window(box)))


def _scan_job(args):
    I, n, cap = args
    return scan_point(I, n, cap)


# ---------------------------------------------------------------------------
# bounded decompositions


@dataclass(frozen=True)
class CertificateChecks:
    intersection_ok: bool
    power_containment_ok: bool
    irredundant_ok: bool
    minimal_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.intersection_ok and self.power_containment_ok and self.irredundant_ok and self.minimal_ok

    def as_dict(self) -> dict:
        return {
            "intersection_ok": self.intersection_ok,
            "power_containment_ok": self.power_containment_ok,
            "irredundant_ok": self.irredundant_ok,
            "minimal_ok": self.minimal_ok,
        }


@dataclass(frozen=True)
class BoundedCertificate:
    n: tuple[int, ...] | None
    ideal: MonomialIdeal
    k: int
    components: tuple[PrimaryComponent, ...]
    checks: CertificateChecks

    def as_dict(self) -> dict:
        return {
            "n": None if self.n is None else list(self.n),
            "ideal": self.ideal.rendered_gens(),
            "k": self.k,
            "components": [c.as_dict() for c in self.components],
            "checks": self.checks.as_dict(),
        }


def verify_certificate(ideal: MonomialIdeal, k: int, components: Iterable[PrimaryComponent]) -> CertificateChecks:
    """Recompute all four certificate flags from scratch."""
    comps = list(components)
    ctx = ideal.ctx
    Qs = [c.component for c in comps]
    intersection_ok = bool(comps) and intersect_all(Qs, ctx) == ideal
    power_ok = all(
        ideal_leq(ideal_sum(power(c.prime, k), ideal), c.component) for c in comps
    )
    primes = [c.prime for c in comps]
    minimal_ok = len(set(primes)) == len(primes) and all(
        not c.component.is_unit() and is_primary(c.component) == c.prime for c in comps
    )
    irredundant_ok = check_irredundant(ideal, Qs)
    return CertificateChecks(intersection_ok, power_ok, irredundant_ok, minimal_ok)


def bounded_decomposition(I_n: MonomialIdeal, k: int, n: Sequence[int] | None = None) -> BoundedCertificate:
    """Primary decomposition of I_n whose P-components all contain P^k + I_n.

    For each P in Ass(A/I_n):

    * if (I_n : P^∞) is the unit ideal then P^k + I_n must already equal I_n,
      and the standard P-component is used;
    * otherwise the P-primary component of P^k + I_n is used.

    The picks are assembled and checked; failure means k is below the bound.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if I_n.is_unit():
        raise UnitIdealError("L_n = 0: there is nothing to decompose")
    n = None if n is None else tuple(n)
    if I_n.is_zero():
        comps = (PrimaryComponent(I_n, I_n),)
        return BoundedCertificate(n, I_n, k, comps, verify_certificate(I_n, k, comps))

    standard = None
    picks: dict[MonomialIdeal, MonomialIdeal] = {}
    for P in sorted(associated_primes(I_n), key=prime_key):
        sat, _ = h0(I_n, P)
        Pk = ideal_sum(power(P, k), I_n)
        if sat.is_unit():
            if Pk != I_n:
                raise KTooSmall(k, f"H_P^0 is everything but P^k + I != I for P={P.render()}", P.render(), n)
            if standard is None:
                standard = primary_decomposition(I_n)
            picks[P] = standard.component_for(P)
        else:
            Q = primary_decomposition(Pk).component_for(P)
            if Q is None:
                raise KTooSmall(k, f"P^k + I has no {P.render()}-primary component", P.render(), n)
            picks[P] = Q
    try:
        decomp = assemble(I_n, picks)
    except AssemblyError as exc:
        raise KTooSmall(k, f"assembly failed: {exc}", None, n) from None
    checks = verify_certificate(I_n, k, decomp.components)
    if not checks.power_containment_ok:
        raise KTooSmall(k, "some component misses P^k", None, n)
    return BoundedCertificate(n, I_n, k, decomp.components, checks)


def certify_family(spec: FamilySpec, box: Box, k: int, mapper: Callable = map) -> list:
    """One entry per point: a certificate, ``EMPTY_ROW``, or the KTooSmall raised."""
    return list(mapper(_certify_job, [(I, n, k) for n, I in iterate(spec, box)]))


def _certify_job(args):
    I, n, k = args
    if I.is_unit():
        return (n, I, EMPTY_ROW)
    try:
        return (n, I, bounded_decomposition(I, k, n))
    except KTooSmall as exc:
        return (n, I, exc)


# ---------------------------------------------------------------------------
# H^0 uniformity


def h0_via_components(I_n: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the primary components whose prime does not contain J."""
    if I_n.is_unit():
        raise UnitIdealError("L_n = 0")
    if J.is_zero():
        raise ZeroIdealError("H^0 with respect to the zero ideal")
    decomp = primary_decomposition(I_n)
    keep = [c.component for c in decomp.components if not ideal_leq(J, c.prime)]
    return intersect_all(keep, I_n.ctx)


def artin_rees_index(I_n: MonomialIdeal, J: MonomialIdeal, sat: MonomialIdeal, cap: int) -> int:
    """Least l >= 0 with (J^l + I_n) ∩ sat = I_n."""
    Jl = I_n.ctx.unit_ideal()
    for l in range(cap + 1):
        if intersect(ideal_sum(Jl, I_n), sat) == I_n:
            return l
        Jl = product(Jl, J)
    raise CapExceeded("Artin-Rees index", cap, prime=J.render())


@dataclass(frozen=True)
class H0Row:
    n: tuple[int, ...]
    ideal: MonomialIdeal
    J: MonomialIdeal
    sat: MonomialIdeal | None
    l: int | None
    ar_index: int | None
    colon_ok: bool | None = None
    intersection_ok: bool | None = None
    components_ok: bool | None = None

    @property
    def empty(self) -> bool:
        return self.sat is None

    def as_dict(self) -> dict:
        if self.empty:
            return {"n": list(self.n), "J": self.J.rendered_gens(), "status": EMPTY_ROW}
        return {
            "n": list(self.n),
            "J": self.J.rendered_gens(),
            "ideal": self.ideal.rendered_gens(),
            "l": self.l,
            "sat": self.sat.rendered_gens(),
            "colon": "ok" if self.colon_ok else "FAIL",
            "intersection_at_l_uniform": "ok" if self.intersection_ok else "FAIL",
            "ar_index": self.ar_index,
            "components": "ok" if self.components_ok else "FAIL",
        }


@dataclass(frozen=True)
class H0Report:
    rows: tuple[H0Row, ...]
    l_uniform: int
    ar_uniform: int

    @property
    def colon_ok(self) -> bool:
        return all(r.colon_ok for r in self.rows if not r.empty)

    @property
    def intersection_ok(self) -> bool:
        return all(r.intersection_ok for r in self.rows if not r.empty)

    @property
    def components_ok(self) -> bool:
        return all(r.components_ok for r in self.rows if not r.empty)

    def aggregate(self) -> dict:
        return {
            "aggregate": True,
            "l_uniform": self.l_uniform,
            "ar_uniform": self.ar_uniform,
            "colon": "ok" if self.colon_ok else "FAIL",
            "intersection_at_l_uniform": "ok" if self.intersection_ok else "FAIL",
            "components": "ok" if self.components_ok else "FAIL",
            "rows": len(self.rows),
        }


def _h0_job(args):
    n, I, J, cap = args
    if I.is_unit():
        return H0Row(n, I, J, None, None, None)
    sat, l = h0(I, J)
    c = default_cap(I) if cap is None else cap
    ar = artin_rees_index(I, J, sat, c)
    comps_ok = h0_via_components(I, J) == sat
    return H0Row(n, I, J, sat, l, ar, components_ok=comps_ok)


def verify_h0_uniform(
    spec: FamilySpec,
    box: Box,
    test_ideals: Sequence[MonomialIdeal],
    cap: int | None = None,
    mapper: Callable = map,
) -> H0Report:
    """Check H_J^0(L_n) = (0 :_{L_n} J^l) with one l for every (n, J).

    ``l_uniform`` is the largest stabilization index seen.  Each row then
    re-checks (I(n) : J^l_uniform) = sat and the intersection form
    (J^l_uniform + I(n)) ∩ sat = I(n).  The second identity can need a larger
    exponent than the first, so ``ar_uniform`` records the least exponent that
    makes it hold everywhere.
    """
    for J in test_ideals:
        if J.is_zero():
            raise ZeroIdealError("test ideals must be non-zero")
    jobs = [(n, I, J, cap) for n, I in iterate(spec, box) for J in test_ideals]
    raw = list(mapper(_h0_job, jobs))
    live = [r for r in raw if not r.empty]
    l_uniform = max((r.l for r in live), default=0)
    ar_uniform = max((r.ar_index for r in live), default=0)
    rows = []
    for r in raw:
        if r.empty:
            rows.append(r)
            continue
        Jl = power(r.J, l_uniform)
        colon_ok = colon(r.ideal, Jl) == r.sat
        intersection_ok = intersect(ideal_sum(Jl, r.ideal), r.sat) == r.ideal
        rows.append(
            H0Row(r.n, r.ideal, r.J, r.sat, r.l, r.ar_index, colon_ok, intersection_ok, r.components_ok)
        )
    return H0Report(tuple(rows), l_uniform, ar_uniform)


def artin_rees_consequence(spec: FamilySpec, box: Box, k: int, window: int) -> bool:
    """(P^m + I(n)) ∩ (I(n) : P^∞) = I(n) for all n, P in the Ass union, m in [k, k+W]."""
    return artin_rees_witness(spec, box, k, window) is None


def artin_rees_witness(spec: FamilySpec, box: Box, k: int, window: int):
    """First (n, P, m) violating the identity, or None."""
    if k < 1 or window < 1:
        raise ValueError("k and the window must be positive")
    primes = sorted(ass_union(spec, box)[0], key=prime_key)
    for n, I in iterate(spec, box):
        if I.is_unit():
            continue
        for P in primes:
            if P.is_zero():
                continue
            sat = h0(I, P)[0]
            for m in range(k, k + window + 1):
                if not artin_rees_holds(I, P, m, sat):
                    return n, P, m
    return None


# ---------------------------------------------------------------------------
# battery for H^0 checks


def squarefree_primes(ctx) -> list[MonomialIdeal]:
    out = []
    for r in range(1, ctx.dim + 1):
        for names in combinations(ctx.var_names, r):
            out.append(ctx.prime(names))
    return out


def random_ideal(ctx, rng, max_gens: int = 4, max_exp: int = 3) -> MonomialIdeal:
    """A random non-zero, non-unit monomial ideal."""
    while True:
        gens = [
            tuple(rng.randint(0, max_exp) for _ in range(ctx.dim))
            for _ in range(rng.randint(1, max_gens))
        ]
        gens = [g for g in gens if any(g)]
        if gens:
            return MonomialIdeal.from_exponents(ctx, gens)


def battery(ctx, rng, n_random: int = 25) -> list[MonomialIdeal]:
    return squarefree_primes(ctx) + [random_ideal(ctx, rng) for _ in range(n_random)]


__all__ = [
    "EMPTY_ROW",
    "BoundedCertificate",
    "CertificateChecks",
    "H0Report",
    "H0Row",
    "PrimeEntry",
    "ScanReport",
    "ScanRow",
    "artin_rees_consequence",
    "artin_rees_holds",
    "artin_rees_index",
    "artin_rees_witness",
    "battery",
    "bounded_decomposition",
    "certify_family",
    "default_cap",
    "h0",
    "h0_via_components",
    "k_min",
    "minimal_s",
    "random_ideal",
    "scan_point",
    "scan_uniform_k",
    "squarefree_primes",
    "stabilization_window",
    "trailing_constant",
    "verify_certificate",
    "verify_h0_uniform",
]
