"""Brute-force staircase oracle.

Everything here decides membership by enumerating monomials and testing
divisibility against generators directly.  None of it calls the ideal
arithmetic in :mod:`upd.monomial`, so it can serve as ground truth for it.

The ``*_grid`` helpers hold the same data as dense boolean arrays indexed by
exponent vector (shape ``(B+1,)*d``), which makes the set-level operations
fast enough for randomized suites with hundreds of cases.
"""

from __future__ import annotations

from itertools import product as cartesian

import numpy as np
from scipy.signal import fftconvolve

from .monomial import Monomial, MonomialIdeal


def _in_ideal(gens, m) -> bool:
    for g in gens:
        if all(a <= b for a, b in zip(g, m)):
            return True
    return False


def monomials_up_to(d: int, D: int):
    """All exponent vectors in d variables with total degree <= D."""
    for e in cartesian(range(D + 1), repeat=d):
        if sum(e) <= D:
            yield e


def staircase(I: MonomialIdeal, D: int) -> frozenset[Monomial]:
    """The monomials of total degree <= D lying in I."""
    if D < 0:
        raise ValueError("degree bound must be non-negative")
    return frozenset(
        Monomial(I.ctx, e) for e in monomials_up_to(I.ctx.dim, D) if _in_ideal(I.gens, e)
    )


def degree_mask(d: int, B: int) -> np.ndarray:
    """Boolean box of side B+1 marking cells of total degree <= B."""
    idx = np.indices((B + 1,) * d).sum(axis=0)
    return idx <= B


def membership_grid(gens, d: int, B: int) -> np.ndarray:
    """Cells of the box [0, B]^d lying in the ideal generated by ``gens``."""
    grid = np.zeros((B + 1,) * d, dtype=bool)
    for g in gens:
        if all(a <= B for a in g):
            grid[tuple(slice(a, None) for a in g)] = True
    return grid


def grid_of(I: MonomialIdeal, B: int) -> np.ndarray:
    return membership_grid(I.gens, I.ctx.dim, B)


def grid_to_exponents(grid: np.ndarray, D: int) -> frozenset[tuple[int, ...]]:
    mask = grid & degree_mask(grid.ndim, grid.shape[0] - 1)
    return frozenset(
        tuple(int(a) for a in e) for e in np.argwhere(mask) if sum(int(a) for a in e) <= D
    )


def minkowski(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """{u + v : u in a, v in b}, cropped to the box of ``a``."""
    if not a.any() or not b.any():
        return np.zeros_like(a)
    conv = fftconvolve(a.astype(np.float64), b.astype(np.float64))
    crop = conv[tuple(slice(0, n) for n in a.shape)]
    return crop > 0.5


def power_grid(I: MonomialIdeal, k: int, B: int) -> np.ndarray:
    base = grid_of(I, B)
    result = np.ones_like(base)
    for _ in range(k):
        result = minkowski(result, base)
    return result


def colon_grid(I: MonomialIdeal, J: MonomialIdeal, B: int) -> np.ndarray:
    """{m in [0,B]^d : m*g in I for every generator g of J}."""
    d = I.ctx.dim
    shift = max((max(g) for g in J.gens), default=0)
    big = membership_grid(I.gens, d, B + shift)
    out = np.ones((B + 1,) * d, dtype=bool)
    for g in J.gens:
        out &= big[tuple(slice(a, a + B + 1) for a in g)]
    return out


def _shifted_region(gens, d: int, B: int, lower) -> np.ndarray:
    grid = np.zeros((B + 1,) * d, dtype=bool)
    for h in gens:
        lo = lower(h)
        if all(a <= B for a in lo):
            grid[tuple(slice(a, None) for a in lo)] = True
    return grid


def saturation_grid(I: MonomialIdeal, J: MonomialIdeal, B: int) -> np.ndarray:
    """{m : m*g^E in I for every generator g of J}, E the largest exponent of I.

    E is large enough: past it, raising the power of g cannot create new
    membership.  Uses (I : J^inf) = intersection of (I : g^inf) over generators.
    """
    d = I.ctx.dim
    E = max((max(h) for h in I.gens), default=0)
    E = max(E, 1)
    out = np.ones((B + 1,) * d, dtype=bool)
    for g in J.gens:
        out &= _shifted_region(
            I.gens, d, B, lambda h, g=g: tuple(max(a - E * b, 0) for a, b in zip(h, g))
        )
    return out


def radical_grid(I: MonomialIdeal, B: int) -> np.ndarray:
    """{m : m^E in I}, E the largest exponent appearing in I."""
    d = I.ctx.dim
    E = max(max((max(h) for h in I.gens), default=0), 1)
    return _shifted_region(I.gens, d, B, lambda h: tuple(-(-a // E) for a in h))
