"""Pure-Python exponent-vector kernels.

Exponent vectors are plain tuples of non-negative ints.  Every function here
has a twin in ``_ckernels.pyx`` with an identical signature; :mod:`upd.kernels`
picks one at import time.
"""

from __future__ import annotations


def canon_key(e):
    # total degree first, then lex with the first variable largest
    return (sum(e), tuple(-a for a in e))


def divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def divides_any(gens, m):
    for g in gens:
        for x, y in zip(g, m):
            if x > y:
                break
        else:
            return True
    return False


def minimalize(gens):
    """Canonical minimal generating set, sorted by :func:`canon_key`."""
    kept = []
    for g in sorted(set(gens), key=canon_key):
        # a proper divisor has strictly smaller degree, so it is already kept
        if not divides_any(kept, g):
            kept.append(g)
    return tuple(kept)


def pairwise_mul(A, B):
    return [tuple(x + y for x, y in zip(a, b)) for a in A for b in B]


def pairwise_lcm(A, B):
    return [tuple(x if x > y else y for x, y in zip(a, b)) for a in A for b in B]


def colon_monomial(gens, g):
    return [tuple(x - y if x > y else 0 for x, y in zip(h, g)) for h in gens]
