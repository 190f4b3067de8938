import random

import pytest
from conftest import XY, I, ideals
from hypothesis import given, settings

from upd import (
    IntersectionMismatch,
    NotPrimary,
    UnitIdealError,
    assemble,
    associated_primes,
    irreducible_decomposition,
    is_primary,
    primary_decomposition,
)
from upd import oracle as sc
from upd.decomposition import localized_component, minimal_primes
from upd.monomial import intersect_all, radical

P_x = XY.prime(["x"])
P_xy = XY.prime(["x", "y"])


def pairs(dec):
    return [(c.prime, c.component) for c in dec.components]


class TestIrreducible:
    def test_split_xy(self):
        got = irreducible_decomposition(I("x^2", "x*y"))
        assert got == [I("x"), I("x^2", "y")]
        grid = sc.grid_of(got[0], 6) & sc.grid_of(got[1], 6)
        assert sc.grid_to_exponents(grid, 6) == sc.grid_to_exponents(sc.grid_of(I("x^2", "x*y"), 6), 6)

    @pytest.mark.parametrize("n", [1, 2, 7])
    def test_with_y_power(self, n):
        J = I("x^2", "x*y", f"y^{n + 1}")
        got = irreducible_decomposition(J)
        assert got == [I("x", f"y^{n + 1}"), I("x^2", "y")]
        assert intersect_all(got, XY) == J

    def test_already_irreducible(self):
        assert irreducible_decomposition(I("x")) == [I("x")]

    def test_zero_and_unit(self):
        assert irreducible_decomposition(XY.zero_ideal()) == [XY.zero_ideal()]
        with pytest.raises(UnitIdealError):
            irreducible_decomposition(XY.unit_ideal())

    @given(ideals(allow_unit=False))
    def test_unique_under_pivot_order(self, J):
        a = set(irreducible_decomposition(J))
        order = list(range(J.ctx.dim))[::-1]
        assert a == set(irreducible_decomposition(J, order, reverse_gens=True))
        assert intersect_all(a, J.ctx) == J


class TestAss:
    def test_example_primes(self):
        assert associated_primes(I("x^2", "x*y")) == {P_x, P_xy}
        assert associated_primes(I("x^2", "x*y", "y^4")) == {P_xy}
        assert associated_primes(I("x")) == {P_x}

    def test_zero(self):
        assert associated_primes(XY.zero_ideal()) == {XY.zero_ideal()}

    @given(ideals(allow_unit=False))
    def test_permutation_invariant(self, J):
        gens = list(J.gens)
        random.Random(1).shuffle(gens)
        assert associated_primes(J.ctx.ideal(*gens)) == associated_primes(J)


class TestPrimaryDecomposition:
    def test_two_components(self):
        dec = primary_decomposition(I("x^2", "x*y"))
        assert pairs(dec) == [(P_x, I("x")), (P_xy, I("x^2", "y"))]
        assert dec.irredundant and dec.minimal

    def test_single_component(self):
        J = I("x^2", "x*y", "y^2")
        assert pairs(primary_decomposition(J)) == [(P_xy, J)]

    def test_prime(self):
        assert pairs(primary_decomposition(I("x"))) == [(P_x, I("x"))]

    def test_zero_convention(self):
        Z = XY.zero_ideal()
        assert pairs(primary_decomposition(Z)) == [(Z, Z)]

    @settings(max_examples=60, deadline=None)
    @given(ideals(allow_unit=False))
    def test_properties(self, J):
        dec = primary_decomposition(J)
        comps = [c.component for c in dec.components]
        assert intersect_all(comps, J.ctx) == J
        assert set(dec.primes) == set(associated_primes(J))
        for c in dec.components:
            assert is_primary(c.component) == c.prime
            assert radical(c.component) == c.prime


class TestIsPrimary:
    @pytest.mark.parametrize("n", range(0, 6))
    def test_example_component(self, n):
        assert is_primary(I("x^2", "x*y", f"y^{n + 1}")) == P_xy

    def test_not_primary(self):
        assert is_primary(I("x^2", "x*y")) is None
        assert is_primary(I("x")) == P_x


class TestAssemble:
    def test_paper_decomposition(self):
        dec = assemble(I("x^2", "x*y"), {P_x: I("x"), P_xy: I("x^2", "x*y", "y^3")})
        assert dec.irredundant and dec.minimal

    def test_bounded_component(self):
        assemble(I("x^2", "x*y"), {P_x: I("x"), P_xy: I("x^2", "x*y", "y^2")})

    def test_trivial(self):
        assemble(I("x"), {P_x: I("x")})

    def test_missing_prime(self):
        with pytest.raises(IntersectionMismatch):
            assemble(I("x^2", "x*y"), {P_x: I("x")})

    def test_not_primary(self):
        with pytest.raises(NotPrimary):
            assemble(I("x^2", "x*y"), {P_x: I("x"), P_xy: I("x^2", "x*y")})

    def test_wrong_component(self):
        # (x^2) is (x)-primary but too small: it is not a component of (x^2, xy)
        with pytest.raises(IntersectionMismatch):
            assemble(I("x^2", "x*y"), {P_x: I("x^2"), P_xy: I("x^2", "y")})

    @settings(max_examples=80, deadline=None)
    @given(ideals(allow_unit=False), ideals(d=1))
    def test_compatibility_mix(self, J, seed_src):
        rng = random.Random(repr(seed_src))
        big = sum(J.max_exponents()) + 1
        a = primary_decomposition(J)
        b = primary_decomposition(J, list(range(J.ctx.dim))[::-1], reverse_gens=True)
        options = {
            P: [a.component_for(P), b.component_for(P), localized_component(J, P, big + rng.randint(0, 3))]
            for P in associated_primes(J)
        }
        picks = {P: rng.choice(v) for P, v in options.items()}
        dec = assemble(J, picks)
        assert dec.irredundant and dec.minimal
        for P in minimal_primes(options):
            assert len(set(options[P])) == 1
