import random

import pytest
from conftest import XY, I, ideal_pairs, ideals
from hypothesis import given, settings

from upd import (
    ContextMismatch,
    MonomialIdeal,
    RingContext,
    ZeroIdealError,
    colon,
    contains_monomial,
    ideal_eq,
    ideal_leq,
    ideal_sum,
    intersect,
    minimalize,
    power,
    product,
    radical,
    saturate,
    staircase,
)
from upd import oracle as sc


def stair(ideal, D):
    return {m.exponents for m in staircase(ideal, D)}


def oracle_set(grid, D):
    return set(sc.grid_to_exponents(grid, D))


class TestContext:
    def test_rejects_duplicates_and_empty(self):
        with pytest.raises(ValueError):
            RingContext(("x", "x"))
        with pytest.raises(ValueError):
            RingContext(())

    def test_rendering(self):
        assert XY.monomial(x=2, y=1).render() == "x^2*y"
        assert XY.monomial(x=0, y=1).render() == "y"
        assert XY.one().render() == "1"
        assert XY.parse_monomial("x^2*y").exponents == (2, 1)

    def test_big_exponents_stay_exact(self):
        big = 2**80
        J = I((big, 0), (1, 1))
        assert contains_monomial(J, (big + 1, 0))
        assert not contains_monomial(J, (big - 1, 0))
        assert J.rendered_gens() == ["x*y", f"x^{big}"]


class TestMinimalize:
    def test_drops_multiples(self):
        assert minimalize(XY, [(2, 0), (1, 1), (1, 2)]).gens == ((2, 0), (1, 1))

    def test_empty_is_zero(self):
        assert minimalize(XY, []).is_zero()

    def test_unit_absorbs(self):
        assert minimalize(XY, [(1, 0), (0, 1), (0, 0)]).is_unit()

    def test_dimension_mismatch(self):
        with pytest.raises(ContextMismatch):
            minimalize(XY, [(1, 0, 0)])

    def test_canonical_order(self):
        assert I("y^2", "x*y", "x^2").rendered_gens() == ["x^2", "x*y", "y^2"]

    @given(ideals())
    def test_idempotent_and_order_free(self, J):
        gens = list(J.gens)
        random.Random(0).shuffle(gens)
        assert minimalize(J.ctx, gens) == J
        assert minimalize(J.ctx, J.gens).gens == J.gens


class TestContains:
    def test_examples(self):
        assert contains_monomial(I("x^2", "x*y"), (1, 3))
        assert not contains_monomial(I("x^2", "x*y"), (0, 5))
        assert not contains_monomial(XY.zero_ideal(), (0, 0))


class TestLeq:
    def test_examples(self):
        assert ideal_leq(I("x^2", "x*y"), I("x"))
        assert not ideal_leq(I("x"), I("x^2", "x*y"))
        J = I("x^2", "x*y")
        assert ideal_leq(J, J)

    def test_not_contained_by_oracle(self):
        # x lies in (x) but not in (x^2, xy)
        assert (1, 0) in stair(I("x"), 2) - stair(I("x^2", "x*y"), 2)

    @given(ideal_pairs())
    def test_eq_iff_leq_both_ways(self, pair):
        a, b = pair
        assert ideal_eq(a, b) == (ideal_leq(a, b) and ideal_leq(b, a))


class TestArithmetic:
    def test_square_of_maximal(self):
        got = power(I("x", "y"), 2)
        assert got == I("x^2", "x*y", "y^2")
        base = sc.grid_of(I("x", "y"), 4)
        assert stair(got, 4) == oracle_set(sc.minkowski(base, base), 4)

    def test_sum_example(self):
        got = ideal_sum(power(I("x", "y"), 2), I("x^2", "x*y"))
        assert got == I("x^2", "x*y", "y^2")
        assert stair(got, 4) == stair(power(I("x", "y"), 2), 4) | stair(I("x^2", "x*y"), 4)

    def test_power_zero(self):
        assert power(I("x^2", "x*y"), 0).is_unit()
        assert power(XY.zero_ideal(), 0).is_unit()
        assert power(XY.zero_ideal(), 3).is_zero()

    @pytest.mark.parametrize("n", [0, 1, 5, 30])
    def test_intersect_example(self, n):
        assert intersect(I("x"), I("x^2", "x*y", f"y^{n + 1}")) == I("x^2", "x*y")

    def test_intersect_oracle(self):
        got = intersect(I("x"), I("x^2", "x*y", "y^2"))
        assert got == I("x^2", "x*y")
        assert stair(got, 5) == stair(I("x"), 5) & stair(I("x^2", "x*y", "y^2"), 5)
        J = I("x^2", "x*y")
        assert intersect(J, XY.unit_ideal()) == J

    def test_product_zero(self):
        assert product(I("x"), XY.zero_ideal()).is_zero()


class TestColon:
    def test_by_variable(self):
        got = colon(I("x^2", "x*y"), I("x"))
        assert got == I("x", "y")
        assert stair(got, 4) == oracle_set(sc.colon_grid(I("x^2", "x*y"), I("x"), 4), 4)

    def test_by_maximal(self):
        got = colon(I("x^2", "x*y"), I("x", "y"))
        assert got == I("x")
        assert stair(got, 4) == oracle_set(sc.colon_grid(I("x^2", "x*y"), I("x", "y"), 4), 4)

    def test_by_unit(self):
        J = I("x^2", "x*y")
        assert colon(J, XY.unit_ideal()) == J

    def test_by_zero_rejected(self):
        with pytest.raises(ZeroIdealError):
            colon(I("x"), XY.zero_ideal())

    def test_context_checked(self):
        other = RingContext(("a", "b"))
        with pytest.raises(ContextMismatch):
            colon(I("x"), other.ideal("a"))

    @settings(max_examples=60)
    @given(ideal_pairs(), ideals(d=None))
    def test_colon_laws(self, pair, _):
        a, b = pair
        assert ideal_leq(a, colon(a, b))
        assert colon(colon(a, b), b) == colon(a, product(b, b))


class TestSaturate:
    def test_by_maximal(self):
        assert saturate(I("x^2", "x*y"), I("x", "y")) == (I("x"), 1)

    def test_by_x(self):
        # chain: (x^2,xy) -> (x,y) -> (1)
        assert saturate(I("x^2", "x*y"), I("x")) == (XY.unit_ideal(), 2)

    def test_regular_element(self):
        assert saturate(I("x"), I("y")) == (I("x"), 0)

    def test_oracle(self):
        sat, _ = saturate(I("x^2", "x*y"), I("x", "y"))
        assert stair(sat, 5) == oracle_set(sc.saturation_grid(I("x^2", "x*y"), I("x", "y"), 5), 5)

    @settings(max_examples=60)
    @given(ideal_pairs())
    def test_chain(self, pair):
        a, b = pair
        sat, l = saturate(a, b)
        chain = a
        for _ in range(l):
            assert ideal_leq(chain, sat)
            chain = colon(chain, b)
        assert chain == sat
        assert saturate(sat, b) == (sat, 0)


class TestRadical:
    def test_examples(self):
        assert radical(I("x^2", "x*y", "y^3")) == I("x", "y")
        assert radical(I("x")) == I("x")
        assert radical(XY.unit_ideal()).is_unit()

    def test_oracle_power_relation(self):
        J = I("x^2", "x*y", "y^3")
        # every generator of the radical has its cube in J
        for g in radical(J).gens:
            assert contains_monomial(J, tuple(3 * a for a in g))
        assert stair(radical(J), 6) == oracle_set(sc.radical_grid(J, 6), 6)


class TestStaircase:
    def test_examples(self):
        assert stair(I("x"), 2) == {(1, 0), (2, 0), (1, 1)}
        assert stair(I("x^2", "x*y"), 2) == {(2, 0), (1, 1)}
        assert stair(XY.zero_ideal(), 5) == set()

    @given(ideals())
    def test_grid_agrees_with_enumeration(self, J):
        D = 6
        assert stair(J, D) == oracle_set(sc.grid_of(J, D), D)


@settings(max_examples=80, deadline=None)
@given(ideal_pairs(allow_unit_first=True))
def test_operations_match_oracle(pair):
    a, b = pair
    D = max((sum(g) for g in a.gens), default=0) + max((sum(g) for g in b.gens), default=0) + 2
    ga, gb = sc.grid_of(a, D), sc.grid_of(b, D)
    assert stair(ideal_sum(a, b), D) == oracle_set(ga | gb, D)
    assert stair(intersect(a, b), D) == oracle_set(ga & gb, D)
    assert stair(product(a, b), D) == oracle_set(sc.minkowski(ga, gb), D)
    assert stair(colon(a, b), D) == oracle_set(sc.colon_grid(a, b, D), D)
    assert stair(saturate(a, b)[0], D) == oracle_set(sc.saturation_grid(a, b, D), D)
    assert stair(radical(a), D) == oracle_set(sc.radical_grid(a, D), D)


@given(ideal_pairs(), ideal_pairs())
def test_lattice_laws(p, q):
    a, b = p
    c = MonomialIdeal.from_exponents(a.ctx, [g[: a.ctx.dim] + (0,) * (a.ctx.dim - len(g)) for g in q[0].gens])
    assert ideal_sum(a, b) == ideal_sum(b, a)
    assert intersect(a, b) == intersect(b, a)
    assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))
    assert ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c))
    assert intersect(a, a) == a == ideal_sum(a, a)
    assert ideal_leq(intersect(a, b), a) and ideal_leq(a, ideal_sum(a, b))
