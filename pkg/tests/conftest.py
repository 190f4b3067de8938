import pytest
from hypothesis import strategies as st

from upd import MonomialIdeal, RingContext

XY = RingContext(("x", "y"))
XYZ = RingContext(("x", "y", "z"))


@pytest.fixture
def xy():
    return XY


def I(*gens, ctx=XY):
    return ctx.ideal(*gens)


@st.composite
def ideals(draw, d=None, max_gens=6, max_exp=5, allow_unit=True, allow_zero=False):
    d = draw(st.integers(1, 3)) if d is None else d
    ctx = RingContext(("x", "y", "z")[:d])
    lo = 0 if allow_zero else 1
    vecs = draw(
        st.lists(st.tuples(*[st.integers(0, max_exp)] * d), min_size=lo, max_size=max_gens)
    )
    if not allow_unit:
        vecs = [v for v in vecs if any(v)] or [(1,) + (0,) * (d - 1)]
    return MonomialIdeal.from_exponents(ctx, vecs)


@st.composite
def ideal_pairs(draw, allow_unit_first=False):
    d = draw(st.integers(1, 3))
    a = draw(ideals(d=d, allow_unit=allow_unit_first))
    b = draw(ideals(d=d))
    return a, b


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
