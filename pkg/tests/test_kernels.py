import pytest
from hypothesis import given
from hypothesis import strategies as st

from upd import _pykernels as py
from upd import kernels

try:
    from upd import _ckernels as c
except ImportError:  # extension not built
    c = None

needs_c = pytest.mark.skipif(c is None, reason="compiled kernels not built")

vecs = st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9)), max_size=12)


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_python_minimalize():
    assert py.minimalize([(1, 2), (2, 0), (1, 1), (2, 0)]) == ((2, 0), (1, 1))
    assert py.minimalize([]) == ()


@needs_c
@given(vecs, vecs)
def test_backends_agree(a, b):
    assert c.minimalize(a) == py.minimalize(a)
    assert c.pairwise_mul(a, b) == py.pairwise_mul(a, b)
    assert c.pairwise_lcm(a, b) == py.pairwise_lcm(a, b)
    for m in b[:3]:
        assert c.divides_any(a, m) == py.divides_any(a, m)
        assert c.colon_monomial(a, m) == py.colon_monomial(a, m)


@needs_c
def test_compiled_path_overflows_to_python():
    huge = [(2**70, 1), (1, 1)]
    with pytest.raises(OverflowError):
        c.minimalize(huge)
    assert kernels.minimalize(huge) == py.minimalize(huge)
    assert kernels.pairwise_mul([(2**62, 0)], [(2**62, 0)]) == [(2**63, 0)]
