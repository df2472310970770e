import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syncro import kernels
from syncro.powerset import successor_table

pytestmark = pytest.mark.skipif(not kernels.compiled_available(), reason="compiled extension not built")

automata = st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                                             min_size=1, max_size=3))
)


def _succ(n, images):
    from syncro.core import from_letter_images

    return successor_table(from_letter_images(images))


@settings(max_examples=150, deadline=None)
@given(automata)
def test_backends_agree(case):
    n, images = case
    py, cc = kernels.get_backend("python"), kernels.get_backend("compiled")
    for column in images:
        col = np.array(column, dtype=np.int64)
        assert np.array_equal(py.subset_images(col, n), cc.subset_images(col, n))
    succ = _succ(n, images)
    start = (1 << n) - 1
    for a, b in zip(py.bfs(succ, start), cc.bfs(succ, start)):
        assert np.array_equal(a, b)
    init = np.array([bin(i).count("1") == 1 for i in range(1 << n)], dtype=np.int64)
    assert np.array_equal(py.refine(succ, init), cc.refine(succ, init))


def test_set_backend_round_trip():
    previous = kernels.set_backend("python")
    try:
        assert kernels.BACKEND == "python"
    finally:
        kernels.set_backend(previous)
    assert kernels.BACKEND == previous


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("gpu")
