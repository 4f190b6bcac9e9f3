"""The two kernel implementations must be byte-for-byte interchangeable."""

import itertools
import random

import pytest

from graphideals import kernels
from graphideals import _kernels_py as kpy

HAVE_CYTHON = "cython" in kernels.available()

if HAVE_CYTHON:
    from graphideals import _kernels_cy as kcy

    IMPLS = [kpy, kcy]
else:
    IMPLS = [kpy]


def brute_minimalize(vecs):
    """Quadratic reference: keep vectors no other distinct vector divides."""
    uniq = sorted(set(tuple(v) for v in vecs), key=lambda v: (sum(v), v))
    kept = []
    for v in uniq:
        dominated = any(
            u != v and all(a <= b for a, b in zip(u, v)) for u in uniq
        )
        if not dominated:
            kept.append(v)
    return kept


def random_vecs(rng, count, dim, hi):
    return [
        tuple(rng.randint(0, hi) for _ in range(dim)) for _ in range(count)
    ]


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.IMPLEMENTATION)
class TestKernelContract:
    def test_divides(self, impl):
        assert impl.divides((1, 0, 2), (1, 1, 2))
        assert not impl.divides((2, 0), (1, 5))

    def test_lcm(self, impl):
        assert impl.lcm((2, 1, 0), (0, 3, 1)) == (2, 3, 1)

    def test_any_divides(self, impl):
        gens = [(2, 0), (0, 5)]
        assert impl.any_divides(gens, (3, 1))
        assert not impl.any_divides(gens, (1, 4))

    def test_grlex_key_orders_degree_first(self, impl):
        assert impl.grlex_key((0, 3)) < impl.grlex_key((2, 2))
        assert impl.grlex_key((0, 1, 1)) < impl.grlex_key((1, 1, 0))

    def test_minimalize_golden(self, impl):
        got = impl.minimalize([(2, 0), (3, 0), (2, 0), (0, 5), (2, 5)])
        assert got == [(2, 0), (0, 5)]

    def test_minimalize_unit_absorbs(self, impl):
        assert impl.minimalize([(0, 0), (1, 2)]) == [(0, 0)]

    def test_minimalize_empty(self, impl):
        assert impl.minimalize([]) == []

    def test_minimalize_matches_brute_force(self, impl):
        rng = random.Random(20260822)
        for trial in range(200):
            dim = rng.randint(1, 5)
            vecs = random_vecs(rng, rng.randint(0, 12), dim, 4)
            assert impl.minimalize(vecs) == brute_minimalize(vecs)

    def test_intersect_rows(self, impl):
        left = [(2, 0, 0), (0, 5, 5)]
        right = [(0, 2, 0)]
        assert impl.intersect_rows(left, right) == [(2, 2, 0), (0, 5, 5)]

    def test_exhaustive_small_minimalize(self, impl):
        univ = list(itertools.product(range(3), repeat=2))
        for size in range(4):
            for vecs in itertools.combinations(univ, size):
                assert impl.minimalize(list(vecs)) == brute_minimalize(vecs)


@pytest.mark.skipif(not HAVE_CYTHON, reason="compiled kernel unavailable")
class TestParity:
    def test_identifiers(self):
        assert kpy.IMPLEMENTATION == "python"
        assert kcy.IMPLEMENTATION == "cython"

    def test_randomized_parity(self):
        rng = random.Random(7)
        for trial in range(300):
            dim = rng.randint(1, 6)
            a = random_vecs(rng, rng.randint(0, 10), dim, 5)
            b = random_vecs(rng, rng.randint(1, 6), dim, 5)
            assert kpy.minimalize(a) == kcy.minimalize(a)
            assert kpy.intersect_rows(a, b) == kcy.intersect_rows(a, b)

    def test_dimension_mismatch_raises(self):
        with pytest.raises(ValueError):
            kcy.minimalize([(1, 0), (1, 0, 0)])
        with pytest.raises(ValueError):
            kpy.minimalize([(1, 0), (1, 0, 0)])


class TestSelector:
    def test_python_always_available(self):
        assert "python" in kernels.available()

    def test_use_rebinds(self):
        before = kernels.active()
        try:
            kernels.use("python")
            assert kernels.active() == "python"
            assert kernels.minimalize([(2, 0), (1, 0)]) == [(1, 0)]
        finally:
            kernels.use(before)

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError):
            kernels.use("fortran")
