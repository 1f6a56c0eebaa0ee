"""End-to-end acceptance checks, one test per criterion (``test_cNN_*``).

Each test times itself and asserts the stated runtime limit. The conftest
summary hook prints one PASS/FAIL line per criterion at the end of the run.
"""

import random
import time

import mpmath
import pytest

from fimgrowth import growth, oracle
from fimgrowth.counting import count_munn_trees, fuss_catalan, idempotent_sphere_size, sphere_size
from fimgrowth.munn import (
    eval_word,
    geodesic_word,
    invert,
    is_idempotent,
    length,
    trunk_branch_counts,
)

TABLE_ROUNDED = {2: 3.636, 3: 5.759, 4: 7.819, 5: 9.855, 6: 11.878, 7: 13.896}
_table_elapsed = {}


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@pytest.mark.parametrize("rank", sorted(TABLE_ROUNDED))
def test_c01_table_reproduction(rank):
    with Timer() as t:
        y = growth.growth_rate(rank, 8)
        certified = growth.certify_bracket(rank, y.lo, y.hi)
    _table_elapsed[rank] = t.elapsed
    assert certified
    assert y.width() <= 1e-6
    assert float(y.lo) <= float(y.value) <= float(y.hi)
    # running total over the ranks certified so far
    assert sum(_table_elapsed.values()) < 5
    assert round(float(y.value), 3) == TABLE_ROUNDED[rank], f"rank {rank}: {mpmath.nstr(y.value, 10)}"


def test_c02_rank2_exact_value():
    with Timer() as t:
        y = growth.growth_rate(2, 15)
    with mpmath.workdps(40):
        exact = mpmath.mpf(11) / 6 + mpmath.sqrt(13) / 2
        assert abs(y.value - exact) <= 1e-12
    assert t.elapsed < 1


def test_c03_sphere_oracle_equivalence():
    with Timer() as t:
        for rank, K_max in [(2, 10), (3, 7)]:
            observed = oracle.enumerate_sphere_sizes(rank, K_max, budget=10**8)
            assert observed == [sphere_size(rank, K) for K in range(K_max + 1)]
    assert t.elapsed < 60


def test_c04_fuss_catalan_oracle_equivalence():
    with Timer() as t:
        for p in range(1, 6):
            for q in range(1, 6):
                for k in range(8):
                    assert oracle.enumerate_tree_diagrams(p, q, k) == fuss_catalan(p, q, k), (p, q, k)
    assert t.elapsed < 30


def test_c05_monogenic_formulas():
    with Timer() as t:
        for K in range(201):
            R, odd = divmod(K, 2)
            expected = R * R + 3 * R + 2 if odd else R * R + 2 * R + 1
            assert sphere_size(1, K) == expected, K
        bfs = oracle.enumerate_sphere_sizes(1, 12)
        assert bfs == [sphere_size(1, K) for K in range(13)]
    assert t.elapsed < 5


def test_c06_idempotent_growth():
    with Timer() as t:
        with mpmath.workdps(40):
            target = mpmath.mpf(3) / 2 * mpmath.sqrt(3)
            assert abs(growth.idempotent_growth_rate(2).value - target) <= 1e-12
        counts = oracle.enumerate_munn_tree_counts(2, 10, budget=10**8)
        for K in range(11):
            expected = counts.get((0, K // 2), 0) if K % 2 == 0 else 0
            assert idempotent_sphere_size(2, K) == expected, K
        k = 10**4
        root = mpmath.exp(mpmath.log(count_munn_trees(2, 0, k)) / (2 * k))
        assert abs(root / target - 1) < 0.01
    assert t.elapsed < 60


def test_c07_variational_cross_check():
    with Timer() as t:
        for rank in range(2, 11):
            x, v = growth.maximize_h(rank)
            y = growth.growth_rate(rank, 20)
            assert abs(v.value - y.value) <= 1e-9, rank
            assert abs(x.value - growth.stationary_x(rank, y.value)) <= 1e-6, rank
    assert t.elapsed < 30


def test_c08_asymptotics():
    with Timer() as t:
        scaled = []
        for rank in (10, 50, 100):
            y = growth.growth_rate(rank, 15).value
            a = growth.asymptotic_growth(rank)
            with mpmath.workdps(30):
                gap = abs(y - mpmath.mpf(a.numerator) / a.denominator)
            scaled.append(gap * rank)
        assert scaled[0] > scaled[1] > scaled[2]
        assert scaled[2] < 0.5
    assert t.elapsed < 60


def test_c09_rank5_factorization():
    with Timer() as t:
        assert growth.check_rank5_factorization() is True
        for rank in range(2, 21):
            cert = growth.irreducibility_certificate(rank)
            if rank == 5:
                assert isinstance(cert, growth.ReducibleWitness)
            else:
                assert isinstance(cert, growth.Irreducible), (rank, cert)
    assert t.elapsed < 120


def _random_word(rng, rank, max_len=8):
    return [rng.randrange(2 * rank) for _ in range(rng.randint(0, max_len))]


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_c10_algebraic_properties(rank):
    rng = random.Random(20240 + rank)
    with Timer() as t:
        for _ in range(10**4):
            a, b, c = (_random_word(rng, rank) for _ in range(3))
            u, v, w = (eval_word(x, rank) for x in (a, b, c))
            assert (u * v) * w == u * (v * w)
            assert w * invert(w) * w == w
            e, f = u * invert(u), v * invert(v)
            assert is_idempotent(e) and is_idempotent(f)
            assert e * f == f * e
            assert eval_word(a + b, rank) == u * v
            uvw = u * v * w
            geo = geodesic_word(uvw)
            tt, kk = trunk_branch_counts(uvw)
            assert len(geo) == tt + 2 * kk == length(uvw)
            assert eval_word(geo, rank) == uvw
    assert t.elapsed < 60 / 3
