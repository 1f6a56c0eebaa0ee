import pytest

from fimgrowth import oracle


def test_sphere_sizes_examples():
    assert oracle.enumerate_sphere_sizes(2, 2) == [1, 4, 16]
    assert oracle.enumerate_sphere_sizes(1, 4) == [1, 2, 4, 6, 9]
    assert oracle.enumerate_sphere_sizes(3, 2) == [1, 6, 36]


def test_munn_tree_counts_examples():
    assert oracle.enumerate_munn_trees(2, 0, 1) == 4
    assert oracle.enumerate_munn_trees(2, 1, 1) == 24
    assert oracle.enumerate_munn_trees(2, 3, 0) == 36


def test_partition_of_sphere(bfs_counts):
    counts = bfs_counts(2, 8)
    sizes = oracle.enumerate_sphere_sizes(2, 8)
    for K, s in enumerate(sizes):
        assert sum(n for (t, k), n in counts.items() if t + 2 * k == K) == s


def test_deterministic():
    assert oracle.enumerate_sphere_sizes(2, 6) == oracle.enumerate_sphere_sizes(2, 6)


def test_budget_exceeded_reports_progress():
    with pytest.raises(oracle.BudgetExceeded) as info:
        oracle.enumerate_sphere_sizes(2, 50, budget=10_000)
    exc = info.value
    assert exc.completed >= 3
    assert exc.partial == [1, 4, 16, 60, 222, 816, 2980, 10880][: exc.completed + 1]
    assert len(exc.partial) == exc.completed + 1


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv(oracle.BUDGET_ENV, "50")
    with pytest.raises(oracle.BudgetExceeded):
        oracle.enumerate_sphere_sizes(2, 5)


def test_tree_diagram_examples():
    assert oracle.enumerate_tree_diagrams(1, 2, 3) == 4
    assert oracle.enumerate_tree_diagrams(3, 4, 1) == 4
    for p in range(1, 4):
        for q in range(1, 4):
            assert oracle.enumerate_tree_diagrams(p, q, 0) == 1


def test_explicit_diagrams_are_distinct_subtrees():
    diagrams = list(oracle.iter_tree_diagrams(1, 2, 3))
    assert len(diagrams) == len(set(diagrams)) == 4
    for d in diagrams:
        assert len(d) == 4  # k edges + root
        assert all(v == () or v[:-1] in d for v in d)
        assert all(v == () or (v[0] < 2 and all(j < 1 for j in v[1:])) for v in d)


@pytest.mark.parametrize("p", range(1, 4))
@pytest.mark.parametrize("q", range(1, 4))
def test_shape_weighting_matches_explicit(p, q):
    for k in range(7):
        assert oracle.enumerate_tree_diagrams(p, q, k) == oracle.enumerate_tree_diagrams(p, q, k, explicit=True)


@pytest.mark.parametrize("p, q, k", [(1, 2, 3), (2, 2, 3), (2, 3, 3), (3, 2, 2), (1, 1, 4)])
def test_subset_brute_force_agrees(p, q, k):
    assert oracle.subtree_count_brute(p, q, k) == oracle.enumerate_tree_diagrams(p, q, k, explicit=True)


def test_tree_diagram_budget():
    with pytest.raises(oracle.BudgetExceeded):
        oracle.enumerate_tree_diagrams(5, 5, 7, budget=100)
    with pytest.raises(oracle.BudgetExceeded):
        oracle.enumerate_tree_diagrams(3, 3, 6, budget=100, explicit=True)


def test_bad_arguments():
    with pytest.raises(ValueError):
        oracle.enumerate_sphere_sizes(0, 3)
    with pytest.raises(ValueError):
        oracle.enumerate_tree_diagrams(0, 1, 1)
