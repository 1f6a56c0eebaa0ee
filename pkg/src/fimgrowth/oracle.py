"""Brute-force enumerators used as ground truth for the closed-form counts.

Nothing here imports :mod:`fimgrowth.counting`.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from itertools import combinations

from .munn import MunnTree, multiply_letter, trunk_branch_counts

DEFAULT_WORK_BUDGET = 10**7
BUDGET_ENV = "FIMGROWTH_WORK_BUDGET"


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_WORK_BUDGET


class BudgetExceeded(RuntimeError):
    """Raised when the next enumeration level would exceed the work budget.

    ``completed`` is the largest fully computed level (-1 if none) and
    ``partial`` holds whatever was computed up to it.
    """

    def __init__(self, message: str, completed: int, partial=None):
        super().__init__(message)
        self.completed = completed
        self.partial = partial


def bfs_levels(rank: int, K_max: int, budget: int | None = None):
    """Yield ``(K, elements of length K)`` for ``K = 0..K_max``.

    Breadth-first search over words by length.  A word is only extended if
    its element first appeared at the previous level, which loses nothing:
    every prefix of a geodesic word is geodesic.  Each (element, letter)
    extension counts as one unit of work.
    """
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if K_max < 0:
        raise ValueError(f"K_max must be >= 0, got {K_max}")
    budget = default_budget() if budget is None else budget
    gens = range(2 * rank)
    frontier = [MunnTree.identity(rank)]
    seen = set(frontier)
    spent = 0
    yield 0, frontier
    for K in range(1, K_max + 1):
        cost = len(frontier) * len(gens)
        if spent + cost > budget:
            raise BudgetExceeded(
                f"level {K} needs {cost} more words (spent {spent}, budget {budget})", K - 1
            )
        spent += cost
        nxt = []
        for m in frontier:
            for c in gens:
                m2 = multiply_letter(m, c)
                if m2 not in seen:
                    seen.add(m2)
                    nxt.append(m2)
        frontier = nxt
        yield K, frontier


def enumerate_sphere_sizes(rank: int, K_max: int, budget: int | None = None) -> list[int]:
    sizes: list[int] = []
    try:
        for _, level in bfs_levels(rank, K_max, budget):
            sizes.append(len(level))
    except BudgetExceeded as exc:
        exc.partial = sizes
        raise
    return sizes


def enumerate_munn_tree_counts(rank: int, K_max: int, budget: int | None = None) -> dict[tuple[int, int], int]:
    """``{(t, k): count}`` for every element of length ``<= K_max``, grouped by trunk/branch edges."""
    counts: Counter = Counter()
    try:
        for _, level in bfs_levels(rank, K_max, budget):
            counts.update(trunk_branch_counts(m) for m in level)
    except BudgetExceeded as exc:
        exc.partial = dict(counts)
        raise
    return dict(counts)


def enumerate_munn_trees(rank: int, t: int, k: int, budget: int | None = None) -> int:
    if t < 0 or k < 0:
        raise ValueError("t and k must be >= 0")
    return enumerate_munn_tree_counts(rank, t + 2 * k, budget).get((t, k), 0)


# ---------------------------------------------------------------------------
# tree diagrams
# ---------------------------------------------------------------------------


def iter_tree_diagrams(p: int, q: int, k: int):
    """Yield every tree diagram with branching ``(p, q)`` on ``k`` edges.

    A diagram is a frozenset of node addresses: tuples of child indices from
    the root (root children in ``range(q)``, all others in ``range(p)``).
    Each diagram is produced exactly once: the search walks an ordered list
    of candidate nodes and either commits to or permanently skips the first.
    """
    _check_pqk(p, q, k)

    def grow(chosen: list, candidates: list):
        if len(chosen) == k:
            yield frozenset(chosen)
            return
        if len(candidates) < 1:
            return
        head, rest = candidates[0], candidates[1:]
        chosen.append(head)
        yield from grow(chosen, rest + [head + (j,) for j in range(p)])
        chosen.pop()
        yield from grow(chosen, rest)

    for diagram in grow([], [(j,) for j in range(q)]):
        yield diagram | {()}


def _check_pqk(p: int, q: int, k: int) -> None:
    if p < 1 or q < 1 or k < 0:
        raise ValueError(f"need p >= 1, q >= 1, k >= 0; got p={p}, q={q}, k={k}")


def _plane_tree_weight(p: int, q: int, k: int, budget: int) -> int:
    # Enumerate plane trees (ordered children) with k edges, root degree <= q
    # and other degrees <= p.  A diagram is a plane tree together with, at
    # each node, an order-preserving choice of which child slots are used,
    # so each plane tree stands for prod C(slots, degree) diagrams.
    total = 0
    visited = 0

    def grow(pending: tuple, remaining: int, weight: int) -> None:
        nonlocal total, visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"tree-diagram enumeration exceeded {budget} shapes", -1)
        if remaining == 0:
            total += weight
            return
        if not pending:
            return
        slots, rest = pending[0], pending[1:]
        for deg in range(min(slots, remaining) + 1):
            grow((p,) * deg + rest, remaining - deg, weight * math.comb(slots, deg))

    grow((q,), k, 1)
    return total


def enumerate_tree_diagrams(p: int, q: int, k: int, budget: int | None = None, explicit: bool = False) -> int:
    """Count tree diagrams with branching ``(p, q)`` on ``k`` edges.

    With ``explicit=True`` every diagram is materialised as a node set and
    counted one by one.  The default enumerates the underlying plane-tree
    shapes and weights each by its number of slot assignments, which is the
    same set of diagrams grouped by shape and runs far faster.
    """
    _check_pqk(p, q, k)
    budget = default_budget() if budget is None else budget
    if explicit:
        n = 0
        for _ in iter_tree_diagrams(p, q, k):
            n += 1
            if n > budget:
                raise BudgetExceeded(f"explicit enumeration exceeded {budget} diagrams", -1)
        return n
    return _plane_tree_weight(p, q, k, budget)


def subtree_count_brute(p: int, q: int, k: int) -> int:
    """Count diagrams by testing every k-subset of non-root nodes of depth <= k for connectivity.

    Only feasible for tiny cases; a third, structurally different route.
    """
    _check_pqk(p, q, k)
    nodes = []
    frontier = [()]
    for _ in range(k):
        nxt = []
        for v in frontier:
            width = q if v == () else p
            nxt.extend(v + (j,) for j in range(width))
        nodes.extend(nxt)
        frontier = nxt
    count = 0
    for subset in combinations(nodes, k):
        s = set(subset)
        if all(len(v) == 1 or v[:-1] in s for v in subset):
            count += 1
    return count
