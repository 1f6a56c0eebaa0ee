"""Exact closed-form counts for free inverse monoids.

Everything here is integer arithmetic.  ``p = 2*rank - 1`` throughout.
Binomials grow exponentially in ``k``, so large arguments are limited by
memory and time rather than by overflow.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .words import count_reduced_words


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def fuss_catalan(p: int, q: int, k: int) -> int:
    """Raney number ``R_{p,q}(k) = q/(kp+q) * C(kp+q, k)``."""
    if p < 1 or q < 1 or k < 0:
        raise ValueError(f"need p >= 1, q >= 1, k >= 0; got p={p}, q={q}, k={k}")
    n = k * p + q
    num = q * math.comb(n, k)
    value, rem = divmod(num, n)
    assert rem == 0, f"q*C(kp+q,k) not divisible by kp+q for p={p}, q={q}, k={k}"
    return value


def p_catalan(p: int, i: int) -> int:
    """Number of p-ary tree diagrams with ``i`` internal nodes."""
    if p < 1 or i < 0:
        raise ValueError(f"need p >= 1, i >= 0; got p={p}, i={i}")
    if i == 0:
        return 1
    return fuss_catalan(p, p, i - 1)


def trunk_branching(rank: int, t: int) -> int:
    """Number of children of the contracted trunk: ``2p + (t-1)(p-1)``."""
    p = 2 * rank - 1
    return 2 * p + (t - 1) * (p - 1)


def count_munn_trees(rank: int, t: int, k: int) -> int:
    """``|M(t, k)|``, the number of Munn trees with ``t`` trunk and ``k`` branch edges."""
    if rank < 1 or t < 0 or k < 0:
        raise ValueError(f"need rank >= 1, t >= 0, k >= 0; got {rank}, {t}, {k}")
    p = 2 * rank - 1
    if t == 0:
        # the root has all p+1 neighbours available
        return fuss_catalan(p, p + 1, k)
    return count_reduced_words(rank, t) * fuss_catalan(p, trunk_branching(rank, t), k)


def _check_rank_radius(rank: int, K: int) -> None:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if K < 0:
        raise ValueError(f"radius must be >= 0, got {K}")


def sphere_size(rank: int, K: int) -> int:
    _check_rank_radius(rank, K)
    total = count_munn_trees(rank, 0, K // 2) if K % 2 == 0 else 0
    for k in range((K - 1) // 2 + 1):
        t = K - 2 * k
        if t >= 1:
            total += count_munn_trees(rank, t, k)
    return total


def idempotent_sphere_size(rank: int, K: int) -> int:
    _check_rank_radius(rank, K)
    if K % 2:
        return 0
    return count_munn_trees(rank, 0, K // 2)


def ball_size(rank: int, K: int) -> int:
    _check_rank_radius(rank, K)
    return sum(sphere_size(rank, j) for j in range(K + 1))


@dataclass(frozen=True)
class SphereRow:
    K: int
    sphere: int
    idempotents: int
    ball: int


@dataclass(frozen=True)
class SphereTable:
    rank: int
    rows: tuple = field(default_factory=tuple)

    FIELDS = ("K", "sphere", "idempotents", "ball")

    def __post_init__(self):
        running = 0
        for i, row in enumerate(self.rows):
            if row.K != i:
                raise ValueError(f"rows must be contiguous from K=0; row {i} has K={row.K}")
            running += row.sphere
            if row.ball != running:
                raise ValueError(f"ball column is not the prefix sum at K={row.K}")
            if row.K % 2 and row.idempotents:
                raise ValueError(f"odd radius K={row.K} cannot contain idempotents")

    def spheres(self) -> list[int]:
        return [r.sphere for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.FIELDS)
        for r in self.rows:
            w.writerow([r.K, str(r.sphere), str(r.idempotents), str(r.ball)])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "rank": self.rank,
            "rows": [
                {"K": r.K, "sphere": str(r.sphere), "idempotents": str(r.idempotents), "ball": str(r.ball)}
                for r in self.rows
            ],
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_csv(cls, text: str, rank: int) -> "SphereTable":
        reader = csv.DictReader(io.StringIO(text))
        rows = tuple(
            SphereRow(int(d["K"]), int(d["sphere"]), int(d["idempotents"]), int(d["ball"])) for d in reader
        )
        return cls(rank, rows)

    @classmethod
    def from_json(cls, text: str) -> "SphereTable":
        doc = json.loads(text)
        rows = tuple(
            SphereRow(int(d["K"]), int(d["sphere"]), int(d["idempotents"]), int(d["ball"])) for d in doc["rows"]
        )
        return cls(int(doc["rank"]), rows)


def sphere_table(rank: int, K_max: int) -> SphereTable:
    _check_rank_radius(rank, K_max)
    rows = []
    ball = 0
    for K in range(K_max + 1):
        s = sphere_size(rank, K)
        ball += s
        rows.append(SphereRow(K, s, idempotent_sphere_size(rank, K), ball))
    return SphereTable(rank, tuple(rows))
