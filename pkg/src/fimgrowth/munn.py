"""Munn-tree model of the free inverse monoid FIM(X).

An element is a pair ``(T, g)``: ``T`` a finite subtree of the Cayley graph of
the free group containing ``1``, stored as its (prefix-closed) set of reduced
words, and ``g`` a vertex of ``T``.  Multiplication is
``(T1, g1)(T2, g2) = (T1 ∪ g1·T2, g1 g2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import (
    EMPTY,
    ReducedWord,
    check_letters,
    concat,
    format_word,
    parse_word,
    shortlex_key,
)


class RankMismatch(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class MunnTree:
    rank: int
    vertices: frozenset
    designated: ReducedWord

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if not isinstance(self.vertices, frozenset):
            object.__setattr__(self, "vertices", frozenset(self.vertices))
        if not isinstance(self.designated, ReducedWord):
            object.__setattr__(self, "designated", ReducedWord(self.designated))
        _check_tree(self)

    @classmethod
    def _trusted(cls, rank: int, vertices: frozenset, designated: ReducedWord) -> "MunnTree":
        # hot path for enumeration; invariants guaranteed by the caller
        m = object.__new__(cls)
        object.__setattr__(m, "rank", rank)
        object.__setattr__(m, "vertices", vertices)
        object.__setattr__(m, "designated", designated)
        return m

    @classmethod
    def identity(cls, rank: int) -> "MunnTree":
        return cls(rank, frozenset([EMPTY]), EMPTY)

    def __mul__(self, other: "MunnTree") -> "MunnTree":
        return multiply(self, other)

    def __str__(self) -> str:
        return to_text(self)


def _check_tree(m: MunnTree) -> None:
    vs = m.vertices
    if EMPTY not in vs:
        raise ValueError("Munn tree must contain the identity vertex")
    if m.designated not in vs:
        raise ValueError("designated vertex is not in the tree")
    for v in vs:
        if not isinstance(v, ReducedWord):
            raise TypeError(f"vertex {v!r} is not a ReducedWord")
        check_letters(v, m.rank)
        if v and ReducedWord._trusted(v[:-1]) not in vs:
            raise ValueError(f"vertex set is not prefix-closed at {format_word(v)}")


def eval_word(word: Iterable[int], rank: int) -> MunnTree:
    """Munn tree of a word: the path it labels from 1, ending at its reduced form."""
    word = tuple(word)
    check_letters(word, rank)
    g: tuple = ()
    seen = {EMPTY}
    for c in word:
        if g and g[-1] == c ^ 1:
            g = g[:-1]
        else:
            g = g + (c,)
            seen.add(ReducedWord._trusted(g))
    return MunnTree._trusted(rank, frozenset(seen), ReducedWord._trusted(g))


def multiply(lhs: MunnTree, rhs: MunnTree) -> MunnTree:
    if lhs.rank != rhs.rank:
        raise RankMismatch(f"cannot multiply rank {lhs.rank} by rank {rhs.rank}")
    g1 = lhs.designated
    vertices = lhs.vertices.union(concat(g1, v) for v in rhs.vertices)
    result = MunnTree._trusted(lhs.rank, vertices, concat(g1, rhs.designated))
    _check_tree(result)
    return result


def multiply_letter(m: MunnTree, c: int) -> MunnTree:
    """Right multiplication by a single generator; used by the BFS oracle."""
    g = m.designated
    if g and g[-1] == c ^ 1:
        return MunnTree._trusted(m.rank, m.vertices, ReducedWord._trusted(g[:-1]))
    h = ReducedWord._trusted(g + (c,))
    if h in m.vertices:
        return MunnTree._trusted(m.rank, m.vertices, h)
    return MunnTree._trusted(m.rank, m.vertices | {h}, h)


def invert(m: MunnTree) -> MunnTree:
    gi = m.designated.inverse()
    result = MunnTree._trusted(m.rank, frozenset(concat(gi, v) for v in m.vertices), gi)
    _check_tree(result)
    return result


def is_idempotent(m: MunnTree) -> bool:
    return len(m.designated) == 0


def trunk_branch_counts(m: MunnTree) -> tuple[int, int]:
    t = len(m.designated)
    return t, len(m.vertices) - 1 - t


def length(m: MunnTree) -> int:
    """Length in FIM(X): trunk edges plus twice the branch edges."""
    t, k = trunk_branch_counts(m)
    return t + 2 * k


def _children(m: MunnTree) -> dict[ReducedWord, list[int]]:
    kids: dict[ReducedWord, list[int]] = {v: [] for v in m.vertices}
    for v in m.vertices:
        if v:
            kids[ReducedWord._trusted(v[:-1])].append(v[-1])
    for letters in kids.values():
        letters.sort()
    return kids


def geodesic_word(m: MunnTree) -> list[int]:
    """A shortest word representing ``m``.

    At each trunk vertex, walk every branch subtree hanging there depth-first
    (children in letter order) and return, then take the next trunk edge.
    """
    kids = _children(m)
    g = m.designated
    out: list[int] = []

    def walk(v: tuple) -> None:
        # iterative DFS; branch subtrees can be deep
        stack = [(v, iter(kids[v]))]
        while stack:
            node, it = stack[-1]
            c = next(it, None)
            if c is None:
                stack.pop()
                if stack:
                    out.append(node[-1] ^ 1)
                continue
            out.append(c)
            child = ReducedWord._trusted(node + (c,))
            stack.append((child, iter(kids[child])))

    for i in range(len(g) + 1):
        u = ReducedWord._trusted(g[:i])
        nxt = g[i] if i < len(g) else None
        for c in kids[u]:
            if c == nxt:
                continue
            out.append(c)
            walk(ReducedWord._trusted(u + (c,)))
            out.append(c ^ 1)
        if nxt is not None:
            out.append(nxt)
    return out


def sorted_vertices(m: MunnTree) -> list[ReducedWord]:
    return sorted(m.vertices, key=shortlex_key)


def canonical_key(m: MunnTree) -> bytes:
    """Injective byte encoding (for a fixed rank): shortlex-sorted vertices, then ``g``."""
    if 2 * m.rank > 0xFE:
        raise ValueError("canonical_key supports rank <= 127")
    parts = [bytes(v) for v in sorted_vertices(m)]
    return b"\xff".join(parts) + b"\xff\xff" + bytes(m.designated)


def to_text(m: MunnTree) -> str:
    inner = ",".join(format_word(v) for v in sorted_vertices(m))
    return "{" + inner + "}|" + format_word(m.designated)


def from_text(text: str, rank: int) -> MunnTree:
    """Parse the ``{v1,v2,...}|g`` form produced by :func:`to_text`."""
    text = text.strip()
    try:
        body, g = text.rsplit("|", 1)
    except ValueError:
        raise ValueError(f"expected '{{...}}|g', got {text!r}") from None
    body = body.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"expected braces around vertex list in {text!r}")
    items = [s for s in body[1:-1].split(",") if s.strip()]
    vertices = frozenset(parse_word(s, rank) for s in items)
    return MunnTree(rank, vertices, parse_word(g, rank))
