"""Free-group words over X ∪ X⁻¹.

Letters are small non-negative integer codes.  Generator ``x_i`` (1-based)
has code ``2*(i-1)`` and its inverse has code ``2*(i-1) + 1``, so:

* the inverse of a letter is ``code ^ 1``;
* integer order on codes is the canonical letter order
  ``x_1 < x_1⁻¹ < x_2 < x_2⁻¹ < ...``.

Text encoding: ``a``..``z`` are ``x_1``..``x_26``, ``A``..``Z`` their inverses,
and the identity is written ``1``.
"""

from __future__ import annotations

import string
from typing import Iterable, NamedTuple, Sequence

IDENTITY_TEXT = "1"
MAX_TEXT_RANK = 26


class Letter(NamedTuple):
    """Structured view of a letter code: ``index`` in ``[1, rank]``, ``sign`` ±1."""

    index: int
    sign: int

    @property
    def code(self) -> int:
        return letter(self.index, self.sign)

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


def letter(index: int, sign: int = 1) -> int:
    if index < 1:
        raise ValueError(f"letter index must be >= 1, got {index}")
    if sign not in (1, -1):
        raise ValueError(f"letter sign must be +1 or -1, got {sign}")
    return 2 * (index - 1) + (0 if sign == 1 else 1)


def letter_view(code: int) -> Letter:
    return Letter(code // 2 + 1, 1 if code % 2 == 0 else -1)


def inverse_letter(code: int) -> int:
    return code ^ 1


def check_letters(letters: Iterable[int], rank: int) -> None:
    """Raise ``ValueError`` if any letter code is outside the alphabet of ``rank``."""
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    bound = 2 * rank
    for c in letters:
        if not 0 <= c < bound:
            raise ValueError(f"letter code {c} out of range for rank {rank}")


class ReducedWord(tuple):
    """An immutable, freely reduced word (tuple of letter codes).

    The constructor always reduces its input, so every instance is reduced.
    ``ReducedWord()`` is the identity.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        return tuple.__new__(cls, _reduce_codes(letters))

    @classmethod
    def _trusted(cls, letters: Iterable[int]) -> "ReducedWord":
        # caller guarantees the input is already reduced
        return tuple.__new__(cls, letters)

    def inverse(self) -> "ReducedWord":
        return ReducedWord._trusted(c ^ 1 for c in reversed(self))

    def __mul__(self, other):  # free-group product, not tuple repetition
        if not isinstance(other, ReducedWord):
            return NotImplemented
        return concat(self, other)

    def __repr__(self) -> str:
        try:
            return f"ReducedWord({format_word(self)!r})"
        except ValueError:
            return f"ReducedWord({tuple(self)!r})"


EMPTY = ReducedWord._trusted(())


def _reduce_codes(letters: Iterable[int]) -> list[int]:
    out: list[int] = []
    for c in letters:
        if c < 0:
            raise ValueError(f"invalid letter code {c}")
        if out and out[-1] == c ^ 1:
            out.pop()
        else:
            out.append(c)
    return out


def reduce(word: Iterable[int], rank: int | None = None) -> ReducedWord:
    """Freely reduce ``word``; validates letters against ``rank`` when given."""
    word = tuple(word)
    if rank is not None:
        check_letters(word, rank)
    return ReducedWord(word)


def concat(u: ReducedWord, v: ReducedWord) -> ReducedWord:
    """Free-group product ``reduce(u·v)``; cancellation only happens at the seam."""
    i = 0
    n = min(len(u), len(v))
    while i < n and u[-1 - i] == v[i] ^ 1:
        i += 1
    return ReducedWord._trusted(u[: len(u) - i] + v[i:])


def prefixes(w: ReducedWord) -> list[ReducedWord]:
    return [ReducedWord._trusted(w[:j]) for j in range(len(w) + 1)]


def count_reduced_words(rank: int, t: int) -> int:
    """Number of reduced words of length ``t``: ``(p+1) p^(t-1)`` with ``p = 2 rank - 1``."""
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if t < 0:
        raise ValueError(f"length must be >= 0, got {t}")
    if t == 0:
        return 1
    p = 2 * rank - 1
    return (p + 1) * p ** (t - 1)


def shortlex_key(w: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    return (len(w), tuple(w))


def format_word(w: Sequence[int]) -> str:
    if not w:
        return IDENTITY_TEXT
    chars = []
    for c in w:
        idx = c // 2
        if idx >= MAX_TEXT_RANK:
            raise ValueError(f"letter code {c} has no text encoding")
        ch = string.ascii_lowercase[idx]
        chars.append(ch.upper() if c % 2 else ch)
    return "".join(chars)


def parse_letters(text: str, rank: int | None = None) -> tuple[int, ...]:
    """Parse the text encoding into raw (unreduced) letter codes."""
    text = text.strip()
    if text in ("", IDENTITY_TEXT):
        return ()
    codes = []
    for ch in text:
        if ch in string.ascii_lowercase:
            codes.append(2 * string.ascii_lowercase.index(ch))
        elif ch in string.ascii_uppercase:
            codes.append(2 * string.ascii_uppercase.index(ch) + 1)
        else:
            raise ValueError(f"invalid letter {ch!r} in word {text!r}")
    if rank is not None:
        check_letters(codes, rank)
    return tuple(codes)


def parse_word(text: str, rank: int | None = None) -> ReducedWord:
    return ReducedWord(parse_letters(text, rank))
