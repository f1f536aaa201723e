"""Words in a finite-rank free group, with the conjugacy normal form used
for curve equality.

A word is stored as a tuple of nonzero signed indices: ``3`` means the
generator x3, ``-3`` its inverse.  Words are always kept freely reduced.
The generator order used everywhere for lexicographic comparisons is

    x1 < x1^-1 < x2 < x2^-1 < ...

so a letter ``a`` sorts by ``(abs(a) - 1) * 2 + (0 if a > 0 else 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class WordError(ValueError):
    """Letter index out of range, or ranks that do not match."""


def _reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def letter_key(a: int) -> int:
    # total order on signed generators: x1 < x1^-1 < x2 < x2^-1 < ...
    return (abs(a) - 1) * 2 + (0 if a > 0 else 1)


@dataclass(frozen=True)
class Word:
    """A freely reduced word of fixed rank.  Build via :func:`reduce`."""

    rank: int
    letters: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.rank != other.rank:
            raise WordError(f"rank mismatch: {self.rank} vs {other.rank}")
        return Word(self.rank, _reduce_letters(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(self.rank, tuple(-a for a in reversed(self.letters)))

    def key(self) -> tuple[int, ...]:
        return tuple(letter_key(a) for a in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)


def reduce(rank: int, letters: Sequence[int]) -> Word:
    """Freely reduce a raw letter sequence into a Word.

    Idempotent; raises WordError on a zero letter or an index above rank.
    """
    if rank < 0:
        raise WordError(f"negative rank {rank}")
    for a in letters:
        if a == 0 or abs(a) > rank:
            raise WordError(f"letter {a} out of range for rank {rank}")
    return Word(rank, _reduce_letters(letters))


def identity(rank: int) -> Word:
    return Word(rank, ())


def generator(rank: int, i: int, sign: int = 1) -> Word:
    if not 1 <= i <= rank:
        raise WordError(f"generator index {i} out of range for rank {rank}")
    if sign not in (1, -1):
        raise WordError(f"sign must be +1 or -1, got {sign}")
    return Word(rank, (i * sign,))


def _cyclically_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return letters[lo:hi]


def _least_rotation(seq: list) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    s = seq + seq
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def cyclic_normal_form(w: Word) -> Word:
    """Canonical representative of the conjugacy class of ``w``.

    Cyclically reduce, then pick the lexicographically least rotation under
    the fixed generator order.  Two words are conjugate iff their normal
    forms are equal.
    """
    core = _cyclically_reduce(w.letters)
    if len(core) <= 1:
        return Word(w.rank, core)
    best = _least_rotation([letter_key(a) for a in core])
    return Word(w.rank, core[best:] + core[:best])


def unoriented_class(w: Word) -> Word:
    """Canonical representative of the conjugacy class of ``w`` or its
    inverse, whichever sorts first.  This is the right notion of equality
    for loops that carry no orientation."""
    a = cyclic_normal_form(w)
    b = cyclic_normal_form(w.inverse())
    return a if a.key() <= b.key() else b


def abelianize(w: Word) -> tuple[int, ...]:
    """Exponent-sum vector of ``w`` in Z^rank."""
    v = [0] * w.rank
    for a in w.letters:
        v[abs(a) - 1] += 1 if a > 0 else -1
    return tuple(v)
