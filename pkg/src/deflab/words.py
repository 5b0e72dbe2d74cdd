"""Freely reduced words over indexed generators.

A letter is a pair ``(generator_index, sign)`` with sign +1 or -1.  Words are
immutable; every constructor path freely reduces, so two equal group elements
built from the same letter sequence compare equal as objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def _reduce_letters(letters):
    out = []
    for g, s in letters:
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {s!r}")
        if not isinstance(g, int) or g < 0:
            raise ValueError(f"generator index must be a nonnegative int, got {g!r}")
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the identity is the empty word."""

    letters: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce_letters(self.letters))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def conjugate(self, by):
        """Return by * self * by^-1."""
        return by * self * by.inverse()

    def max_generator(self):
        """Largest generator index occurring, or -1 for the identity."""
        return max((g for g, _ in self.letters), default=-1)

    def exponent_sum(self, gen):
        return sum(s for g, s in self.letters if g == gen)

    def cyclically_reduced(self):
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == -ls[-1][1]:
            ls = ls[1:-1]
        return Word(tuple(ls))

    def canonical_rotation(self):
        """Lexicographically least rotation of a cyclically reduced word.

        Letters order as (gen, 0) for positive and (gen, 1) for negative, so
        a < a^-1 < b < b^-1.
        """
        w = self.cyclically_reduced()
        n = len(w.letters)
        if n == 0:
            return w
        key = [(g, 0 if s == 1 else 1) for g, s in w.letters]
        best = min(range(n), key=lambda i: key[i:] + key[:i])
        return Word(w.letters[best:] + w.letters[:best])

    def is_proper_power(self):
        """True when the letter sequence is a repetition u^m with m >= 2."""
        n = len(self.letters)
        for period in range(1, n):
            if n % period:
                continue
            if all(self.letters[i] == self.letters[i % period] for i in range(n)):
                return True
        return False

    def remap(self, index_map):
        """Rewrite generator indices through index_map (a dict or list)."""
        return Word(tuple((index_map[g], s) for g, s in self.letters))


def free_reduce(letters):
    """Freely reduce an iterable of (gen, sign) letters into a Word.

    Idempotent and length-nonincreasing.
    """
    if isinstance(letters, Word):
        return letters
    return Word(tuple(letters))


def commutator(u, v):
    return u * v * u.inverse() * v.inverse()
