"""Positive braid words and the combinatorics of their closures."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyWord, NonPositiveLetter, NotAKnot


@dataclass(frozen=True)
class BraidWord:
    """A positive braid word.

    ``letters`` holds generator indices; letter ``i`` is the positive Artin
    generator crossing strands ``i`` and ``i + 1``.  The strand count is
    inferred as ``max(letters) + 1`` unless given explicitly, and may only be
    raised above that value.
    """

    letters: tuple[int, ...]
    strands: int = 0

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if not letters:
            raise EmptyWord("braid word has no letters")
        for x in letters:
            if x < 1:
                raise NonPositiveLetter(f"letter {x} is not a positive generator index")
        object.__setattr__(self, "letters", letters)
        inferred = max(letters) + 1
        if self.strands == 0:
            object.__setattr__(self, "strands", inferred)
        elif self.strands < inferred:
            raise NonPositiveLetter(
                f"strand override {self.strands} is below the inferred count {inferred}"
            )

    @property
    def length(self) -> int:
        return len(self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def full_support(self) -> bool:
        """True when every generator 1..s-1 occurs in the word."""
        return set(self.letters) == set(range(1, self.strands))

    def rotate(self, k: int = 1) -> BraidWord:
        """Cyclic rotation by ``k`` letters (conjugation; same closure)."""
        k %= self.length
        return BraidWord(self.letters[k:] + self.letters[:k], self.strands)


def parse_braid_word(text: str, strands: int = 0) -> BraidWord:
    tokens = text.split()
    if not tokens:
        raise EmptyWord("empty braid word")
    letters = []
    for tok in tokens:
        try:
            value = int(tok, 10)
        except ValueError:
            raise NonPositiveLetter(f"token {tok!r} is not an integer") from None
        if value <= 0:
            raise NonPositiveLetter(f"token {tok!r} is not a positive generator index")
        letters.append(value)
    return BraidWord(tuple(letters), strands)


def closure_permutation(w: BraidWord) -> tuple[tuple[int, ...], int]:
    """Return the permutation of strand positions and its number of cycles.

    The permutation is given as a tuple ``p`` with ``p[k-1]`` the image of
    strand ``k`` after applying the transpositions ``(i, i+1)`` in word order.
    """
    position = list(range(1, w.strands + 1))  # position[k] = where strand k+1 sits now
    where = list(range(w.strands))  # occupant of each slot
    for i in w.letters:
        a, b = where[i - 1], where[i]
        where[i - 1], where[i] = b, a
        position[a], position[b] = i + 1, i
    perm = tuple(position)

    seen = [False] * w.strands
    cycles = 0
    for start in range(w.strands):
        if seen[start]:
            continue
        cycles += 1
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k] - 1
    return perm, cycles


def is_knot(w: BraidWord) -> bool:
    return closure_permutation(w)[1] == 1


def require_knot(w: BraidWord) -> None:
    """Raise ``NotAKnot`` unless the closure is a knot with full generator support."""
    if not w.full_support():
        raise NotAKnot(f"word {w} does not use every generator on {w.strands} strands")
    cycles = closure_permutation(w)[1]
    if cycles != 1:
        raise NotAKnot(f"closure of {w} has {cycles} components")


def positive_braid_genus(w: BraidWord) -> int:
    """Genus of the fibre surface of the closure: (c - s + 1) / 2."""
    require_knot(w)
    return (w.length - w.strands + 1) // 2
