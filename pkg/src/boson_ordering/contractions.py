"""Contractions of a word: edge sets pairing annihilators with later creators.

A contraction is stored as its sorted edge list; the letter-level pictures
(contraction words over a, a†, e, e†, p) are derived from it.  Distinct edge
sets may yield the same contraction word, so the edge set is the primary
object and multiplicities are kept.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .words import A, C, Word, word_counts

DEFAULT_GUARD = 10**8


class CapacityError(RuntimeError):
    """Raised when an enumeration would exceed the configured guard."""

    def __init__(self, estimated: int, guard: int):
        super().__init__(
            f"enumeration would produce {estimated} contractions, above the guard of {guard}"
        )
        self.estimated = estimated
        self.guard = guard


class InvalidContractionError(ValueError):
    pass


class Edge(NamedTuple):
    left: int
    right: int

    @property
    def distance(self) -> int:
        return self.right - self.left

    def __str__(self):
        return f"{self.left}-{self.right}"


@dataclass(frozen=True)
class Contraction:
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        es = tuple(sorted(Edge(*e) for e in self.edges))
        object.__setattr__(self, "edges", es)
        seen: set[int] = set()
        for e in es:
            if e.left >= e.right:
                raise InvalidContractionError(f"edge {e} must have left < right")
            if e.left in seen or e.right in seen:
                raise InvalidContractionError(f"position reused by edge {e}")
            seen.update(e)

    def __len__(self):
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __str__(self):
        return ",".join(str(e) for e in self.edges)

    @classmethod
    def parse(cls, text: str) -> "Contraction":
        """Parse the ``2-3,4-5`` form; an empty string is the null contraction."""
        text = text.strip()
        if not text:
            return cls()
        edges = []
        for chunk in text.split(","):
            left, sep, right = chunk.strip().partition("-")
            if not sep:
                raise InvalidContractionError(f"bad edge {chunk!r}, expected 'left-right'")
            try:
                edges.append(Edge(int(left), int(right)))
            except ValueError:
                raise InvalidContractionError(f"bad edge {chunk!r}") from None
        return cls(tuple(edges))

    def validate(self, w: Word) -> "Contraction":
        n = len(w)
        for e in self.edges:
            if not (1 <= e.left and e.right <= n):
                raise InvalidContractionError(f"edge {e} outside positions 1..{n}")
            if w[e.left] is not A or w[e.right] is not C:
                raise InvalidContractionError(
                    f"edge {e} must join an annihilator to a creator on its right")
        return self


def count_contractions(w: Word) -> int:
    """Number of edge sets, by a right-to-left sweep over free creators."""
    # state: number of creators to the right still free -> number of ways
    ways: dict[int, int] = {0: 1}
    for letter in reversed(w.letters):
        nxt: dict[int, int] = {}
        if letter is C:
            for free, cnt in ways.items():
                nxt[free + 1] = nxt.get(free + 1, 0) + cnt
        else:
            for free, cnt in ways.items():
                nxt[free] = nxt.get(free, 0) + cnt
                if free:
                    nxt[free - 1] = nxt.get(free - 1, 0) + cnt * free
        ways = nxt
    return sum(ways.values())


def enumerate_contractions(w: Word, guard: int | None = DEFAULT_GUARD) -> Iterator[Contraction]:
    """Yield every contraction of ``w`` once, lexicographically by sorted edge list.

    ``guard=None`` disables the size check.
    """
    if guard is not None:
        total = count_contractions(w)
        if total > guard:
            raise CapacityError(total, guard)
    return _enumerate(w)


def _enumerate(w: Word) -> Iterator[Contraction]:
    annihilators = w.annihilator_positions()
    creators = w.creator_positions()
    used: set[int] = set()
    stack: list[Edge] = []

    def rec(start: int) -> Iterator[Contraction]:
        yield Contraction(tuple(stack))
        for idx in range(start, len(annihilators)):
            left = annihilators[idx]
            for right in creators:
                if right > left and right not in used:
                    used.add(right)
                    stack.append(Edge(left, right))
                    yield from rec(idx + 1)
                    stack.pop()
                    used.discard(right)

    return rec(0)


def contraction_word(w: Word, c: Contraction) -> str:
    """Token string over ``a d e E p``: paired adjacent letters collapse to one ``p``."""
    c.validate(w)
    out = [x.value for x in w.letters]
    for e in c.edges:
        if e.distance == 1:
            out[e.left - 1] = "p"
            out[e.right - 1] = ""
        else:
            out[e.left - 1] = "e"
            out[e.right - 1] = "E"
    return "".join(out)


_PRETTY = {"a": "a", "d": "a†", "e": "e", "E": "e†", "p": "p"}


def pretty_contraction_word(cw: str) -> str:
    return "".join(_PRETTY[t] for t in cw) if cw else "1"


class DotMonomial(NamedTuple):
    """(a†)^v a^u p^w."""

    v: int
    u: int
    w: int


def double_dot(cw: str) -> DotMonomial:
    cnt = Counter(cw)
    return DotMonomial(cnt["d"], cnt["a"], cnt["p"])


def contraction_multiset(w: Word, guard: int | None = DEFAULT_GUARD) -> Counter:
    """Contraction words with multiplicities."""
    return Counter(contraction_word(w, c) for c in enumerate_contractions(w, guard))


def r_degree(c: Contraction) -> int:
    return len(c.edges)


def p_degree(c: Contraction) -> int:
    return sum(1 for e in c.edges if e.distance == 1)


def crossing_number(c: Contraction) -> int:
    es = c.edges
    total = 0
    for x in range(len(es)):
        i, j = es[x]
        for y in range(x + 1, len(es)):
            k, l = es[y]
            if i < k < j < l or k < i < l < j:
                total += 1
    return total


def residual_counts(w: Word, c: Contraction) -> tuple[int, int]:
    """(v, u) left after deleting the contracted letters."""
    n_a, n_c = word_counts(w)
    d = len(c.edges)
    return n_c - d, n_a - d


def contractions_by_degree(w: Word, degree: int,
                           guard: int | None = DEFAULT_GUARD) -> Iterable[Contraction]:
    return (c for c in enumerate_contractions(w, guard) if len(c.edges) == degree)
