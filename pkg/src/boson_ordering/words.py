"""Letters, words over {a, a†}, and the textual word grammar.

Grammar (whitespace ignored)::

    word   := factor+
    factor := letter | letter '^' N | '(' word ')' '^' N
    letter := 'a' | 'd'

``a`` is the annihilator and ``d`` the creator (``a†``).  Positions are
1-based, counted left to right in written operator order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

MAX_EXPONENT = 2**31 - 1
MAX_WORD_LENGTH = 10**6


class Letter(enum.Enum):
    ANNIHILATOR = "a"
    CREATOR = "d"

    @property
    def pretty(self) -> str:
        return "a" if self is Letter.ANNIHILATOR else "a†"


A = Letter.ANNIHILATOR
C = Letter.CREATOR


class WordSyntaxError(ValueError):
    """Malformed word text; ``offset`` is the 1-based character position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not isinstance(x, Letter):
                raise TypeError(f"not a letter: {x!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, pos: int) -> Letter:
        """Letter at 1-based position ``pos``."""
        if not 1 <= pos <= len(self.letters):
            raise IndexError(f"position {pos} outside 1..{len(self.letters)}")
        return self.letters[pos - 1]

    def annihilator_positions(self) -> list[int]:
        return [i for i, x in enumerate(self.letters, 1) if x is A]

    def creator_positions(self) -> list[int]:
        return [i for i, x in enumerate(self.letters, 1) if x is C]

    def render(self) -> str:
        return "".join(x.value for x in self.letters)

    def pretty(self) -> str:
        return " ".join(x.pretty for x in self.letters)

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "Word":
        return parse_word(text)


def parse_word(text: str, max_length: int = MAX_WORD_LENGTH) -> Word:
    """Parse and fully expand ``text``, e.g. ``"(da)^3"`` -> d a d a d a."""
    toks = [(i + 1, ch) for i, ch in enumerate(text) if not ch.isspace()]
    parser = _Parser(toks, len(text) + 1, max_length)
    letters = parser.word()
    if parser.i < len(toks):
        pos, ch = toks[parser.i]
        raise WordSyntaxError(f"unexpected {ch!r}", pos)
    return Word(tuple(letters))


class _Parser:
    def __init__(self, toks, end_offset, max_length):
        self.toks = toks
        self.i = 0
        self.end = end_offset
        self.max_length = max_length

    def _peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (self.end, "")

    def word(self) -> list[Letter]:
        out: list[Letter] = []
        while True:
            pos, ch = self._peek()
            if ch in ("a", "d", "("):
                out.extend(self.factor())
                if len(out) > self.max_length:
                    raise WordSyntaxError(
                        f"expanded word longer than {self.max_length}", pos)
            else:
                break
        if not out:
            pos, ch = self._peek()
            what = repr(ch) if ch else "end of input"
            raise WordSyntaxError(f"expected a letter or '(' but found {what}", pos)
        return out

    def factor(self) -> list[Letter]:
        pos, ch = self._peek()
        self.i += 1
        if ch == "(":
            body = self.word()
            cpos, close = self._peek()
            if close != ")":
                raise WordSyntaxError("expected ')'", cpos)
            self.i += 1
            hpos, hat = self._peek()
            if hat != "^":
                raise WordSyntaxError("group must be followed by '^'", hpos)
            return self._repeat(body, pos)
        letter = A if ch == "a" else C
        if self._peek()[1] == "^":
            return self._repeat([letter], pos)
        return [letter]

    def _repeat(self, body: list[Letter], pos: int) -> list[Letter]:
        n = self.exponent()
        if len(body) * n > self.max_length:
            raise WordSyntaxError(f"expanded word longer than {self.max_length}", pos)
        return body * n

    def exponent(self) -> int:
        self.i += 1  # the '^'
        start, _ = self._peek()
        digits = ""
        while self._peek()[1].isdigit():
            digits += self._peek()[1]
            self.i += 1
        if not digits:
            raise WordSyntaxError("expected a positive integer exponent", start)
        n = int(digits)
        if n == 0:
            raise WordSyntaxError("exponent must be positive", start)
        if n > MAX_EXPONENT:
            raise WordSyntaxError("exponent exceeds 32-bit bound", start)
        return n


def number_operator_word(n: int) -> Word:
    """The word (a†a)^n: creator, annihilator repeated n times."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Word((C, A) * n)


def word_counts(w: Word) -> tuple[int, int]:
    """(number of annihilators, number of creators)."""
    n_a = sum(1 for x in w.letters if x is A)
    return n_a, len(w.letters) - n_a
