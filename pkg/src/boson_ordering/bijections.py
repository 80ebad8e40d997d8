"""Pointer vectors, set partitions with rises, and the maps between them and contractions.

A pointer vector of length n has entries ``E`` (the empty pointer, printed
``e``) or integers, with entry ``i`` in ``{i, ..., n}`` and the integer
entries pairwise distinct.  Vectors of length n-1 with k-1 empty entries
correspond to partitions of [n] into k blocks (pointer chasing) and to
contractions of (a†a)^n with n-k edges (reading off which annihilator each
creator is paired with).  Composing the two carries adjacent edges to rises.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .contractions import Contraction, Edge
from .words import number_operator_word

E = None  # the empty pointer

PointerVector = tuple  # of Optional[int]
SetPartition = tuple  # of tuple[int, ...], blocks ordered by least element


class InvalidVectorError(ValueError):
    pass


class InvalidPartitionError(ValueError):
    pass


def validate_vector(v: Sequence[Optional[int]]) -> PointerVector:
    n = len(v)
    seen = set()
    for i, x in enumerate(v, 1):
        if x is E:
            continue
        if not isinstance(x, int) or not i <= x <= n:
            raise InvalidVectorError(f"entry {i} is {x!r}, expected e or an integer in [{i}, {n}]")
        if x in seen:
            raise InvalidVectorError(f"value {x} repeated")
        seen.add(x)
    return tuple(v)


def e_count(v: Sequence[Optional[int]]) -> int:
    return sum(1 for x in v if x is E)


def enumerate_Fn(n: int) -> Iterator[PointerVector]:
    """All pointer vectors of length n: e first, then integers ascending, position by position."""
    used: set[int] = set()
    cur: list[Optional[int]] = []

    def rec(i: int):
        if i > n:
            yield tuple(cur)
            return
        cur.append(E)
        yield from rec(i + 1)
        cur.pop()
        for x in range(i, n + 1):
            if x not in used:
                used.add(x)
                cur.append(x)
                yield from rec(i + 1)
                cur.pop()
                used.discard(x)

    return rec(1)


def enumerate_Fnk(n: int, k: int) -> Iterator[PointerVector]:
    """Pointer vectors of length n with exactly k empty entries."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return (v for v in enumerate_Fn(n) if e_count(v) == k)


def validate_partition(blocks: Sequence[Sequence[int]], n: int | None = None) -> SetPartition:
    bs = [tuple(sorted(b)) for b in blocks]
    if any(not b for b in bs):
        raise InvalidPartitionError("empty block")
    flat = sorted(x for b in bs for x in b)
    size = len(flat) if n is None else n
    if flat != list(range(1, size + 1)):
        raise InvalidPartitionError(f"blocks do not partition [1..{size}]")
    return tuple(sorted(bs))


def rises(partition: SetPartition) -> int:
    return sum(1 for b in partition for x, y in zip(b, b[1:]) if y == x + 1)


def set_partitions(n: int) -> Iterator[SetPartition]:
    """Every partition of [n] once, built by inserting n+1 into existing blocks or alone."""
    if n == 0:
        yield ()
        return
    for p in set_partitions(n - 1):
        for i in range(len(p)):
            yield tuple(sorted(p[:i] + (p[i] + (n,),) + p[i + 1:]))
        yield p + ((n,),)


def lemma1_forward(v: Sequence[Optional[int]]) -> SetPartition:
    """Pointer vector of length n-1 -> partition of [n] by pointer chasing."""
    v = validate_vector(v)
    ptr = list(v) + [E]
    n = len(ptr)
    placed = [False] * (n + 1)
    blocks = []
    for start in range(1, n + 1):
        if placed[start]:
            continue
        block = []
        cur = start
        while True:
            if placed[cur]:
                raise InvalidVectorError("pointer chain revisits an element")
            placed[cur] = True
            block.append(cur)
            nxt = ptr[cur - 1]
            if nxt is E:
                break
            cur = nxt + 1
        blocks.append(tuple(block))
    return tuple(blocks)


def lemma1_inverse(partition: Sequence[Sequence[int]]) -> PointerVector:
    """Partition of [n] -> pointer vector of length n-1 (successor in block minus one)."""
    p = validate_partition(partition)
    n = sum(len(b) for b in p)
    vec: list[Optional[int]] = [E] * n
    for b in p:
        for x, y in zip(b, b[1:]):
            vec[x - 1] = y - 1
    return tuple(vec[: n - 1])


def _creator_pos(n: int, j: int) -> int:
    return 2 * n - 2 * j + 1


def _annihilator_pos(n: int, i: int) -> int:
    return 2 * n - 2 * i


def lemma2_forward(c: Contraction, n: int) -> PointerVector:
    """Contraction of (a†a)^n -> pointer vector of length n-1.

    Creators are indexed from the right: the j-th sits at ``2n-2j+1``, the
    i-th annihilator slot at ``2n-2i``.
    """
    c.validate(number_operator_word(n))
    partner = {e.right: e.left for e in c.edges}
    vec: list[Optional[int]] = []
    for j in range(1, n):
        left = partner.get(_creator_pos(n, j))
        vec.append(E if left is None else n - left // 2)
    return validate_vector(vec)


def lemma2_inverse(v: Sequence[Optional[int]]) -> Contraction:
    """Pointer vector of length n-1 -> contraction of (a†a)^n."""
    v = validate_vector(v)
    n = len(v) + 1
    edges = [Edge(_annihilator_pos(n, i), _creator_pos(n, j))
             for j, i in enumerate(v, 1) if i is not E]
    c = Contraction(tuple(edges))
    c.validate(number_operator_word(n))
    return c


def contraction_to_partition(c: Contraction, n: int) -> SetPartition:
    return lemma1_forward(lemma2_forward(c, n))


def partition_to_contraction(partition: Sequence[Sequence[int]]) -> Contraction:
    return lemma2_inverse(lemma1_inverse(partition))


def format_vector(v: Sequence[Optional[int]]) -> str:
    return ",".join("e" if x is E else str(x) for x in v)


def parse_vector(text: str) -> PointerVector:
    text = text.strip().strip("()")
    if not text:
        return ()
    out: list[Optional[int]] = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "e":
            out.append(E)
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise InvalidVectorError(f"bad entry {tok!r}") from None
    return validate_vector(out)


def format_partition(p: Sequence[Sequence[int]]) -> str:
    return ",".join("{" + ",".join(map(str, b)) + "}" for b in p)


def parse_partition(text: str) -> SetPartition:
    s = text.replace(" ", "")
    blocks = []
    i = 0
    while i < len(s):
        if s[i] == ",":
            i += 1
            continue
        if s[i] != "{":
            raise InvalidPartitionError(f"expected '{{' at offset {i + 1}")
        j = s.find("}", i)
        if j < 0:
            raise InvalidPartitionError("unterminated block")
        body = s[i + 1:j]
        try:
            blocks.append([int(t) for t in body.split(",") if t])
        except ValueError:
            raise InvalidPartitionError(f"bad block {body!r}") from None
        i = j + 1
    return validate_partition(blocks)

