"""Direct computation of word coefficients from the explicit block-sum formula.

For a word w of length n the coefficient is

    g(w) = sum_{k=K}^{n} (-1)^(k-1)/k *
           sum over block sequences (r_1,s_1),...,(r_k,s_k) with r_i+s_i > 0
           whose literal expansion X^{r_1}Y^{s_1}...X^{r_k}Y^{s_k} equals w
           of 1/(r_1! s_1! ... r_k! s_k!),

where K is the number of blocks in w's own X-first block normal form.  Two
independent enumeration routes are provided: a dynamic program over letter
positions (the workhorse) and a brute-force filter over all block sequences
(feasible for short words, used to validate the dynamic program).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterator, NamedTuple, Sequence

from .algebra import Letter, Word, X, Y

_ZERO = Fraction(0)
_ONE = Fraction(1)

Block = tuple[int, int]


class BlockSeq(NamedTuple):
    """A sequence of blocks (r_i, s_i) denoting X^{r_i} Y^{s_i} factors."""

    blocks: tuple[Block, ...]

    @classmethod
    def of(cls, blocks: Sequence[Block]) -> "BlockSeq":
        blocks = tuple((int(r), int(s)) for r, s in blocks)
        for r, s in blocks:
            if r < 0 or s < 0:
                raise ValueError("block exponents must be non-negative")
            if r + s == 0:
                raise ValueError("every block must satisfy r + s > 0")
        return cls(blocks)

    @property
    def total_degree(self) -> int:
        return sum(r + s for r, s in self.blocks)


class GoldbergValue(NamedTuple):
    """A word's coefficient together with its normal-form block count."""

    word: Word
    value: Fraction
    block_count: int


def collapse(bs: BlockSeq) -> Word:
    """Expand X^{r_1}Y^{s_1}...X^{r_k}Y^{s_k} literally into a word."""
    runs = []
    for r, s in bs.blocks:
        if r:
            runs.append((X, r))
        if s:
            runs.append((Y, s))
    return Word.from_runs(runs)


def block_normal_form(w: Word) -> tuple[Block, ...]:
    """w's X-first block form X^{p_1}Y^{q_1}...X^{p_K}Y^{q_K}.

    Only p_1 and/or q_K may be zero; all interior exponents are positive.
    """
    blocks: list[Block] = []
    pending_x: int | None = None
    for letter, mult in _runs(w):
        if letter == X:
            if pending_x is not None:
                blocks.append((pending_x, 0))
            pending_x = mult
        else:
            blocks.append((pending_x if pending_x is not None else 0, mult))
            pending_x = None
    if pending_x is not None:
        blocks.append((pending_x, 0))
    return tuple(blocks)


def block_count(w: Word) -> int:
    """K, the number of blocks in the X-first normal form."""
    return len(block_normal_form(w))


def _runs(w: Word) -> Iterator[tuple[Letter, int]]:
    prev: Letter | None = None
    count = 0
    for letter in w.letters():
        if letter == prev:
            count += 1
        else:
            if prev is not None:
                yield prev, count
            prev = letter
            count = 1
    if prev is not None:
        yield prev, count


@lru_cache(maxsize=None)
def _inverse_factorials(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1, factorial(i)) for i in range(n + 1))


def goldberg_value(w: Word) -> GoldbergValue:
    """The coefficient of w computed from the explicit block sum, plus K."""
    n = w.length
    if n < 1:
        raise ValueError("the coefficient of the empty word is undefined")
    letters = tuple(w.letters())
    # xrun[u] / yrun[u]: consecutive same letters starting at position u
    xrun = [0] * (n + 1)
    yrun = [0] * (n + 1)
    for u in range(n - 1, -1, -1):
        if letters[u] == X:
            xrun[u] = xrun[u + 1] + 1
        else:
            yrun[u] = yrun[u + 1] + 1
    inv_fact = _inverse_factorials(n)

    k_min = block_count(w)
    total = _ZERO
    # state[u] = sum over fillings of the blocks so far that spell w[:u]
    state: list[Fraction] = [_ZERO] * (n + 1)
    state[0] = _ONE
    for k in range(1, n + 1):
        half = [_ZERO] * (n + 1)
        for u, value in enumerate(state):
            if value:
                for r in range(xrun[u] + 1):
                    half[u + r] += value * inv_fact[r]
        nxt = [_ZERO] * (n + 1)
        for u, value in enumerate(half):
            if value:
                for s in range(yrun[u] + 1):
                    nxt[u + s] += value * inv_fact[s]
        # remove the (r, s) = (0, 0) path: blocks must be non-empty
        for u, value in enumerate(state):
            if value:
                nxt[u] -= value
        state = nxt
        if state[n]:
            if k < k_min:
                raise AssertionError(
                    f"block filling with k={k} < K={k_min} for word {w}"
                )
            total += Fraction((-1) ** (k - 1), k) * state[n]
    return GoldbergValue(w, total, k_min)


def goldberg_direct(w: Word) -> Fraction:
    """The coefficient of w in the standard-product series, from the block sum."""
    return goldberg_value(w).value


def enumerate_block_seqs(total: int, k: int) -> Iterator[BlockSeq]:
    """All sequences of k blocks (r, s), each with r + s > 0, of given total degree."""
    if k < 1 or total < k:
        return
    for sizes in _compositions(total, k):
        pools = [[(r, size - r) for r in range(size + 1)] for size in sizes]
        for blocks in product(*pools):
            yield BlockSeq(tuple(blocks))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def goldberg_direct_naive(w: Word) -> Fraction:
    """Brute-force route: enumerate every block sequence and filter by collapse.

    Exponential in the word length; intended as an independent check of
    goldberg_direct on short words.
    """
    n = w.length
    if n < 1:
        raise ValueError("the coefficient of the empty word is undefined")
    total = _ZERO
    for k in range(1, n + 1):
        k_sum = _ZERO
        for bs in enumerate_block_seqs(n, k):
            if collapse(bs) == w:
                weight = _ONE
                for r, s in bs.blocks:
                    weight /= factorial(r) * factorial(s)
                k_sum += weight
        total += Fraction((-1) ** (k - 1), k) * k_sum
    return total


_BERNOULLI_CACHE: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n in the convention with B_1 = -1/2."""
    if n < 0:
        raise ValueError(f"Bernoulli numbers need n >= 0, got {n}")
    while len(_BERNOULLI_CACHE) <= n:
        m = len(_BERNOULLI_CACHE)
        acc = _ZERO
        for j, b in enumerate(_BERNOULLI_CACHE):
            if b:
                acc += comb(m + 1, j) * b
        _BERNOULLI_CACHE.append(-acc / (m + 1))
    return _BERNOULLI_CACHE[n]


def goldberg_xy(a: int, b: int) -> Fraction:
    """Closed form for the coefficient of X^a Y^b via Bernoulli numbers."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be non-negative")
    if a + b < 1:
        raise ValueError("need a + b >= 1")
    if b == 0:
        # the closed form needs b >= 1; X^a and Y^a share one coefficient
        a, b = b, a
    acc = _ZERO
    for i in range(1, b + 1):
        acc += comb(b, i) * bernoulli(a + b - i)
    return Fraction((-1) ** a, factorial(a) * factorial(b)) * acc


def goldberg_xy_images(a: int, b: int) -> dict[Word, Fraction]:
    """The four words X^aY^b, X^bY^a, Y^aX^b, Y^bX^a with their coefficients."""
    base = goldberg_xy(a, b)
    flipped = base if (a + b) % 2 else -base
    images: dict[Word, Fraction] = {}
    for first, second, value in (
        ((X, a), (Y, b), base),
        ((X, b), (Y, a), base),
        ((Y, a), (X, b), flipped),
        ((Y, b), (X, a), flipped),
    ):
        runs = [run for run in (first, second) if run[1] > 0]
        images[Word.from_runs(runs)] = value
    return images
