"""Words over the two-letter alphabet {X, Y} and exact free-algebra polynomials.

Words are bit-packed (X=0, Y=1, first letter in the most significant bit) so
that for a fixed length the integer order of the packed bits is exactly the
lexicographic order with X < Y, and concatenation is a shift-or.  A FreePoly
is a finite sum of words with non-zero Fraction coefficients; multiplication
concatenates words.  Everything here is immutable and exact.
"""

from __future__ import annotations

import re
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Coeff = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Letter(IntEnum):
    X = 0
    Y = 1

    def __str__(self) -> str:
        return self.name


X = Letter.X
Y = Letter.Y


class WordParseError(ValueError):
    """Raised when word text does not match the X/Y/X^k/Y^k grammar."""

    def __init__(self, text: str, position: int, message: str):
        super().__init__(f"cannot parse {text!r} at position {position}: {message}")
        self.position = position


class Word(NamedTuple):
    """An immutable word over {X, Y}, packed as (length, bits)."""

    length: int
    bits: int

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        bits = 0
        n = 0
        for letter in letters:
            bits = (bits << 1) | int(letter)
            n += 1
        return cls(n, bits)

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[Letter, int]]) -> "Word":
        bits = 0
        n = 0
        for letter, mult in runs:
            if mult < 1:
                raise ValueError(f"run multiplicity must be >= 1, got {mult}")
            if letter == Y:
                bits = (bits << mult) | ((1 << mult) - 1)
            else:
                bits <<= mult
            n += mult
        return cls(n, bits)

    def letter(self, i: int) -> Letter:
        if not 0 <= i < self.length:
            raise IndexError(f"letter index {i} out of range for length {self.length}")
        return Letter((self.bits >> (self.length - 1 - i)) & 1)

    def letters(self) -> Iterator[Letter]:
        for i in range(self.length - 1, -1, -1):
            yield Letter((self.bits >> i) & 1)

    @property
    def count_y(self) -> int:
        return self.bits.bit_count()

    @property
    def count_x(self) -> int:
        return self.length - self.bits.bit_count()

    def concat(self, other: "Word") -> "Word":
        return Word(self.length + other.length, (self.bits << other.length) | other.bits)

    def __str__(self) -> str:
        return word_format(self)


EMPTY_WORD = Word(0, 0)


class RunWord(NamedTuple):
    """Run-length form of a word: maximal runs (letter, multiplicity)."""

    runs: tuple[tuple[Letter, int], ...]

    @classmethod
    def from_word(cls, w: Word) -> "RunWord":
        runs: list[tuple[Letter, int]] = []
        for letter in w.letters():
            if runs and runs[-1][0] == letter:
                runs[-1] = (letter, runs[-1][1] + 1)
            else:
                runs.append((letter, 1))
        return cls(tuple(runs))

    @classmethod
    def from_runs(cls, runs: Iterable[tuple[Letter, int]]) -> "RunWord":
        runs = tuple((Letter(letter), mult) for letter, mult in runs)
        if any(a[0] == b[0] for a, b in zip(runs, runs[1:])):
            raise ValueError("adjacent runs must use distinct letters")
        if any(mult < 1 for _, mult in runs):
            raise ValueError("run multiplicities must be >= 1")
        return cls(runs)

    def to_word(self) -> Word:
        return Word.from_runs(self.runs)

    @property
    def run_count(self) -> int:
        return len(self.runs)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(mult for _, mult in self.runs)


_WORD_TOKEN = re.compile(r"([XY])(?:\^(\d+))?")


def word_parse(text: str) -> Word:
    """Parse word text: a concatenation of X, Y, X^k, Y^k tokens (k >= 1)."""
    bits = 0
    n = 0
    pos = 0
    while pos < len(text):
        m = _WORD_TOKEN.match(text, pos)
        if m is None:
            raise WordParseError(text, pos, "expected X, Y, X^k, or Y^k")
        letter = X if m.group(1) == "X" else Y
        mult = 1 if m.group(2) is None else int(m.group(2))
        if mult < 1:
            raise WordParseError(text, pos, "exponent must be >= 1")
        if letter == Y:
            bits = (bits << mult) | ((1 << mult) - 1)
        else:
            bits <<= mult
        n += mult
        pos = m.end()
    return Word(n, bits)


def word_format(w: Word) -> str:
    """Canonical run-length text of a word; the empty word formats as ''."""
    parts = []
    for letter, mult in RunWord.from_word(w).runs:
        parts.append(letter.name if mult == 1 else f"{letter.name}^{mult}")
    return "".join(parts)


def interchange(w: Word) -> Word:
    """Flip every letter X <-> Y."""
    return Word(w.length, w.bits ^ ((1 << w.length) - 1))


def reverse(w: Word) -> Word:
    """Reverse the order of the letters."""
    bits = 0
    src = w.bits
    for _ in range(w.length):
        bits = (bits << 1) | (src & 1)
        src >>= 1
    return Word(w.length, bits)


def cyclic_shift(w: Word) -> Word:
    """Move the first letter to the end: L1 L2 ... Ln -> L2 ... Ln L1."""
    if w.length == 0:
        raise ValueError("cyclic shift of the empty word is undefined")
    top = 1 << (w.length - 1)
    first = 1 if w.bits & top else 0
    return Word(w.length, ((w.bits & (top - 1)) << 1) | first)


def all_words(n: int) -> Iterator[Word]:
    """All 2^n words of length n, in lexicographic order with X < Y."""
    for bits in range(1 << n):
        yield Word(n, bits)


class FreePoly:
    """A finite formal sum of words with non-zero rational coefficients.

    Supports + and - between polynomials, * for both scalar multiplication and
    the (noncommutative) concatenation product of polynomials.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Coeff] | Iterable[tuple[Word, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Word, Fraction] = {}
        for word, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                prev = out.get(word)
                if prev is None:
                    out[word] = coeff
                else:
                    total = prev + coeff
                    if total:
                        out[word] = total
                    else:
                        del out[word]
        self._terms = out

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction]) -> "FreePoly":
        poly = object.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> "FreePoly":
        return _ZERO_POLY

    @classmethod
    def one(cls) -> "FreePoly":
        return _ONE_POLY

    @classmethod
    def from_word(cls, w: Word, coeff: Coeff = 1) -> "FreePoly":
        coeff = Fraction(coeff)
        return cls._raw({w: coeff}) if coeff else _ZERO_POLY

    @classmethod
    def from_letter(cls, letter: Letter) -> "FreePoly":
        return cls._raw({Word(1, int(letter)): _ONE})

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, _ZERO)

    def items(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items())

    def words(self) -> Iterator[Word]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FreePoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "FreePoly") -> "FreePoly":
        if not isinstance(other, FreePoly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            prev = out.get(word)
            if prev is None:
                out[word] = coeff
            else:
                total = prev + coeff
                if total:
                    out[word] = total
                else:
                    del out[word]
        return FreePoly._raw(out)

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        if not isinstance(other, FreePoly):
            return NotImplemented
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            prev = out.get(word)
            if prev is None:
                out[word] = -coeff
            else:
                total = prev - coeff
                if total:
                    out[word] = total
                else:
                    del out[word]
        return FreePoly._raw(out)

    def __neg__(self) -> "FreePoly":
        return FreePoly._raw({w: -c for w, c in self._terms.items()})

    def scale(self, scalar: Coeff) -> "FreePoly":
        scalar = Fraction(scalar)
        if not scalar:
            return _ZERO_POLY
        return FreePoly._raw({w: c * scalar for w, c in self._terms.items()})

    def __mul__(self, other: "FreePoly | Coeff") -> "FreePoly":
        if isinstance(other, FreePoly):
            if not self._terms or not other._terms:
                return _ZERO_POLY
            out: dict[Word, Fraction] = {}
            get = out.get
            for (l1, b1), c1 in self._terms.items():
                for (l2, b2), c2 in other._terms.items():
                    word = Word(l1 + l2, (b1 << l2) | b2)
                    coeff = c1 * c2
                    prev = get(word)
                    if prev is None:
                        out[word] = coeff
                    else:
                        total = prev + coeff
                        if total:
                            out[word] = total
                        else:
                            del out[word]
            return FreePoly._raw(out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Coeff) -> "FreePoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def homogeneous(self, n: int) -> "FreePoly":
        """The degree-n part: exactly the words of length n."""
        return FreePoly._raw({w: c for w, c in self._terms.items() if w.length == n})

    def degrees(self) -> set[int]:
        return {w.length for w in self._terms}

    def homogeneous_degree(self) -> int | None:
        """The common word length, if the polynomial is homogeneous (zero -> 0)."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None

    def split_by_content(self) -> dict[tuple[int, int], "FreePoly"]:
        """Group terms by letter content (count of X, count of Y)."""
        groups: dict[tuple[int, int], dict[Word, Fraction]] = {}
        for word, coeff in self._terms.items():
            groups.setdefault((word.count_x, word.count_y), {})[word] = coeff
        return {key: FreePoly._raw(terms) for key, terms in sorted(groups.items())}

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"FreePoly({format_poly(self)})"


_ZERO_POLY = FreePoly._raw({})
_ONE_POLY = FreePoly._raw({EMPTY_WORD: _ONE})


def format_poly(p: FreePoly) -> str:
    """Render a polynomial in canonical word order, e.g. '1/2*XY - 1/2*YX'."""
    if p.is_zero():
        return "0"
    parts: list[tuple[str, str]] = []
    for word, coeff in p.sorted_items():
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        if word.length == 0:
            body = str(mag)
        elif mag == 1:
            body = word_format(word)
        else:
            body = f"{mag}*{word_format(word)}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    rendered = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        rendered += f" {sign} {body}"
    return rendered
