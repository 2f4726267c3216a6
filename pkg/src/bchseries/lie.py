"""Right-nested commutator expansion and checks of commutator-form claims.

[L1 L2 ... Ln] denotes the right-nested ("long") commutator
[L1,[L2,[...,[L_{n-1},Ln]...]]]; a CommPoly is a linear combination of such
brackets indexed by words.  Equality of commutator expressions is decided by
expanding into the free algebra, which also gives the Dynkin-Specht-Wever
test for whether a homogeneous polynomial is a Lie element.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .algebra import Coeff, FreePoly, Word, word_format, word_parse
from .engine import PRESETS, series_term

_ZERO = Fraction(0)


class CommPoly:
    """A linear combination sum c_w [w] of right-nested commutators."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Coeff] | Iterable[tuple[Word, Coeff]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Word, Fraction] = {}
        for word, coeff in items:
            if word.length < 1:
                raise ValueError("commutator words must have length >= 1")
            coeff = Fraction(coeff)
            if coeff:
                total = out.get(word, _ZERO) + coeff
                if total:
                    out[word] = total
                else:
                    del out[word]
        self._terms = out

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, _ZERO)

    def items(self):
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        # term-by-term equality; equality as Lie elements is decided by expand()
        if isinstance(other, CommPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def expand(self) -> FreePoly:
        return expand_comm_poly(self)

    def __str__(self) -> str:
        return format_comm_poly(self)

    def __repr__(self) -> str:
        return f"CommPoly({format_comm_poly(self)})"


@lru_cache(maxsize=None)
def expand_nested(w: Word) -> FreePoly:
    """Expand the right-nested commutator [w] into the free algebra."""
    if w.length < 1:
        raise ValueError("cannot expand the commutator of the empty word")
    if w.length == 1:
        return FreePoly.from_word(w)
    head = FreePoly.from_word(Word(1, (w.bits >> (w.length - 1)) & 1))
    rest = expand_nested(Word(w.length - 1, w.bits & ((1 << (w.length - 1)) - 1)))
    return head * rest - rest * head


def expand_comm_poly(p: CommPoly) -> FreePoly:
    """Linear extension: sum of c_w * expand_nested(w)."""
    acc = FreePoly.zero()
    for word, coeff in p.sorted_items():
        acc = acc + expand_nested(word).scale(coeff)
    return acc


def rewrite_identity_check(w1: Word, w2: Word) -> bool:
    """Check [w1 X Y w2] = [w1 Y X w2] + [w1 [X,Y] w2] after expansion.

    The middle [X,Y] block is spliced bilinearly as the two words XY - YX.
    """
    xy = word_parse("XY")
    yx = word_parse("YX")
    lhs_word = w1.concat(xy).concat(w2)
    rhs_word = w1.concat(yx).concat(w2)
    lhs = expand_nested(lhs_word)
    spliced = expand_nested(lhs_word) - expand_nested(rhs_word)
    rhs = expand_nested(rhs_word) + spliced
    return lhs == rhs


def dynkin_series(n: int) -> CommPoly:
    """(1/n) sum over |w| = n of g(w) [w], with g from the matrix engine."""
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    body = series_term(PRESETS["standard"], n)
    scale = Fraction(1, n)
    return CommPoly({w: c * scale for w, c in body.items()})


def verify_commutator_form(claimed: CommPoly, word_form: FreePoly) -> bool:
    """Whether the claimed commutator form expands exactly to the word form."""
    return expand_comm_poly(claimed) == word_form


def commutator_form_diff(claimed: CommPoly, word_form: FreePoly) -> FreePoly:
    """expand(claimed) - word_form; zero exactly when the claim verifies."""
    return expand_comm_poly(claimed) - word_form


def is_lie_element(p: FreePoly) -> bool:
    """Dynkin-Specht-Wever test on a homogeneous polynomial.

    A homogeneous p of degree n >= 1 is a Lie element iff bracketing every
    word (left-to-right, right-nested) returns n * p.  The zero polynomial
    counts as a Lie element; non-homogeneous input raises.
    """
    degree = p.homogeneous_degree()
    if degree is None:
        raise ValueError("is_lie_element needs a homogeneous polynomial")
    if degree == 0:
        return p.is_zero()
    bracketed = expand_comm_poly(CommPoly(dict(p.items())))
    return bracketed == p.scale(degree)


def lie_content_check(p: FreePoly) -> dict[tuple[int, int], bool]:
    """Run the Lie-element test separately on each fixed-letter-content piece."""
    return {
        content: is_lie_element(piece)
        for content, piece in p.split_by_content().items()
    }


_COMM_TERM = re.compile(
    r"""
    \s*(?P<sign>[+-])?\s*
    (?:(?P<num>\d+)(?:/(?P<den>\d+))?\s*\*?\s*)?
    \[(?P<word>[^\]]*)\]
    """,
    re.VERBOSE,
)


def comm_parse(text: str) -> CommPoly:
    """Parse commutator-form text like '-1/720*[X^4Y] + 6/720*[XYXYX]'."""
    terms: list[tuple[Word, Fraction]] = []
    pos = 0
    first = True
    while pos < len(text):
        m = _COMM_TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse commutator expression {text!r} at position {pos}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(
                f"missing + or - between terms in {text!r} at position {pos}"
            )
        coeff = Fraction(int(m.group("num") or 1), int(m.group("den") or 1))
        if sign == "-":
            coeff = -coeff
        terms.append((word_parse(m.group("word")), coeff))
        pos = m.end()
        first = False
    if not terms and text.strip():
        raise ValueError(f"cannot parse commutator expression {text!r}")
    return CommPoly(terms)


def format_comm_poly(p: CommPoly) -> str:
    """Render in the comm_parse syntax, words in canonical order."""
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for word, coeff in p.sorted_items():
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        body = f"[{word_format(word)}]" if mag == 1 else f"{mag}*[{word_format(word)}]"
        chunks.append(f"{sign} {body}")
    rendered = " ".join(chunks)
    return rendered[2:] if rendered.startswith("+ ") else "-" + rendered[2:]
