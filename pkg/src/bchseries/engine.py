"""Series terms via nilpotent-matrix exponentials and logarithms.

The degree-1..N terms of ln(prod_i exp(a_i X + b_i Y)) are read off the first
row of the matrix logarithm of a product of exponentials of (N+1)x(N+1)
strictly upper-triangular generator matrices.  Both exp and log are finite
sums because every strictly upper-triangular matrix of order N+1 is nilpotent
of index <= N+1.  Entries are genuinely noncommutative FreePoly values, so no
positional decoration of the generators is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, NamedTuple, Sequence

from .algebra import Coeff, FreePoly, Letter, Word

_ONE = Fraction(1)


class ExpFactor(NamedTuple):
    """One factor exp(a*X + b*Y) in a product of exponentials."""

    a: Fraction
    b: Fraction


def exp_factor(a: Coeff, b: Coeff) -> ExpFactor:
    return ExpFactor(Fraction(a), Fraction(b))


@dataclass(frozen=True)
class VariantPreset:
    """A named ordered product of exponentials whose log defines a series."""

    name: str
    factors: tuple[ExpFactor, ...]


PRESETS: dict[str, VariantPreset] = {
    preset.name: preset
    for preset in (
        VariantPreset("standard", (exp_factor(1, 0), exp_factor(0, 1))),
        VariantPreset(
            "symmetric",
            (exp_factor(Fraction(1, 2), 0), exp_factor(0, 1), exp_factor(Fraction(1, 2), 0)),
        ),
        VariantPreset(
            "loop",
            (exp_factor(1, 0), exp_factor(0, 1), exp_factor(-1, 0), exp_factor(0, -1)),
        ),
        VariantPreset(
            "triangular",
            (exp_factor(-1, 0), exp_factor(1, 1), exp_factor(0, -1)),
        ),
        VariantPreset("sum_difference", (exp_factor(1, 1), exp_factor(1, -1))),
        VariantPreset(
            "highly_symmetrized",
            (
                exp_factor(Fraction(-1, 2), Fraction(-1, 2)),
                exp_factor(Fraction(1, 2), 0),
                exp_factor(0, 1),
                exp_factor(Fraction(1, 2), 0),
                exp_factor(Fraction(-1, 2), Fraction(-1, 2)),
            ),
        ),
        VariantPreset(
            "symmetric_sum_difference",
            (
                exp_factor(Fraction(1, 2), Fraction(-1, 2)),
                exp_factor(1, 1),
                exp_factor(Fraction(1, 2), Fraction(-1, 2)),
            ),
        ),
        VariantPreset(
            "highly_symmetrized_sum_difference",
            (
                exp_factor(-1, 0),
                exp_factor(Fraction(1, 2), Fraction(-1, 2)),
                exp_factor(1, 1),
                exp_factor(Fraction(1, 2), Fraction(-1, 2)),
                exp_factor(-1, 0),
            ),
        ),
    )
}

PRESET_NAMES: tuple[str, ...] = tuple(PRESETS)


def preset(name: str) -> VariantPreset:
    """Look up one of the built-in variant presets by name."""
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}") from None


class SeriesTerm(NamedTuple):
    """The homogeneous degree-n term of a series."""

    degree: int
    body: FreePoly


class UTMatrix:
    """A square matrix of FreePoly entries, sized (N+1)x(N+1) for degree N."""

    __slots__ = ("order", "rows")

    def __init__(self, rows: Sequence[Sequence[FreePoly]]):
        order = len(rows)
        if any(len(row) != order for row in rows):
            raise ValueError("matrix must be square")
        self.order = order
        self.rows = tuple(tuple(row) for row in rows)

    @classmethod
    def zeros(cls, order: int) -> "UTMatrix":
        zero = FreePoly.zero()
        return cls([[zero] * order for _ in range(order)])

    @classmethod
    def identity(cls, order: int) -> "UTMatrix":
        zero = FreePoly.zero()
        one = FreePoly.one()
        return cls([[one if i == j else zero for j in range(order)] for i in range(order)])

    def entry(self, i: int, j: int) -> FreePoly:
        return self.rows[i][j]

    @property
    def degree(self) -> int:
        """The truncation degree N (order minus one)."""
        return self.order - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UTMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: "UTMatrix") -> "UTMatrix":
        self._check_order(other)
        return UTMatrix(
            [
                [a + b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "UTMatrix") -> "UTMatrix":
        self._check_order(other)
        return UTMatrix(
            [
                [a - b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self.rows, other.rows)
            ]
        )

    def scale(self, scalar: Coeff) -> "UTMatrix":
        return UTMatrix([[entry.scale(scalar) for entry in row] for row in self.rows])

    def __matmul__(self, other: "UTMatrix") -> "UTMatrix":
        self._check_order(other)
        n = self.order
        zero = FreePoly.zero()
        out = []
        for i in range(n):
            row_i = self.rows[i]
            out_row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    left = row_i[k]
                    if not left:
                        continue
                    right = other.rows[k][j]
                    if right:
                        acc = acc + left * right
                out_row.append(acc)
            out.append(out_row)
        return UTMatrix(out)

    def _check_order(self, other: "UTMatrix") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def is_strictly_upper(self) -> bool:
        return all(
            self.rows[i][j].is_zero()
            for i in range(self.order)
            for j in range(self.order)
            if j <= i
        )

    def has_unit_diagonal(self) -> bool:
        one = FreePoly.one()
        return all(
            (self.rows[i][j] == one if i == j else self.rows[i][j].is_zero())
            for i in range(self.order)
            for j in range(self.order)
            if j <= i
        )

    def is_graded(self) -> bool:
        """Whether every entry (i, j) is homogeneous of word degree j - i."""
        for i in range(self.order):
            for j in range(self.order):
                entry = self.rows[i][j]
                if j < i:
                    if not entry.is_zero():
                        return False
                elif any(w.length != j - i for w in entry.words()):
                    return False
        return True


def build_generator(letter: Letter, degree: int) -> UTMatrix:
    """The (N+1)x(N+1) generator: the given letter on the first superdiagonal."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    mono = FreePoly.from_letter(letter)
    zero = FreePoly.zero()
    order = degree + 1
    return UTMatrix(
        [[mono if j == i + 1 else zero for j in range(order)] for i in range(order)]
    )


def generator_combination(a: Coeff, b: Coeff, degree: int) -> UTMatrix:
    """The matrix a*X_N + b*Y_N: a X + b Y on the first superdiagonal."""
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    combo = FreePoly({Word(1, 0): Fraction(a), Word(1, 1): Fraction(b)})
    zero = FreePoly.zero()
    order = degree + 1
    return UTMatrix(
        [[combo if j == i + 1 else zero for j in range(order)] for i in range(order)]
    )


def nilpotent_exp(m: UTMatrix) -> UTMatrix:
    """exp(M) = I + M + M^2/2! + ... + M^N/N! for strictly upper-triangular M."""
    if not m.is_strictly_upper():
        raise ValueError("nilpotent_exp requires a strictly upper-triangular matrix")
    acc = UTMatrix.identity(m.order)
    power = None
    for k in range(1, m.order):
        power = m if power is None else power @ m
        acc = acc + power.scale(Fraction(1, factorial(k)))
    return acc


def nilpotent_log(p: UTMatrix) -> UTMatrix:
    """log(P) = sum_{k=1}^{N} (-1)^(k-1) (P - I)^k / k for unit-diagonal P."""
    if not p.has_unit_diagonal():
        raise ValueError("nilpotent_log requires a unit diagonal and zero entries below it")
    a = p - UTMatrix.identity(p.order)
    acc = UTMatrix.zeros(p.order)
    power = None
    for k in range(1, p.order):
        power = a if power is None else power @ a
        acc = acc + power.scale(Fraction((-1) ** (k - 1), k))
    return acc


def factor_matrix(factor: ExpFactor, degree: int) -> UTMatrix:
    """exp(a*X_N + b*Y_N) for one preset factor."""
    return nilpotent_exp(generator_combination(factor.a, factor.b, degree))


def product_matrix(factors: Iterable[ExpFactor], degree: int) -> UTMatrix:
    """The ordered product of the factor exponentials."""
    acc = UTMatrix.identity(degree + 1)
    for factor in factors:
        acc = acc @ factor_matrix(factor, degree)
    return acc


def _log_first_row(p: UTMatrix) -> list[FreePoly]:
    """First row of nilpotent_log(p) by row-vector propagation.

    Returns the same values as reading row 0 of the full log matrix, without
    forming the full powers of P - I.
    """
    order = p.order
    zero = FreePoly.zero()
    one = FreePoly.one()
    a_rows = [
        [entry - one if i == j else entry for j, entry in enumerate(row)]
        for i, row in enumerate(p.rows)
    ]
    current = list(a_rows[0])
    acc = list(current)
    for k in range(2, order):
        nxt = [zero] * order
        for j in range(k, order):
            total = zero
            for c in range(k - 1, j):
                left = current[c]
                if not left:
                    continue
                right = a_rows[c][j]
                if right:
                    total = total + left * right
            nxt[j] = total
        current = nxt
        coeff = Fraction((-1) ** (k - 1), k)
        for j in range(k, order):
            if current[j]:
                acc[j] = acc[j] + current[j].scale(coeff)
    return acc


@lru_cache(maxsize=None)
def _cached_series(factors: tuple[ExpFactor, ...], degree: int) -> tuple[SeriesTerm, ...]:
    p = product_matrix(factors, degree)
    first_row = _log_first_row(p)
    return tuple(SeriesTerm(n, first_row[n]) for n in range(1, degree + 1))


def series_terms(
    variant: VariantPreset, degree: int, *, full_matrix: bool = False
) -> tuple[SeriesTerm, ...]:
    """The homogeneous terms of degrees 1..N of the variant's series.

    The default path propagates only the first row through the logarithm; with
    full_matrix=True the entire log matrix is formed instead.  Both paths
    produce identical terms.
    """
    if degree < 1:
        raise ValueError(f"degree must be >= 1, got {degree}")
    if full_matrix:
        z = nilpotent_log(product_matrix(variant.factors, degree))
        return tuple(SeriesTerm(n, z.entry(0, n)) for n in range(1, degree + 1))
    return _cached_series(tuple(variant.factors), degree)


def series_term(variant: VariantPreset, degree: int) -> FreePoly:
    """The single degree-n term of the variant's series."""
    return series_terms(variant, degree)[degree - 1].body


def engine_coefficient(w: Word) -> Fraction:
    """The coefficient of word w in the standard-product series, via the matrices."""
    if w.length < 1:
        raise ValueError("coefficient of the empty word is undefined")
    return series_term(PRESETS["standard"], w.length).coeff(w)
