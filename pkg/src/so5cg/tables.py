"""Closed-form coefficient tables for the fourteen coupling channels.

A coupling channel is a table of fourteen rows, one per (so4-shift, part)
entry.  A row evaluates, at source irrep spins (b1, b2) and source SO(4)
spins (j1, j2), to

    sign * scale * prod(outer) * poly * sqrt(srad * prod(num) / prod(den))

where ``outer``, ``num`` and ``den`` are integer-coefficient linear forms
in (j1, j2, b1, b2).  Each channel also carries an overall normalization

    norm_scale * sqrt(norm_srad / prod(norm_factors))

whose factors depend on (b1, b2) only; the channel is present in a given
source exactly when every normalization factor is positive.

All arithmetic is exact: values are SqrtSum instances and never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .errors import ChannelAbsent, FormulaDomainError
from .exactnum import ZERO, SqrtSum, sqrt_product
from .labels import PART_00, PART_11, PART_HH, EntryShift, So4Label

# A polynomial (or norm-factor) callable in the four table variables.
Poly = Callable[[Fraction, Fraction, Fraction, Fraction], Fraction]

_ZERO_F = Fraction(0)


@dataclass(frozen=True)
class LinForm:
    """Integer-coefficient linear form in (j1, j2, b1, b2)."""

    text: str
    cj1: int
    cj2: int
    cb1: int
    cb2: int
    c0: int

    def __call__(self, j1: Fraction, j2: Fraction, b1: Fraction, b2: Fraction) -> Fraction:
        return self.cj1 * j1 + self.cj2 * j2 + self.cb1 * b1 + self.cb2 * b2 + self.c0


def lin(expr: str) -> LinForm:
    """Parse a linear form such as ``"-j1+j2+b1+b2+2"`` or ``"2j1+3"``."""
    s = expr.replace(" ", "")
    coeffs = {"j1": 0, "j2": 0, "b1": 0, "b2": 0, "": 0}
    i, n = 0, len(s)
    while i < n:
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < n and s[j].isdigit():
            j += 1
        coef = int(s[i:j]) if j > i else 1
        if j + 1 < n and s[j] in "jb" and s[j + 1] in "12":
            coeffs[s[j:j + 2]] += sign * coef
            i = j + 2
        elif j > i:
            coeffs[""] += sign * coef
            i = j
        else:
            raise ValueError(f"bad linear form: {expr!r}")
    return LinForm(expr, coeffs["j1"], coeffs["j2"], coeffs["b1"], coeffs["b2"], coeffs[""])


def _lins(exprs: str) -> tuple[LinForm, ...]:
    return tuple(lin(p) for p in exprs.split(";") if p.strip())


@dataclass(frozen=True)
class RowSpec:
    """One table row of a coupling channel."""

    key: EntryShift
    sign: int
    scale: Fraction
    srad: Fraction
    outer: tuple[LinForm, ...]
    poly: Optional[Poly]
    num: tuple[LinForm, ...]
    den: tuple[LinForm, ...]


def _row(tdj1: int, tdj2: int, part: So4Label, sign: int, scale: str,
         srad: str = "1", outer: str = "", poly: Optional[Poly] = None,
         num: str = "", den: str = "") -> RowSpec:
    return RowSpec(
        key=EntryShift.of(tdj1, tdj2, part),
        sign=sign,
        scale=Fraction(scale),
        srad=Fraction(srad),
        outer=_lins(outer),
        poly=poly,
        num=_lins(num),
        den=_lins(den),
    )


def _rows(*rows: RowSpec) -> Mapping[EntryShift, RowSpec]:
    table = {r.key: r for r in rows}
    if len(table) != 14:
        raise ValueError("channel table must have exactly 14 distinct rows")
    return table


@dataclass(frozen=True)
class ChannelTable:
    """One coupling channel: irrep-label shift, normalization, entry rows."""

    shift: tuple[int, int]
    norm_scale: Fraction
    norm_srad: Fraction
    norm_factors: tuple[Poly, ...]
    rows: Mapping[EntryShift, RowSpec]

    def factor_values(self, b1: Fraction, b2: Fraction) -> tuple[Fraction, ...]:
        # Normalization factors depend on (b1, b2) only.
        return tuple(f(_ZERO_F, _ZERO_F, b1, b2) for f in self.norm_factors)

    def normalization(self, b1: Fraction, b2: Fraction) -> SqrtSum:
        values = self.factor_values(b1, b2)
        for v in values:
            if v <= 0:
                raise ChannelAbsent(
                    f"channel with shift {self.shift} absent at source "
                    f"({b1},{b2}): normalization factor {v} <= 0")
        radicand = [self.norm_srad] + [1 / v for v in values]
        return self.norm_scale * sqrt_product(radicand)

    def bare_value(self, entry: EntryShift, j1: Fraction, j2: Fraction,
                   b1: Fraction, b2: Fraction) -> SqrtSum:
        """Row value without the channel normalization."""
        row = self.rows[entry]
        outer = Fraction(row.sign) * row.scale
        for f in row.outer:
            outer *= f(j1, j2, b1, b2)
        if outer and row.poly is not None:
            outer *= row.poly(j1, j2, b1, b2)
        if not outer:
            return ZERO
        radicand = [row.srad]
        negatives = []
        for f in row.num:
            v = f(j1, j2, b1, b2)
            if v == 0:
                return ZERO
            if v < 0:
                negatives.append(v)
            else:
                radicand.append(v)
        # Valid entries may hit pairs of negative factors whose product is
        # positive; an odd count means the key lies outside the domain.
        if len(negatives) % 2:
            raise FormulaDomainError(
                f"negative radicand for entry {entry} at "
                f"j=({j1},{j2}), b=({b1},{b2})")
        for i in range(0, len(negatives), 2):
            radicand.append(negatives[i] * negatives[i + 1])
        for f in row.den:
            v = f(j1, j2, b1, b2)
            if v <= 0:
                raise FormulaDomainError(
                    f"denominator factor {f.text} = {v} for entry {entry} at "
                    f"j=({j1},{j2}), b=({b1},{b2})")
            radicand.append(1 / v)
        return outer * sqrt_product(radicand)


# ---------------------------------------------------------------------------
# Entry polynomials too large to inline.

def _shift_pp_swave_poly(j1, j2, b1, b2):
    return j1 * (j1 + 1) + j2 * (j2 + 1) - (b1 - b2) * (b1 - b2 + 1)


def _diag_quartic(b1, b2):
    """Common quartic in (b1, b2) shared by the diagonal-channel polynomials."""
    return (b1 ** 4 + 4 * b1 ** 3 + (-2 * b2 * b2 - 2 * b2 + 5) * b1 * b1
            + (-4 * b2 * b2 - 4 * b2 + 2) * b1
            + b2 ** 4 + 2 * b2 ** 3 - b2 * b2 - 2 * b2)


def _diag_norm_bracket(j1, j2, b1, b2):
    """Norm bracket of the diagonal channel; zero exactly when it is absent."""
    return (4 * b2 * b2 * (b2 + 1) ** 2
            + 11 * (8 * b1 * b1 + 16 * b1 + 5) * b2 * (b2 + 1)
            + b1 * (b1 + 2) * (2 * b1 - 1) * (2 * b1 + 5))


def _diag_core_poly(j1, j2, b1, b2):
    c2 = 10 * j2 * j2 + 10 * j2 + 2 * b1 * b1 + 2 * b2 * b2 + 4 * b1 + 2 * b2 + 1
    c1 = 2 * (5 * j2 * j2 + 5 * j2 + b1 * b1 + b2 * b2 + 2 * b1 + b2 + 1)
    c0 = (j2 ** 4 + b1 ** 4 + b2 ** 4 + 2 * j2 ** 3 + 4 * b1 ** 3 + 2 * b2 ** 3
          + 5 * b1 * b1 - 2 * b1 * b1 * b2 * b2 - 4 * b1 * b2 * b2 - b2 * b2
          + 2 * b1 - 2 * b1 * b1 * b2 - 4 * b1 * b2 - 2 * b2
          - 2 * j2 * (b1 * b1 + 2 * b1 + b2 * b2 + b2 + 1)
          - j2 * j2 * (2 * b1 * b1 + 4 * b1 + 2 * b2 * b2 + 2 * b2 + 1))
    return j1 ** 4 + 2 * j1 ** 3 - c2 * j1 * j1 - c1 * j1 + c0


def _diag_scalar_poly(j1, j2, b1, b2):
    return (5 * j1 * j1 + 5 * j1 + 5 * j2 * j2 + 5 * j2
            - 3 * (b1 * b1 + 2 * b1 + b2 * b2 + b2))


def _aux_core_poly(j1, j2, b1, b2):
    k = _diag_quartic(b1, b2)
    c4 = j2 * j2 + j2 + 2 * b1 * b1 + 2 * b2 * b2 + 4 * b1 + 2 * b2 - 1
    c3 = 2 * j2 * j2 + 2 * j2 + 4 * b1 * b1 + 4 * b2 * b2 + 8 * b1 + 4 * b2 + 3
    c2 = (-j2 ** 4 - 2 * j2 ** 3
          + (4 * b1 * b1 + 8 * b1 + 4 * b2 * b2 + 4 * b2 + 2) * j2 * j2
          + (4 * b1 * b1 + 8 * b1 + 4 * b2 * b2 + 4 * b2 + 3) * j2
          + b1 ** 4 + b2 ** 4 + 4 * b1 ** 3 + 2 * b2 ** 3 - 3 * b2 * b2 - 4 * b2
          + b1 * b1 * (-2 * b2 * b2 - 2 * b2 + 3)
          - 2 * b1 * (2 * b2 * b2 + 2 * b2 + 1) - 2)
    c1 = (-j2 ** 4 - 2 * j2 ** 3
          + (4 * b1 * b1 + 8 * b1 + 4 * b2 * b2 + 4 * b2 + 3) * j2 * j2
          + 4 * (b1 * b1 + 2 * b1 + b2 * b2 + b2 + 1) * j2 + k)
    c0 = j2 * (j2 + 1) * (
        j2 ** 4 + 2 * j2 ** 3
        - (2 * b1 * b1 + 4 * b1 + 2 * b2 * b2 + 2 * b2 + 1) * j2 * j2
        - 2 * (b1 * b1 + 2 * b1 + b2 * b2 + b2 + 1) * j2 + k)
    return (j1 ** 6 + 3 * j1 ** 5 - c4 * j1 ** 4 - c3 * j1 ** 3
            + c2 * j1 * j1 + c1 * j1 + c0)


def _aux_scalar_poly(j1, j2, b1, b2):
    spread = j1 * (j1 + 1) - j2 * (j2 + 1)
    return _diag_quartic(b1, b2) - 5 * spread * spread


# ---------------------------------------------------------------------------
# Raising channels, keyed by their doubled irrep-label shift.

RAISING_TABLES: dict[tuple[int, int], ChannelTable] = {}

RAISING_TABLES[(2, 2)] = ChannelTable(
    shift=(2, 2),
    norm_scale=Fraction(1),
    norm_srad=Fraction(1),
    norm_factors=_lins(
        "2b1+2; 2b1+3; b1+b2+2; b1+b2+3; 2b2+1; 2b2+2; 2b1+2b2+3; 2b1+2b2+5"),
    rows=_rows(
        _row(2, 2, PART_11, +1, "1/4",
             num="j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2-b1+b2+1; j1+j2-b1+b2+2;"
                 "j1-j2+b1+b2+2; j1-j2+b1+b2+3; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3;"
                 "j1+j2+b1+b2+3; j1+j2+b1+b2+4; j1+j2+b1+b2+5; j1+j2+b1+b2+6",
             den="j1+1; 2j1+3; j2+1; 2j2+3"),
        _row(-2, -2, PART_11, +1, "1/4",
             num="j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; -j1-j2+b1+b2+3; -j1-j2+b1+b2+4;"
                 "j1-j2+b1+b2+2; j1-j2+b1+b2+3; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2; 2j2-1"),
        _row(-2, 2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2-1; j1-j2+b1-b2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3;"
                 "-j1+j2+b1+b2+4; -j1+j2+b1+b2+5; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1; 2j1-1; j2+1; 2j2+3"),
        _row(2, -2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2-1; -j1+j2+b1-b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1-j2+b1+b2+2; j1-j2+b1+b2+3;"
                 "j1-j2+b1+b2+4; j1-j2+b1+b2+5; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; 2j1+3; j2; 2j2-1"),
        _row(2, 0, PART_11, +1, "1/4",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2; j1+j2+b1-b2+2; j1+j2-b1+b2+1;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; j1-j2+b1+b2+3; j1-j2+b1+b2+4;"
                 "-j1+j2+b1+b2+2; j1+j2+b1+b2+3; j1+j2+b1+b2+4; j1+j2+b1+b2+5",
             den="j1+1; 2j1+3; j2; j2+1"),
        _row(-2, 0, PART_11, -1, "1/4",
             num="j1-j2+b1-b2; -j1+j2+b1-b2+1; j1+j2+b1-b2+1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; -j1-j2+b1+b2+3; j1-j2+b1+b2+2;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3; -j1+j2+b1+b2+4; j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2; j2+1"),
        _row(0, 2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2-b1+b2+1;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3;"
                 "-j1+j2+b1+b2+4; j1+j2+b1+b2+3; j1+j2+b1+b2+4; j1+j2+b1+b2+5",
             den="j1; j1+1; j2+1; 2j2+3"),
        _row(0, -2, PART_11, -1, "1/4",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; -j1-j2+b1+b2+3; j1-j2+b1+b2+2;"
                 "j1-j2+b1+b2+3; j1-j2+b1+b2+4; -j1+j2+b1+b2+2; j1+j2+b1+b2+3",
             den="j1; j1+1; j2; 2j2-1"),
        _row(0, 0, PART_11, -1, "1/4", poly=_shift_pp_swave_poly,
             num="-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1-j2+b1+b2+2; j1-j2+b1+b2+3;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1; j1+1; j2; j2+1"),
        _row(1, 1, PART_HH, +1, "1/2",
             num="j1+j2+b1-b2+2; j1+j2-b1+b2+1; -j1-j2+b1+b2+1; j1-j2+b1+b2+2;"
                 "j1-j2+b1+b2+3; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3; j1+j2+b1+b2+3;"
                 "j1+j2+b1+b2+4; j1+j2+b1+b2+5",
             den="j1+1; j2+1"),
        _row(-1, -1, PART_HH, -1, "1/2",
             num="j1+j2+b1-b2+1; j1+j2-b1+b2; -j1-j2+b1+b2+1; -j1-j2+b1+b2+2;"
                 "-j1-j2+b1+b2+3; j1-j2+b1+b2+2; j1-j2+b1+b2+3; -j1+j2+b1+b2+2;"
                 "-j1+j2+b1+b2+3; j1+j2+b1+b2+3",
             den="j1; j2"),
        _row(1, -1, PART_HH, +1, "1/2",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2; -j1-j2+b1+b2+1; -j1-j2+b1+b2+2;"
                 "j1-j2+b1+b2+2; j1-j2+b1+b2+3; j1-j2+b1+b2+4; -j1+j2+b1+b2+2;"
                 "j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; j2"),
        _row(-1, 1, PART_HH, +1, "1/2",
             num="j1-j2+b1-b2; -j1+j2+b1-b2+1; -j1-j2+b1+b2+1; -j1-j2+b1+b2+2;"
                 "j1-j2+b1+b2+2; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3; -j1+j2+b1+b2+4;"
                 "j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1; j2+1"),
        _row(0, 0, PART_00, +1, "1/2", srad="5",
             num="-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1-j2+b1+b2+2; j1-j2+b1+b2+3;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3; j1+j2+b1+b2+3; j1+j2+b1+b2+4"),
    ),
)

RAISING_TABLES[(2, 0)] = ChannelTable(
    shift=(2, 0),
    norm_scale=Fraction(1),
    norm_srad=Fraction(1),
    norm_factors=_lins(
        "2b1+2; 2b1+3; 2b1-2b2+1; b1-b2+1; b2; b1+b2+2; 2b2+2; 2b1+2b2+3"),
    rows=_rows(
        _row(2, 2, PART_11, -1, "1/4",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
                 "j1+j2+b1-b2+4; j1+j2-b1+b2+1; -j1-j2+b1+b2; j1-j2+b1+b2+2;"
                 "-j1+j2+b1+b2+2; j1+j2+b1+b2+3; j1+j2+b1+b2+4; j1+j2+b1+b2+5",
             den="j1+1; 2j1+3; j2+1; 2j2+3"),
        _row(-2, -2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+1; j1+j2-b1+b2-2;"
                 "j1+j2-b1+b2-1; j1+j2-b1+b2; -j1-j2+b1+b2+1; -j1-j2+b1+b2+2;"
                 "-j1-j2+b1+b2+3; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+2",
             den="j1; 2j1-1; j2; 2j2-1"),
        _row(-2, 2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2; -j1+j2+b1-b2+3;"
                 "j1+j2+b1-b2+2; j1+j2-b1+b2; -j1-j2+b1+b2+1; j1-j2+b1+b2+1;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3; -j1+j2+b1+b2+4; j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2+1; 2j2+3"),
        _row(2, -2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1-j2+b1-b2+3; -j1+j2+b1-b2;"
                 "j1+j2+b1-b2+2; j1+j2-b1+b2; -j1-j2+b1+b2+1; j1-j2+b1+b2+2;"
                 "j1-j2+b1+b2+3; j1-j2+b1+b2+4; -j1+j2+b1+b2+1; j1+j2+b1+b2+3",
             den="j1+1; 2j1+3; j2; 2j2-1"),
        _row(2, 0, PART_11, +1, "1/4",
             poly=lambda j1, j2, b1, b2: (-j1 * j1 + (2 * b1 + 1) * j1
                                          + j2 * j2 - b1 * b1 + b2 * b2
                                          + j2 - b1 + b2),
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
                 "j1-j2+b1+b2+2; j1-j2+b1+b2+3; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; 2j1+3; j2; j2+1"),
        _row(-2, 0, PART_11, -1, "1/4",
             poly=lambda j1, j2, b1, b2: (2 * j2 * b2
                                          + (j1 - j2 + b1 - b2 + 1)
                                          * (j1 + j2 + b1 + b2 + 2)),
             num="-j1+j2+b1-b2+1; -j1+j2+b1-b2+2; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2; j2+1"),
        _row(0, 2, PART_11, +1, "1/4",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1 - j2 * j2
                                          - b1 * b1 + b2 * b2 - b1
                                          + j2 * (2 * b1 + 1) + b2),
             num="-j1+j2+b1-b2+1; -j1+j2+b1-b2+2; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1; j1+1; j2+1; 2j2+3"),
        _row(0, -2, PART_11, +1, "1/4",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1 - j2 * j2
                                          - b1 * b1 + b2 * b2 - 3 * b1
                                          - j2 * (2 * b1 + 3) + b2 - 2),
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1-j2+b1+b2+2; j1-j2+b1+b2+3",
             den="j1; j1+1; j2; 2j2-1"),
        _row(0, 0, PART_11, -1, "1/4",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1 + j2 * j2 + j2
                                          - b1 * b1 + b2 * b2
                                          - 3 * b1 + b2 - 2),
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3",
             den="j1; j1+1; j2; j2+1"),
        _row(1, 1, PART_HH, +1, "1/2", outer="j1+j2-b1",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
                 "j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; j2+1"),
        _row(-1, -1, PART_HH, -1, "1/2", outer="j1+j2+b1+2",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1-j2+b1+b2+2; -j1+j2+b1+b2+2",
             den="j1; j2"),
        _row(1, -1, PART_HH, +1, "1/2", outer="-j1+j2+b1+1",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1+j2+b1-b2+2; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; j1-j2+b1+b2+3; j1+j2+b1+b2+3",
             den="j1+1; j2"),
        _row(-1, 1, PART_HH, +1, "1/2", outer="j1-j2+b1+1",
             num="-j1+j2+b1-b2+1; -j1+j2+b1-b2+2; j1+j2+b1-b2+2; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3; j1+j2+b1+b2+3",
             den="j1; j2+1"),
        _row(0, 0, PART_00, +1, "1/2", srad="5",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3"),
    ),
)

RAISING_TABLES[(0, 2)] = ChannelTable(
    shift=(0, 2),
    norm_scale=Fraction(1),
    norm_srad=Fraction(1),
    norm_factors=_lins(
        "2b1+1; 2b1+3; 2b1-2b2+1; b1-b2; b1+b2+2; 2b2+1; 2b2+2; 2b1+2b2+3"),
    rows=_rows(
        _row(2, 2, PART_11, +1, "1/2", srad="1/2",
             num="j1-j2+b1-b2; -j1+j2+b1-b2; j1+j2+b1-b2+2; j1+j2-b1+b2+1;"
                 "j1+j2-b1+b2+2; j1+j2-b1+b2+3; -j1-j2+b1+b2; j1-j2+b1+b2+2;"
                 "-j1+j2+b1+b2+2; j1+j2+b1+b2+3; j1+j2+b1+b2+4; j1+j2+b1+b2+5",
             den="j1+1; 2j1+3; j2+1; 2j2+3"),
        _row(-2, -2, PART_11, -1, "1/2", srad="1/2",
             num="j1-j2+b1-b2; -j1+j2+b1-b2; j1+j2+b1-b2-1; j1+j2+b1-b2;"
                 "j1+j2+b1-b2+1; j1+j2-b1+b2; -j1-j2+b1+b2+1; -j1-j2+b1+b2+2;"
                 "-j1-j2+b1+b2+3; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+2",
             den="j1; 2j1-1; j2; 2j2-1"),
        _row(-2, 2, PART_11, +1, "1/2", srad="1/2",
             num="j1-j2+b1-b2-2; j1-j2+b1-b2-1; j1-j2+b1-b2; -j1+j2+b1-b2+1;"
                 "j1+j2+b1-b2+1; j1+j2-b1+b2+1; -j1-j2+b1+b2+1; j1-j2+b1+b2+1;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3; -j1+j2+b1+b2+4; j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2+1; 2j2+3"),
        _row(2, -2, PART_11, +1, "1/2", srad="1/2",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2-2; -j1+j2+b1-b2-1; -j1+j2+b1-b2;"
                 "j1+j2+b1-b2+1; j1+j2-b1+b2+1; -j1-j2+b1+b2+1; j1-j2+b1+b2+2;"
                 "j1-j2+b1+b2+3; j1-j2+b1+b2+4; -j1+j2+b1+b2+1; j1+j2+b1+b2+3",
             den="j1+1; 2j1+3; j2; 2j2-1"),
        _row(2, 0, PART_11, +1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (-j1 * j1 + 2 * b2 * j1 + j2 * j2
                                          + b1 * b1 - b2 * b2 + j2
                                          + 2 * b1 + 1),
             num="j1-j2-b1+b2; j1-j2-b1+b2+1; j1+j2-b1+b2+1; j1+j2-b1+b2+2;"
                 "j1-j2+b1+b2+2; j1-j2+b1+b2+3; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; 2j1+3; j2; j2+1"),
        _row(-2, 0, PART_11, -1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + 2 * (b2 + 1) * j1
                                          - j2 * j2 - b1 * b1 + b2 * b2
                                          - j2 - 2 * b1 + 2 * b2),
             num="j1-j2+b1-b2-1; j1-j2+b1-b2; j1+j2+b1-b2; j1+j2+b1-b2+1;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2; j2+1"),
        _row(0, 2, PART_11, +1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1 - j2 * j2
                                          + b1 * b1 - b2 * b2 + 2 * b1
                                          + 2 * j2 * b2 + 1),
             num="j1-j2+b1-b2-1; j1-j2+b1-b2; j1+j2-b1+b2+1; j1+j2-b1+b2+2;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1; j1+1; j2+1; 2j2+3"),
        _row(0, -2, PART_11, +1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1 - j2 * j2
                                          + b1 * b1 - b2 * b2 + 2 * b1
                                          - 2 * b2 - 2 * j2 * (b2 + 1)),
             num="-j1+j2+b1-b2-1; -j1+j2+b1-b2; j1+j2+b1-b2; j1+j2+b1-b2+1;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1-j2+b1+b2+2; j1-j2+b1+b2+3",
             den="j1; j1+1; j2; 2j2-1"),
        _row(0, 0, PART_11, +1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1 + j2 * j2 + j2
                                          + b1 * b1 - b2 * b2
                                          + 2 * b1 - 2 * b2),
             num="j1-j2+b1-b2; -j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2+1;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3",
             den="j1; j1+1; j2; j2+1"),
        _row(1, 1, PART_HH, -1, "1/2", srad="1/2", outer="2j1+2j2-2b2+1",
             num="j1-j2+b1-b2; -j1+j2+b1-b2; j1+j2-b1+b2+1; j1+j2-b1+b2+2;"
                 "j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; j2+1"),
        _row(-1, -1, PART_HH, +1, "1/2", srad="1/2", outer="2j1+2j2+2b2+3",
             num="j1-j2+b1-b2; -j1+j2+b1-b2; j1+j2+b1-b2; j1+j2+b1-b2+1;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1-j2+b1+b2+2; -j1+j2+b1+b2+2",
             den="j1; j2"),
        _row(1, -1, PART_HH, +1, "1/2", srad="1/2", outer="-2j1+2j2+2b2+1",
             num="-j1+j2+b1-b2-1; -j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2+1;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; j1-j2+b1+b2+3; j1+j2+b1+b2+3",
             den="j1+1; j2"),
        _row(-1, 1, PART_HH, +1, "1/2", srad="1/2", outer="2j1-2j2+2b2+1",
             num="j1-j2+b1-b2-1; j1-j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2+1;"
                 "-j1-j2+b1+b2+1; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3; j1+j2+b1+b2+3",
             den="j1; j2+1"),
        _row(0, 0, PART_00, -1, "1", srad="5/2",
             num="j1-j2+b1-b2; -j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2+1;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3"),
    ),
)

RAISING_TABLES[(2, -2)] = ChannelTable(
    shift=(2, -2),
    norm_scale=Fraction(1),
    norm_srad=Fraction(1),
    norm_factors=_lins(
        "2; 2b1+2; 2b1+3; 2b1-2b2+1; 2b1-2b2+3; b1-b2+1; b1-b2+2; b2; 2b2+1"),
    rows=_rows(
        _row(2, 2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2+b1-b2+4; j1+j2+b1-b2+5;"
                 "-j1-j2+b1+b2-1; -j1-j2+b1+b2; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; 2j1+3; j2+1; 2j2+3"),
        _row(-2, -2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
                 "j1+j2-b1+b2-3; j1+j2-b1+b2-2; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1+j2+b1+b2+1; j1+j2+b1+b2+2",
             den="j1; 2j1-1; j2; 2j2-1"),
        _row(-2, 2, PART_11, +1, "1/4",
             num="-j1+j2+b1-b2+1; -j1+j2+b1-b2+2; -j1+j2+b1-b2+3; -j1+j2+b1-b2+4;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "j1-j2+b1+b2; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2+1; 2j2+3"),
        _row(2, -2, PART_11, +1, "1/4",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1-j2+b1-b2+3; j1-j2+b1-b2+4;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "j1-j2+b1+b2+2; j1-j2+b1+b2+3; -j1+j2+b1+b2; -j1+j2+b1+b2+1",
             den="j1+1; 2j1+3; j2; 2j2-1"),
        _row(2, 0, PART_11, -1, "1/4",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1-j2+b1-b2+3; -j1+j2+b1-b2+1;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2+b1-b2+4; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2; j1-j2+b1+b2+2; -j1+j2+b1+b2+1; j1+j2+b1+b2+3",
             den="j1+1; 2j1+3; j2; j2+1"),
        _row(-2, 0, PART_11, -1, "1/4",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2; -j1+j2+b1-b2+3;"
                 "j1+j2+b1-b2+2; j1+j2-b1+b2-2; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; j1+j2+b1+b2+2",
             den="j1; 2j1-1; j2; j2+1"),
        _row(0, 2, PART_11, -1, "1/4",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2; -j1+j2+b1-b2+3;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2+b1-b2+4; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; j1+j2+b1+b2+3",
             den="j1; j1+1; j2+1; 2j2+3"),
        _row(0, -2, PART_11, -1, "1/4",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1-j2+b1-b2+3; -j1+j2+b1-b2+1;"
                 "j1+j2+b1-b2+2; j1+j2-b1+b2-2; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+1; j1+j2+b1+b2+2",
             den="j1; j1+1; j2; 2j2-1"),
        _row(0, 0, PART_11, +1, "1/4",
             poly=lambda j1, j2, b1, b2: (2 * j1 * j2
                                          + (-j1 - j2 + b1 + b2 + 1)
                                          * (j1 + j2 + b1 + b2 + 2)),
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2-b1+b2-1; j1+j2-b1+b2",
             den="j1; j1+1; j2; j2+1"),
        _row(1, 1, PART_HH, -1, "1/2",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2+b1-b2+4; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2; j1+j2+b1+b2+3",
             den="j1+1; j2+1"),
        _row(-1, -1, PART_HH, -1, "1/2",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
                 "j1+j2+b1-b2+2; j1+j2-b1+b2-2; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1+j2+b1+b2+2",
             den="j1; j2"),
        _row(1, -1, PART_HH, +1, "1/2",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1-j2+b1-b2+3; -j1+j2+b1-b2+1;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "j1-j2+b1+b2+2; -j1+j2+b1+b2+1",
             den="j1+1; j2"),
        _row(-1, 1, PART_HH, +1, "1/2",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2; -j1+j2+b1-b2+3;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "j1-j2+b1+b2+1; -j1+j2+b1+b2+2",
             den="j1; j2+1"),
        _row(0, 0, PART_00, +1, "1/2", srad="5",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
                 "j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2-b1+b2-1; j1+j2-b1+b2"),
    ),
)

RAISING_TABLES[(1, 1)] = ChannelTable(
    shift=(1, 1),
    norm_scale=Fraction(1),
    norm_srad=Fraction(1),
    norm_factors=_lins(
        "2b1+2; b1-b2; b1-b2+1; b1+b2+1; b1+b2+2; b1+b2+3; 2b2+1; 2b1+2b2+3"),
    rows=_rows(
        _row(2, 2, PART_11, -1, "1/2", srad="1/2", outer="j1-j2",
             num="j1+j2+b1-b2+2; j1+j2+b1-b2+3; j1+j2-b1+b2+1; j1+j2-b1+b2+2;"
                 "-j1-j2+b1+b2; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3;"
                 "j1+j2+b1+b2+4; j1+j2+b1+b2+5",
             den="j1+1; 2j1+3; j2+1; 2j2+3"),
        _row(-2, -2, PART_11, +1, "1/2", srad="1/2", outer="j1-j2",
             num="j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; -j1-j2+b1+b2+3; j1-j2+b1+b2+2;"
                 "-j1+j2+b1+b2+2; j1+j2+b1+b2+2",
             den="j1; 2j1-1; j2; 2j2-1"),
        _row(-2, 2, PART_11, +1, "1/2", srad="1/2", outer="j1+j2+1",
             num="j1-j2+b1-b2-1; j1-j2+b1-b2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3;"
                 "-j1+j2+b1+b2+4; j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2+1; 2j2+3"),
        _row(2, -2, PART_11, -1, "1/2", srad="1/2", outer="j1+j2+1",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2-1; -j1+j2+b1-b2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; j1-j2+b1+b2+3; j1-j2+b1+b2+4;"
                 "-j1+j2+b1+b2+1; j1+j2+b1+b2+3",
             den="j1+1; 2j1+3; j2; 2j2-1"),
        _row(2, 0, PART_11, -1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j2 * (j2 + 1)
                                          + (j1 + 1) * (-j1 + b1 + b2 + 1)),
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2; j1+j2+b1-b2+2; j1+j2-b1+b2+1;"
                 "j1-j2+b1+b2+2; j1-j2+b1+b2+3; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; 2j1+3; j2; j2+1"),
        _row(-2, 0, PART_11, -1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + (b1 + b2 + 2) * j1
                                          - j2 * (j2 + 1)),
             num="j1-j2+b1-b2; -j1+j2+b1-b2+1; j1+j2+b1-b2+1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2; j2+1"),
        _row(0, 2, PART_11, +1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * (j1 + 1)
                                          + (j2 + 1) * (-j2 + b1 + b2 + 1)),
             num="j1-j2+b1-b2; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2-b1+b2+1;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1; j1+1; j2+1; 2j2+3"),
        _row(0, -2, PART_11, -1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1
                                          - j2 * (j2 + b1 + b2 + 2)),
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1-j2+b1+b2+2; j1-j2+b1+b2+3",
             den="j1; j1+1; j2; 2j2-1"),
        _row(0, 0, PART_11, +1, "1/2", srad="1/2", outer="j1-j2; j1+j2+1",
             poly=lambda j1, j2, b1, b2: (-j1 * j1 - j1 - j2 * j2 - j2
                                          + (b1 - b2) * (b1 - b2 + 1)),
             num="-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3",
             den="j1; j1+1; j2; j2+1"),
        _row(1, 1, PART_HH, +1, "1/2", srad="1/2",
             outer="j1-j2; 2j1+2j2-b1-b2+1",
             num="j1+j2+b1-b2+2; j1+j2-b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+2;"
                 "j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; j2+1"),
        _row(-1, -1, PART_HH, -1, "1/2", srad="1/2",
             outer="j1-j2; 2j1+2j2+b1+b2+3",
             num="j1+j2+b1-b2+1; j1+j2-b1+b2; -j1-j2+b1+b2+1; -j1-j2+b1+b2+2;"
                 "j1-j2+b1+b2+2; -j1+j2+b1+b2+2",
             den="j1; j2"),
        _row(1, -1, PART_HH, -1, "1/2", srad="1/2",
             outer="j1+j2+1; -2j1+2j2+b1+b2+1",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2; -j1-j2+b1+b2+1; j1-j2+b1+b2+2;"
                 "j1-j2+b1+b2+3; j1+j2+b1+b2+3",
             den="j1+1; j2"),
        _row(-1, 1, PART_HH, +1, "1/2", srad="1/2",
             outer="j1+j2+1; 2j1-2j2+b1+b2+1",
             num="j1-j2+b1-b2; -j1+j2+b1-b2+1; -j1-j2+b1+b2+1; -j1+j2+b1+b2+2;"
                 "-j1+j2+b1+b2+3; j1+j2+b1+b2+3",
             den="j1; j2+1"),
        _row(0, 0, PART_00, +1, "1", srad="5/2", outer="j1-j2; j1+j2+1",
             num="-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+2; j1+j2+b1+b2+3"),
    ),
)

RAISING_TABLES[(1, -1)] = ChannelTable(
    shift=(1, -1),
    norm_scale=Fraction(1),
    norm_srad=Fraction(1),
    norm_factors=_lins(
        "2b1+2; 2b1-2b2+1; b1-b2; b1-b2+1; b1-b2+2; b1+b2+1; b1+b2+2; 2b2+1"),
    rows=_rows(
        _row(2, 2, PART_11, +1, "1/2", srad="1/2", outer="j1-j2",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
                 "j1+j2+b1-b2+4; j1+j2-b1+b2+1; -j1-j2+b1+b2-1; -j1-j2+b1+b2;"
                 "j1+j2+b1+b2+3; j1+j2+b1+b2+4",
             den="j1+1; 2j1+3; j2+1; 2j2+3"),
        _row(-2, -2, PART_11, +1, "1/2", srad="1/2", outer="j1-j2",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+1; j1+j2-b1+b2-2;"
                 "j1+j2-b1+b2-1; j1+j2-b1+b2; -j1-j2+b1+b2+1; -j1-j2+b1+b2+2;"
                 "j1+j2+b1+b2+1; j1+j2+b1+b2+2",
             den="j1; 2j1-1; j2; 2j2-1"),
        _row(-2, 2, PART_11, +1, "1/2", srad="1/2", outer="j1+j2+1",
             num="j1-j2+b1-b2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2; -j1+j2+b1-b2+3;"
                 "j1+j2+b1-b2+2; j1+j2-b1+b2; j1-j2+b1+b2; j1-j2+b1+b2+1;"
                 "-j1+j2+b1+b2+2; -j1+j2+b1+b2+3",
             den="j1; 2j1-1; j2+1; 2j2+3"),
        _row(2, -2, PART_11, -1, "1/2", srad="1/2", outer="j1+j2+1",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1-j2+b1-b2+3; -j1+j2+b1-b2;"
                 "j1+j2+b1-b2+2; j1+j2-b1+b2; j1-j2+b1+b2+2; j1-j2+b1+b2+3;"
                 "-j1+j2+b1+b2; -j1+j2+b1+b2+1",
             den="j1+1; 2j1+3; j2; 2j2-1"),
        _row(2, 0, PART_11, +1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j2 * (j2 + 1)
                                          - (j1 + 1) * (j1 - b1 + b2)),
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
                 "-j1-j2+b1+b2; j1-j2+b1+b2+2; -j1+j2+b1+b2+1; j1+j2+b1+b2+3",
             den="j1+1; 2j1+3; j2; j2+1"),
        _row(-2, 0, PART_11, -1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + (b1 - b2 + 1) * j1
                                          - j2 * (j2 + 1)),
             num="-j1+j2+b1-b2+1; -j1+j2+b1-b2+2; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; j1+j2+b1+b2+2",
             den="j1; 2j1-1; j2; j2+1"),
        _row(0, 2, PART_11, -1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1
                                          - (j2 + 1) * (j2 - b1 + b2)),
             num="-j1+j2+b1-b2+1; -j1+j2+b1-b2+2; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
                 "-j1-j2+b1+b2; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; j1+j2+b1+b2+3",
             den="j1; j1+1; j2+1; 2j2+3"),
        _row(0, -2, PART_11, -1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: (j1 * j1 + j1
                                          - j2 * (j2 + b1 - b2 + 1)),
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+1; j1+j2+b1+b2+2",
             den="j1; j1+1; j2; 2j2-1"),
        _row(0, 0, PART_11, +1, "1/2", srad="1/2",
             poly=lambda j1, j2, b1, b2: ((j1 * j1 + j1 - j2 * (j2 + 1))
                                          * (-j1 * j1 - j1 - j2 * j2 - j2
                                             + (b1 + b2 + 1) * (b1 + b2 + 2))),
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2-b1+b2",
             den="j1; j1+1; j2; j2+1"),
        _row(1, 1, PART_HH, -1, "1/2", srad="1/2",
             outer="j1-j2; 2j1+2j2-b1+b2+2",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
                 "-j1-j2+b1+b2; j1+j2+b1+b2+3",
             den="j1+1; j2+1"),
        _row(-1, -1, PART_HH, -1, "1/2", srad="1/2",
             outer="j1-j2; 2j1+2j2+b1-b2+2",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2-b1+b2-1; j1+j2-b1+b2;"
                 "-j1-j2+b1+b2+1; j1+j2+b1+b2+2",
             den="j1; j2"),
        _row(1, -1, PART_HH, +1, "1/2", srad="1/2",
             outer="j1+j2+1; 2j1-2j2-b1+b2",
             num="j1-j2+b1-b2+1; j1-j2+b1-b2+2; j1+j2+b1-b2+2; j1+j2-b1+b2;"
                 "j1-j2+b1+b2+2; -j1+j2+b1+b2+1",
             den="j1+1; j2"),
        _row(-1, 1, PART_HH, +1, "1/2", srad="1/2",
             outer="j1+j2+1; 2j1-2j2+b1-b2",
             num="-j1+j2+b1-b2+1; -j1+j2+b1-b2+2; j1+j2+b1-b2+2; j1+j2-b1+b2;"
                 "j1-j2+b1+b2+1; -j1+j2+b1+b2+2",
             den="j1; j2+1"),
        _row(0, 0, PART_00, +1, "1", srad="5/2", outer="j1-j2; j1+j2+1",
             num="j1-j2+b1-b2+1; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2-b1+b2"),
    ),
)

# ---------------------------------------------------------------------------
# Diagonal channel (first copy) and its un-normalized companion, from which
# the second copy is built by Gram-Schmidt.  The two tables share all their
# square-root parts; only prefactors, signs and scales differ.

_DIAG_SQRT: dict[tuple[int, int, So4Label], tuple[str, str]] = {
    (2, 2, PART_11): (
        "j1+j2-b1-b2; j1+j2-b1-b2+1; j1+j2+b1-b2+2; j1+j2+b1-b2+3;"
        "j1+j2-b1+b2+1; j1+j2-b1+b2+2; j1+j2+b1+b2+3; j1+j2+b1+b2+4",
        "j1+1; 2j1+3; j2+1; 2j2+3"),
    (-2, -2, PART_11): (
        "j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2-1; j1+j2-b1+b2;"
        "-j1-j2+b1+b2+1; -j1-j2+b1+b2+2; j1+j2+b1+b2+1; j1+j2+b1+b2+2",
        "j1; 2j1-1; j2; 2j2-1"),
    (-2, 2, PART_11): (
        "j1-j2+b1-b2-1; j1-j2+b1-b2; -j1+j2+b1-b2+1; -j1+j2+b1-b2+2;"
        "j1-j2+b1+b2; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; -j1+j2+b1+b2+3",
        "j1; 2j1-1; j2+1; 2j2+3"),
    (2, -2, PART_11): (
        "j1-j2+b1-b2+1; j1-j2+b1-b2+2; -j1+j2+b1-b2-1; -j1+j2+b1-b2;"
        "j1-j2+b1+b2+2; j1-j2+b1+b2+3; -j1+j2+b1+b2; -j1+j2+b1+b2+1",
        "j1+1; 2j1+3; j2; 2j2-1"),
    (2, 0, PART_11): (
        "j1-j2+b1-b2+1; -j1+j2+b1-b2; j1+j2+b1-b2+2; j1+j2-b1+b2+1;"
        "-j1-j2+b1+b2; j1-j2+b1+b2+2; -j1+j2+b1+b2+1; j1+j2+b1+b2+3",
        "j1+1; 2j1+3; j2; j2+1"),
    (-2, 0, PART_11): (
        "j1-j2+b1-b2; -j1+j2+b1-b2+1; j1+j2+b1-b2+1; j1+j2-b1+b2;"
        "-j1-j2+b1+b2+1; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; j1+j2+b1+b2+2",
        "j1; 2j1-1; j2; j2+1"),
    (0, 2, PART_11): (
        "j1-j2+b1-b2; -j1+j2+b1-b2+1; j1+j2+b1-b2+2; j1+j2-b1+b2+1;"
        "-j1-j2+b1+b2; j1-j2+b1+b2+1; -j1+j2+b1+b2+2; j1+j2+b1+b2+3",
        "j1; j1+1; j2+1; 2j2+3"),
    (0, -2, PART_11): (
        "j1-j2+b1-b2+1; -j1+j2+b1-b2; j1+j2+b1-b2+1; j1+j2-b1+b2;"
        "-j1-j2+b1+b2+1; j1-j2+b1+b2+2; -j1+j2+b1+b2+1; j1+j2+b1+b2+2",
        "j1; j1+1; j2; 2j2-1"),
    (0, 0, PART_11): ("", "j1; j1+1; j2; j2+1"),
    (1, 1, PART_HH): (
        "j1+j2+b1-b2+2; j1+j2-b1+b2+1; -j1-j2+b1+b2; j1+j2+b1+b2+3",
        "j1+1; j2+1"),
    (-1, -1, PART_HH): (
        "j1+j2+b1-b2+1; j1+j2-b1+b2; -j1-j2+b1+b2+1; j1+j2+b1+b2+2",
        "j1; j2"),
    (1, -1, PART_HH): (
        "j1-j2+b1-b2+1; -j1+j2+b1-b2; j1-j2+b1+b2+2; -j1+j2+b1+b2+1",
        "j1+1; j2"),
    (-1, 1, PART_HH): (
        "j1-j2+b1-b2; -j1+j2+b1-b2+1; j1-j2+b1+b2+1; -j1+j2+b1+b2+2",
        "j1; j2+1"),
    (0, 0, PART_00): ("", ""),
}


def _diag_row(tdj1: int, tdj2: int, part: So4Label, sign: int, scale: str,
              srad: str = "1", outer: str = "", poly: Optional[Poly] = None) -> RowSpec:
    num, den = _DIAG_SQRT[(tdj1, tdj2, part)]
    return _row(tdj1, tdj2, part, sign, scale, srad, outer, poly, num, den)


DIAGONAL_TABLE = ChannelTable(
    shift=(0, 0),
    norm_scale=Fraction(2),
    norm_srad=Fraction(5),
    norm_factors=(_diag_norm_bracket,),
    rows=_rows(
        _diag_row(2, 2, PART_11, -1, "1/8"),
        _diag_row(-2, -2, PART_11, -1, "1/8"),
        _diag_row(-2, 2, PART_11, -1, "1/8"),
        _diag_row(2, -2, PART_11, -1, "1/8"),
        _diag_row(2, 0, PART_11, -1, "1/8"),
        _diag_row(-2, 0, PART_11, +1, "1/8"),
        _diag_row(0, 2, PART_11, -1, "1/8"),
        _diag_row(0, -2, PART_11, +1, "1/8"),
        _diag_row(0, 0, PART_11, -1, "1/8", poly=_diag_core_poly),
        _diag_row(1, 1, PART_HH, +1, "1/8", outer="2j1+2j2+3"),
        _diag_row(-1, -1, PART_HH, +1, "1/8", outer="2j1+2j2+1"),
        _diag_row(1, -1, PART_HH, +1, "1/8", outer="2j1-2j2+1"),
        _diag_row(-1, 1, PART_HH, -1, "1/8", outer="2j1-2j2-1"),
        _diag_row(0, 0, PART_00, -1, "1/10", srad="5", poly=_diag_scalar_poly),
    ),
)

AUX_TABLE = ChannelTable(
    shift=(0, 0),
    norm_scale=Fraction(1),
    norm_srad=Fraction(1),
    norm_factors=(),
    rows=_rows(
        _diag_row(2, 2, PART_11, +1, "1/4", outer="j1-j2; j1-j2"),
        _diag_row(-2, -2, PART_11, +1, "1/4", outer="j1-j2; j1-j2"),
        _diag_row(-2, 2, PART_11, +1, "1/4", outer="j1+j2+1; j1+j2+1"),
        _diag_row(2, -2, PART_11, +1, "1/4", outer="j1+j2+1; j1+j2+1"),
        _diag_row(2, 0, PART_11, +1, "1/4",
                  poly=lambda j1, j2, b1, b2: ((j1 + 1) ** 2 - j2 * (j2 + 1))),
        _diag_row(-2, 0, PART_11, +1, "1/4",
                  poly=lambda j1, j2, b1, b2: (-j1 * j1 + j2 * j2 + j2)),
        _diag_row(0, 2, PART_11, +1, "1/4",
                  poly=lambda j1, j2, b1, b2: ((j2 + 1) ** 2 - j1 * (j1 + 1))),
        _diag_row(0, -2, PART_11, +1, "1/4",
                  poly=lambda j1, j2, b1, b2: (j1 * j1 + j1 - j2 * j2)),
        _diag_row(0, 0, PART_11, -1, "1/4", poly=_aux_core_poly),
        _diag_row(1, 1, PART_HH, -1, "1/4", outer="j1-j2; j1-j2; 2j1+2j2+3"),
        _diag_row(-1, -1, PART_HH, -1, "1/4", outer="j1-j2; j1-j2; 2j1+2j2+1"),
        _diag_row(1, -1, PART_HH, +1, "1/4",
                  outer="j1+j2+1; j1+j2+1; -2j1+2j2-1"),
        _diag_row(-1, 1, PART_HH, +1, "1/4",
                  outer="2j1-2j2-1; j1+j2+1; j1+j2+1"),
        _diag_row(0, 0, PART_00, -1, "1/10", srad="5", poly=_aux_scalar_poly),
    ),
)


# ---------------------------------------------------------------------------
# Mixing data for the doubly-occurring diagonal target.

def mixing_x_rational(b1: Fraction, b2: Fraction) -> Fraction:
    """Overlap of the companion row set with copy 1, divided by the
    diagonal-channel normalization."""
    return (Fraction(-1, 10) * (b1 - b2) * (b1 - b2 + 1)
            * (b1 + b2 + 1) * (b1 + b2 + 2)
            * (4 * b1 * (b1 + 2) + 4 * b2 * (b2 + 1) - 5))


def mixing_h2(b1: Fraction, b2: Fraction) -> Fraction:
    """Squared norm of the companion row set."""
    bracket = (4 * b2 ** 4 + 8 * b2 ** 3
               - (8 * b1 * (b1 + 2) + 9) * b2 * b2
               - (8 * b1 * (b1 + 2) + 13) * b2
               + (b1 + 1) ** 2 * (4 * b1 * (b1 + 2) - 5))
    return (Fraction(1, 5) * (b1 - b2) * (b1 - b2 + 1)
            * (b1 + b2 + 1) * (b1 + b2 + 2) * bracket)
