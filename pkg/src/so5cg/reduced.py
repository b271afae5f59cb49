"""Exact reduced coupling coefficients in the SO(3) x SO(3) basis.

Evaluates the channel tables with their normalizations, builds the second
copy of the diagonal channel by Gram-Schmidt against the first, extends the
six lowering channels through the transposition symmetry, and exposes the
per-(target-SO(4)) reduced vectors on which unitarity is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import ChannelAbsent, MalformedKey
from .exactnum import ZERO, SqrtSum, sqrt_rational
from .labels import (
    ENTRY_SHIFTS,
    LOWERING_SHIFTS,
    PARTS_14,
    RAISING_SHIFTS,
    Channel,
    EntryShift,
    IrrepLabel,
    So4Label,
    branching,
    dim,
    in_branching,
    target_of,
)
from .tables import (
    AUX_TABLE,
    DIAGONAL_TABLE,
    RAISING_TABLES,
    ChannelTable,
    mixing_h2,
    mixing_x_rational,
)


@dataclass(frozen=True)
class ReducedKey:
    """Addresses one table entry of one coupling channel."""

    source: IrrepLabel
    channel: Channel
    source_so4: So4Label
    entry: EntryShift


@dataclass(frozen=True)
class MixingData:
    """Overlap data of the companion row set with the first diagonal copy.

    x is a single-radical value (the overlap itself); h2 and norm2 = h2 - x^2
    are exact rationals.  norm2 > 0 exactly when the second copy is present.
    """

    x: SqrtSum
    h2: Fraction
    norm2: Fraction


def _spins(label) -> tuple[Fraction, Fraction]:
    return label.j1.as_fraction(), label.j2.as_fraction()


def _check_source_block(source: IrrepLabel, source_so4: So4Label) -> None:
    if not in_branching(source, source_so4):
        raise MalformedKey(
            f"SO(4) label {source_so4} is not a block of source {source}")


def _shifted_so4(so4: So4Label, entry: EntryShift) -> Optional[So4Label]:
    tj1 = so4.j1.twice + entry.dj1.twice
    tj2 = so4.j2.twice + entry.dj2.twice
    if tj1 < 0 or tj2 < 0:
        return None
    return So4Label.of(tj1, tj2)


def _table_of(channel: Channel) -> ChannelTable:
    if channel.is_raising:
        return RAISING_TABLES[channel.shift]
    if channel.is_diagonal:
        return DIAGONAL_TABLE
    raise MalformedKey(f"no direct table for channel {channel}")


@lru_cache(maxsize=None)
def normalization(family: Channel, source: IrrepLabel) -> SqrtSum:
    """The overall channel normalization; ChannelAbsent if any factor <= 0."""
    if family.is_lowering:
        raise MalformedKey(
            f"channel {family} is symmetry-generated and carries no "
            f"normalization of its own")
    if target_of(source, family) is None:
        raise ChannelAbsent(f"channel {family} leaves no valid target "
                            f"for source {source}")
    b1, b2 = _spins(source)
    return _table_of(family).normalization(b1, b2)


@lru_cache(maxsize=None)
def mixing(source: IrrepLabel) -> MixingData:
    """Exact mixing data for the doubly-occurring diagonal target."""
    b1, b2 = _spins(source)
    x_rat = mixing_x_rational(b1, b2)
    h2 = mixing_h2(b1, b2)
    if x_rat == 0:
        # The rational factor of x vanishes before the diagonal normalization
        # (which may diverge here) is ever needed.
        x, x2 = ZERO, Fraction(0)
    else:
        x = x_rat * DIAGONAL_TABLE.normalization(b1, b2)
        x2 = (x * x).as_fraction()
    norm2 = h2 - x2
    if norm2 < 0:
        raise AssertionError(f"negative copy-2 norm at source {source}")
    return MixingData(x=x, h2=h2, norm2=norm2)


@lru_cache(maxsize=None)
def reduced(key: ReducedKey) -> SqrtSum:
    """Exact reduced coefficient for one table entry.

    Returns 0 without evaluating when the shifted target SO(4) label falls
    outside the target irrep's branching.
    """
    _check_source_block(key.source, key.source_so4)
    channel = key.channel
    if channel.copy == 2:
        return reduced_copy2(key)
    target = target_of(key.source, channel)
    if target is None:
        raise ChannelAbsent(
            f"channel {channel} leaves no valid target for source {key.source}")
    shifted = _shifted_so4(key.source_so4, key.entry)
    if shifted is None or not in_branching(target, shifted):
        return ZERO
    if channel.is_lowering:
        return symmetry_extend(target, key.source, shifted,
                               key.source_so4, key.entry.part)
    table = _table_of(channel)
    b1, b2 = _spins(key.source)
    norm = table.normalization(b1, b2)
    j1, j2 = _spins(key.source_so4)
    return norm * table.bare_value(key.entry, j1, j2, b1, b2)


def reduced_aux(key: ReducedKey) -> SqrtSum:
    """Value of one companion (un-normalized, diagonal-shift) table row."""
    if not key.channel.is_diagonal:
        raise MalformedKey("companion rows exist only for the (0,0) shift")
    _check_source_block(key.source, key.source_so4)
    shifted = _shifted_so4(key.source_so4, key.entry)
    if shifted is None:
        raise MalformedKey(
            f"entry {key.entry} shifts {key.source_so4} to a negative spin")
    if not in_branching(key.source, shifted):
        return ZERO
    j1, j2 = _spins(key.source_so4)
    b1, b2 = _spins(key.source)
    return AUX_TABLE.bare_value(key.entry, j1, j2, b1, b2)


def reduced_copy2(key: ReducedKey) -> SqrtSum:
    """Second copy of the diagonal channel: (aux - x*copy1)/sqrt(norm2)."""
    if not key.channel.is_diagonal:
        raise MalformedKey(f"channel {key.channel} has no second copy")
    _check_source_block(key.source, key.source_so4)
    mix = mixing(key.source)
    if mix.norm2 == 0:
        raise ChannelAbsent(
            f"second diagonal copy absent for source {key.source}")
    shifted = _shifted_so4(key.source_so4, key.entry)
    if shifted is None or not in_branching(key.source, shifted):
        return ZERO
    j1, j2 = _spins(key.source_so4)
    b1, b2 = _spins(key.source)
    aux = AUX_TABLE.bare_value(key.entry, j1, j2, b1, b2)
    copy1 = (DIAGONAL_TABLE.normalization(b1, b2)
             * DIAGONAL_TABLE.bare_value(key.entry, j1, j2, b1, b2))
    return (aux - mix.x * copy1) * sqrt_rational(1 / mix.norm2)


def symmetry_extend(target: IrrepLabel, source: IrrepLabel,
                    target_so4: So4Label, source_so4: So4Label,
                    part: So4Label) -> SqrtSum:
    """Reduced coefficient obtained from the transposed coupling.

    The value for (target <- source) equals a sign times a dimension ratio
    times the value for (source <- target) with the SO(4) labels swapped.
    Applying it twice is the identity.
    """
    if part not in PARTS_14:
        raise MalformedKey(f"not a 14-part: {part}")
    shift = (target.j1.twice - source.j1.twice,
             target.j2.twice - source.j2.twice)
    if shift not in RAISING_SHIFTS and shift not in LOWERING_SHIFTS:
        raise MalformedKey(
            f"{source} and {target} are not related by a single channel shift")
    _check_source_block(source, source_so4)
    _check_source_block(target, target_so4)
    entry_shift = (target_so4.j1.twice - source_so4.j1.twice,
                   target_so4.j2.twice - source_so4.j2.twice)
    mirrored_entry = EntryShift.of(-entry_shift[0], -entry_shift[1], part)
    phase_doubled = (shift[0] - shift[1] + entry_shift[0] + entry_shift[1]
                     + part.j1.twice + part.j2.twice)
    if phase_doubled % 2:
        raise AssertionError("half-integral symmetry phase")
    sign = -1 if (phase_doubled // 2) % 2 else 1
    ratio = Fraction(dim(target) * source_so4.so3_dim,
                     dim(source) * target_so4.so3_dim)
    mirrored = reduced(ReducedKey(
        source=target,
        channel=Channel.of(-shift[0], -shift[1]),
        source_so4=target_so4,
        entry=mirrored_entry,
    ))
    return sign * sqrt_rational(ratio) * mirrored


def channel_present_by_normalization(source: IrrepLabel, channel: Channel) -> bool:
    """Presence decided by the formulas alone: a valid target plus strictly
    positive normalization factors (norm2 > 0 for the second copy)."""
    target = target_of(source, channel)
    if target is None:
        return False
    b1, b2 = _spins(source)
    if channel.is_raising:
        return all(v > 0 for v in RAISING_TABLES[channel.shift].factor_values(b1, b2))
    if channel.is_diagonal:
        if channel.copy == 2:
            return mixing(source).norm2 > 0
        return all(v > 0 for v in DIAGONAL_TABLE.factor_values(b1, b2))
    # Lowering presence mirrors the raising presence of the transposed pair.
    shift = channel.shift
    return channel_present_by_normalization(
        target, Channel.of(-shift[0], -shift[1]))


ReducedVector = dict[tuple[So4Label, So4Label], SqrtSum]


def reduced_vector(source: IrrepLabel, channel: Channel,
                   target_so4: So4Label) -> ReducedVector:
    """All (source_so4, part) components coupling into one target SO(4) label.

    The channel must be present; entries whose source block does not exist
    are simply missing from the mapping.
    """
    out: ReducedVector = {}
    for entry in ENTRY_SHIFTS:
        tj1 = target_so4.j1.twice - entry.dj1.twice
        tj2 = target_so4.j2.twice - entry.dj2.twice
        if tj1 < 0 or tj2 < 0:
            continue
        s = So4Label.of(tj1, tj2)
        if not in_branching(source, s):
            continue
        out[(s, entry.part)] = reduced(ReducedKey(source, channel, s, entry))
    return out


def aux_vector(source: IrrepLabel, target_so4: So4Label) -> ReducedVector:
    """Companion-row analogue of reduced_vector for the diagonal shift."""
    out: ReducedVector = {}
    for entry in ENTRY_SHIFTS:
        tj1 = target_so4.j1.twice - entry.dj1.twice
        tj2 = target_so4.j2.twice - entry.dj2.twice
        if tj1 < 0 or tj2 < 0:
            continue
        s = So4Label.of(tj1, tj2)
        if not in_branching(source, s):
            continue
        out[(s, entry.part)] = reduced_aux(ReducedKey(
            source, Channel.of(0, 0), s, entry))
    return out


def dot(u: ReducedVector, v: ReducedVector) -> SqrtSum:
    """Exact inner product over the shared (source_so4, part) components."""
    total = ZERO
    for key, value in u.items():
        other = v.get(key)
        if other is not None and value and other:
            total = total + value * other
    return total


@dataclass(frozen=True)
class ReducedRow:
    """One export row of a per-channel table."""

    source_so4: So4Label
    entry: EntryShift
    target_so4: Optional[So4Label]
    value: SqrtSum


def _entry_sort_key(entry: EntryShift) -> tuple[int, int, int]:
    return (entry.dj1.twice, entry.dj2.twice, entry.part.j1.twice)


def table_rows(source: IrrepLabel, channel: Channel) -> tuple[ReducedRow, ...]:
    """Every (source block, entry) row of one channel, in lexicographic order.

    Guarded entries appear with value 0 so the table shape is uniform.
    """
    target = target_of(source, channel)
    if target is None:
        raise ChannelAbsent(
            f"channel {channel} leaves no valid target for source {source}")
    rows = []
    for s in branching(source):
        for entry in sorted(ENTRY_SHIFTS, key=_entry_sort_key):
            shifted = _shifted_so4(s, entry)
            if shifted is not None and not in_branching(target, shifted):
                shifted = None
            value = reduced(ReducedKey(source, channel, s, entry))
            rows.append(ReducedRow(s, entry, shifted, value))
    return tuple(rows)


def aux_table_rows(source: IrrepLabel) -> tuple[ReducedRow, ...]:
    """Rows of the un-normalized diagonal companion, same shape as table_rows."""
    rows = []
    for s in branching(source):
        for entry in sorted(ENTRY_SHIFTS, key=_entry_sort_key):
            shifted = _shifted_so4(s, entry)
            if shifted is None:
                rows.append(ReducedRow(s, entry, None, ZERO))
                continue
            if not in_branching(source, shifted):
                shifted = None
            value = reduced_aux(ReducedKey(source, Channel.of(0, 0, 1), s, entry))
            rows.append(ReducedRow(s, entry, shifted, value))
    return tuple(rows)
