"""Reduced coupling layer: normalizations, tables, mixing, symmetry."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from so5cg.errors import ChannelAbsent, MalformedKey
from so5cg.exactnum import ONE, ZERO, SqrtSum, sqrt_rational
from so5cg.labels import (
    Channel,
    EntryShift,
    IrrepLabel,
    PART_00,
    PART_11,
    PART_HH,
    So4Label,
    branching,
    channel_present,
    iter_labels,
    target_of,
)
from so5cg.reduced import (
    ReducedKey,
    aux_table_rows,
    aux_vector,
    channel_present_by_normalization,
    dot,
    mixing,
    normalization,
    reduced,
    reduced_aux,
    reduced_vector,
    symmetry_extend,
    table_rows,
)

A = Channel.of(2, 2)
B = Channel.of(2, 0)
E = Channel.of(1, 1)
G1 = Channel.of(0, 0, 1)
G2 = Channel.of(0, 0, 2)

small_labels = st.sampled_from(list(iter_labels(5)))


def test_normalization_anchors():
    assert str(normalization(A, IrrepLabel.of(0, 0))) == "1/180*sqrt(30)"
    assert str(normalization(E, IrrepLabel.of(1, 0))) == "2/315*sqrt(210)"
    # 4*1*4 + 11*29*2 + 1*3*1*7 = 675 under the diagonal bracket
    assert str(normalization(G1, IrrepLabel.of(2, 2))) == "2/45*sqrt(15)"


def test_normalization_absent_channels():
    with pytest.raises(ChannelAbsent):
        normalization(B, IrrepLabel.of(2, 0))  # factor j2 = 0
    with pytest.raises(ChannelAbsent):
        normalization(E, IrrepLabel.of(2, 2))  # factor j1 - j2 = 0
    with pytest.raises(ChannelAbsent):
        normalization(Channel.of(2, -2), IrrepLabel.of(2, 0))  # target j2 < 0
    with pytest.raises(MalformedKey):
        normalization(Channel.of(-2, 0), IrrepLabel.of(4, 2))


def test_reduced_trivial_source_values():
    key = ReducedKey(IrrepLabel.of(0, 0), A, So4Label.of(0, 0),
                     EntryShift.of(2, 2, PART_11))
    assert reduced(key) == ONE
    key = ReducedKey(IrrepLabel.of(0, 0), A, So4Label.of(0, 0),
                     EntryShift.of(0, 0, PART_00))
    assert reduced(key) == ONE


def test_reduced_guarded_zero():
    # source (1,0), channel (+1,0): shifted targets outside branching((2,0))
    src = IrrepLabel.of(2, 0)
    for entry in (EntryShift.of(2, 2, PART_11), EntryShift.of(1, -1, PART_HH)):
        key = ReducedKey(src, B, So4Label.of(1, 1), entry)
        assert reduced(key) == ZERO


def test_reduced_block_validation():
    key = ReducedKey(IrrepLabel.of(2, 0), B, So4Label.of(2, 2),
                     EntryShift.of(0, 0, PART_00))
    with pytest.raises(MalformedKey):
        reduced(key)


def test_mixing_values():
    m = mixing(IrrepLabel.of(2, 0))
    assert str(m.x) == "-4/5*sqrt(105)"
    assert m.h2 == Fraction(336, 5)
    assert m.norm2 == 0
    m = mixing(IrrepLabel.of(2, 1))
    assert m.h2 == Fraction(105, 32)
    assert m.norm2 == 0
    m = mixing(IrrepLabel.of(2, 2))
    assert m.x == ZERO
    assert m.h2 == 0
    m = mixing(IrrepLabel.of(3, 1))
    assert (m.x * m.x).as_fraction() == Fraction(34656, 395)
    assert m.h2 == Fraction(1464, 5)
    assert m.norm2 == Fraction(16200, 79)
    m = mixing(IrrepLabel.of(4, 2))
    assert str(m.x) == "-4*sqrt(14)"
    assert m.h2 == 840
    assert m.norm2 == 616


def test_copy2_absent_for_1_1():
    key = ReducedKey(IrrepLabel.of(2, 2), G2, So4Label.of(2, 2),
                     EntryShift.of(0, 0, PART_00))
    with pytest.raises(ChannelAbsent):
        reduced(key)


def test_copy2_unitarity_smallest_source():
    src = IrrepLabel.of(3, 1)
    for t in branching(src):
        c1 = reduced_vector(src, G1, t)
        c2 = reduced_vector(src, G2, t)
        if not c2:
            continue
        assert dot(c2, c2) == ONE
        assert dot(c1, c2) == ZERO


def test_aux_examples():
    # final companion row at j1 = j2 = 1 on source (1,1): H^2 = 0 forces 0
    key = ReducedKey(IrrepLabel.of(2, 2), G1, So4Label.of(2, 2),
                     EntryShift.of(0, 0, PART_00))
    assert reduced_aux(key) == ZERO
    # prefactor (j1 - j2)^2 kills the (+1,+1) companion entry at j1 = j2
    key = ReducedKey(IrrepLabel.of(3, 1), G1, So4Label.of(1, 1),
                     EntryShift.of(2, 2, PART_11))
    assert reduced_aux(key) == ZERO
    # shifting j2 = 0 down is not a valid SO(4) label
    key = ReducedKey(IrrepLabel.of(3, 1), G1, So4Label.of(2, 0),
                     EntryShift.of(1, -1, PART_HH))
    with pytest.raises(MalformedKey):
        reduced_aux(key)


def test_mixing_identities_per_target_block():
    src = IrrepLabel.of(4, 2)
    mix = mixing(src)
    for t in branching(src):
        aux = aux_vector(src, t)
        c1 = reduced_vector(src, G1, t)
        assert dot(aux, c1) == mix.x
        assert dot(aux, aux) == SqrtSum.from_rational(mix.h2)


def test_symmetry_lowering_example():
    value = symmetry_extend(IrrepLabel.of(0, 0), IrrepLabel.of(2, 2),
                            So4Label.of(0, 0), So4Label.of(2, 2), PART_11)
    assert value == sqrt_rational(Fraction(9, 14))
    squares = ZERO
    for s, part in ((So4Label.of(2, 2), PART_11),
                    (So4Label.of(1, 1), PART_HH),
                    (So4Label.of(0, 0), PART_00)):
        v = symmetry_extend(IrrepLabel.of(0, 0), IrrepLabel.of(2, 2),
                            So4Label.of(0, 0), s, part)
        squares = squares + v * v
    assert squares == ONE


def test_symmetry_rejects_unrelated_labels():
    with pytest.raises(MalformedKey):
        symmetry_extend(IrrepLabel.of(4, 0), IrrepLabel.of(0, 0),
                        So4Label.of(0, 0), So4Label.of(0, 0), PART_00)


def test_lowering_channel_through_reduced():
    # reduced() dispatches lowering keys through the symmetry relation
    key = ReducedKey(IrrepLabel.of(2, 2), Channel.of(-2, -2),
                     So4Label.of(2, 2), EntryShift.of(-2, -2, PART_11))
    assert reduced(key) == sqrt_rational(Fraction(9, 14))


@given(small_labels)
@settings(max_examples=25, deadline=None)
def test_symmetry_involution(src):
    for ch in (A, B, E):
        if not channel_present(src, ch):
            continue
        tgt = target_of(src, ch)
        for t in branching(tgt)[:2]:
            for (s, part), v in reduced_vector(src, ch, t).items():
                assert symmetry_extend(tgt, src, t, s, part) == v


@given(small_labels)
@settings(max_examples=25, deadline=None)
def test_presence_agreement(src):
    from so5cg.labels import ALL_CHANNELS, multiplicity_of
    for ch in ALL_CHANNELS:
        tgt = target_of(src, ch)
        by_mult = tgt is not None and multiplicity_of(src, tgt) >= ch.copy
        assert channel_present_by_normalization(src, ch) == by_mult


def test_table_rows_shape_and_order():
    rows = table_rows(IrrepLabel.of(0, 0), A)
    assert len(rows) == 14
    values = sorted(str(r.value) for r in rows)
    assert values == ["0"] * 11 + ["1"] * 3
    keys = [(r.source_so4.twice, (r.entry.dj1.twice, r.entry.dj2.twice,
                                  r.entry.part.j1.twice)) for r in rows]
    assert keys == sorted(keys)
    with pytest.raises(ChannelAbsent):
        table_rows(IrrepLabel.of(0, 0), Channel.of(-2, -2))


def test_aux_table_rows_match_direct_evaluation():
    src = IrrepLabel.of(3, 1)
    rows = aux_table_rows(src)
    assert len(rows) == 14 * len(branching(src))
    for row in rows[:20]:
        if row.target_so4 is None:
            continue
        key = ReducedKey(src, G1, row.source_so4, row.entry)
        assert reduced_aux(key) == row.value


@given(small_labels)
@settings(max_examples=15, deadline=None)
def test_reduced_unitarity_sampled(src):
    from so5cg.labels import channels_present
    chans = channels_present(src)
    targets = {}
    for ch in chans:
        tgt = target_of(src, ch)
        for t in branching(tgt):
            v = reduced_vector(src, ch, t)
            if v:
                targets.setdefault(t, []).append(v)
    for t, vecs in targets.items():
        for i, u in enumerate(vecs):
            for j, w in enumerate(vecs):
                assert dot(u, w) == (ONE if i == j else ZERO)
