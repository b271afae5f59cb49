"""Full coupling coefficients and per-source coupling matrices.

A full coefficient is a reduced coefficient times two SU(2) coupling
factors, one per SO(3) slot.  The coupling matrix of a source irrep
collects every full coefficient into a square change of basis from the
product states (source x 14-dim) to the coupled states, on which
orthonormality is asserted exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import MalformedKey
from .exactnum import ZERO, SqrtSum
from .labels import (
    ENTRY_SHIFTS,
    FOURTEEN,
    HalfInt,
    Channel,
    EntryShift,
    IrrepLabel,
    So4Label,
    branching,
    decompose_with_14,
    dim,
    in_branching,
    m_values,
)
from .reduced import ReducedKey, reduced
from .su2 import su2_cg

SHIFTS_OK = {(2, 2), (2, 0), (0, 2), (2, -2), (1, 1), (1, -1), (0, 0),
             (-2, -2), (-2, 0), (0, -2), (-2, 2), (-1, -1), (-1, 1)}


@dataclass(frozen=True)
class RowState:
    """One product-basis state: a source state paired with a 14-dim state."""

    source_so4: So4Label
    m1: HalfInt
    m2: HalfInt
    part: So4Label
    pm1: HalfInt
    pm2: HalfInt

    def sort_key(self) -> tuple[int, ...]:
        return (self.source_so4.j1.twice, self.source_so4.j2.twice,
                self.m1.twice, self.m2.twice,
                self.part.j1.twice, self.part.j2.twice,
                self.pm1.twice, self.pm2.twice)

    def to_json(self) -> dict:
        return {"s": list(self.source_so4.twice), "m": [self.m1.twice, self.m2.twice],
                "p": list(self.part.twice), "pm": [self.pm1.twice, self.pm2.twice]}

    def __str__(self) -> str:
        return (f"{self.source_so4};{self.m1},{self.m2}|"
                f"{self.part};{self.pm1},{self.pm2}")


@dataclass(frozen=True)
class ColState:
    """One coupled state: target irrep, copy, target SO(4) block, magnetics."""

    target: IrrepLabel
    copy: int
    target_so4: So4Label
    mt1: HalfInt
    mt2: HalfInt

    def sort_key(self) -> tuple[int, ...]:
        return (self.target.j1.twice, self.target.j2.twice, self.copy,
                self.target_so4.j1.twice, self.target_so4.j2.twice,
                self.mt1.twice, self.mt2.twice)

    def to_json(self) -> dict:
        return {"target": list(self.target.twice), "copy": self.copy,
                "t": list(self.target_so4.twice),
                "mt": [self.mt1.twice, self.mt2.twice]}

    def __str__(self) -> str:
        return f"{self.target}#{self.copy};{self.target_so4};{self.mt1},{self.mt2}"


@dataclass(frozen=True)
class FullKey:
    """Addresses a single full coupling coefficient."""

    target: IrrepLabel
    target_so4: So4Label
    tm1: HalfInt
    tm2: HalfInt
    copy: int
    source: IrrepLabel
    source_so4: So4Label
    m1: HalfInt
    m2: HalfInt
    part: So4Label
    pm1: HalfInt
    pm2: HalfInt


def _check_magnetic(j: HalfInt, m: HalfInt, what: str) -> None:
    if abs(m.twice) > j.twice or (m.twice - j.twice) % 2 != 0:
        raise MalformedKey(f"magnetic label {m} invalid for {what} spin {j}")


def full(key: FullKey) -> SqrtSum:
    """Exact full coefficient: reduced value times two SU(2) factors."""
    if key.part not in branching(FOURTEEN) or key.part.j1 != key.part.j2:
        raise MalformedKey(f"part must be a 14-dim block, got {key.part}")
    _check_magnetic(key.source_so4.j1, key.m1, "source")
    _check_magnetic(key.source_so4.j2, key.m2, "source")
    _check_magnetic(key.part.j1, key.pm1, "part")
    _check_magnetic(key.part.j2, key.pm2, "part")
    _check_magnetic(key.target_so4.j1, key.tm1, "target")
    _check_magnetic(key.target_so4.j2, key.tm2, "target")
    if (key.tm1.twice != key.m1.twice + key.pm1.twice
            or key.tm2.twice != key.m2.twice + key.pm2.twice):
        return ZERO
    dj1 = key.target_so4.j1.twice - key.source_so4.j1.twice
    dj2 = key.target_so4.j2.twice - key.source_so4.j2.twice
    if (abs(dj1) > key.part.j1.twice or abs(dj2) > key.part.j2.twice
            or (dj1 - key.part.j1.twice) % 2 or (dj2 - key.part.j2.twice) % 2):
        return ZERO
    shift = (key.target.j1.twice - key.source.j1.twice,
             key.target.j2.twice - key.source.j2.twice)
    if shift not in SHIFTS_OK:
        return ZERO
    r = reduced(ReducedKey(
        source=key.source,
        channel=Channel.of(shift[0], shift[1], key.copy),
        source_so4=key.source_so4,
        entry=EntryShift.of(dj1, dj2, key.part),
    ))
    if not r:
        return ZERO
    cg1 = su2_cg(key.source_so4.j1.twice, key.m1.twice,
                 key.part.j1.twice, key.pm1.twice,
                 key.target_so4.j1.twice, key.tm1.twice)
    cg2 = su2_cg(key.source_so4.j2.twice, key.m2.twice,
                 key.part.j2.twice, key.pm2.twice,
                 key.target_so4.j2.twice, key.tm2.twice)
    return r * cg1 * cg2


Column = dict[RowState, SqrtSum]


def _column_vector(source: IrrepLabel, col: ColState) -> Column:
    """All nonzero product-basis components of one coupled state."""
    channel = Channel.of(col.target.j1.twice - source.j1.twice,
                         col.target.j2.twice - source.j2.twice, col.copy)
    t = col.target_so4
    vec: Column = {}
    for entry in ENTRY_SHIFTS:
        sj1 = t.j1.twice - entry.dj1.twice
        sj2 = t.j2.twice - entry.dj2.twice
        if sj1 < 0 or sj2 < 0:
            continue
        s = So4Label.of(sj1, sj2)
        if not in_branching(source, s):
            continue
        r = reduced(ReducedKey(source, channel, s, entry))
        if not r:
            continue
        p = entry.part
        for m1 in m_values(s.j1):
            tpm1 = col.mt1.twice - m1.twice
            if abs(tpm1) > p.j1.twice:
                continue
            cg1 = su2_cg(sj1, m1.twice, p.j1.twice, tpm1,
                         t.j1.twice, col.mt1.twice)
            if not cg1:
                continue
            rc1 = r * cg1
            for m2 in m_values(s.j2):
                tpm2 = col.mt2.twice - m2.twice
                if abs(tpm2) > p.j2.twice:
                    continue
                cg2 = su2_cg(sj2, m2.twice, p.j2.twice, tpm2,
                             t.j2.twice, col.mt2.twice)
                if not cg2:
                    continue
                row = RowState(s, m1, m2, p, HalfInt(tpm1), HalfInt(tpm2))
                vec[row] = rc1 * cg2
    return vec


@dataclass(frozen=True)
class CouplingMatrix:
    """The full change of basis for one source irrep, stored column-sparse."""

    source: IrrepLabel
    rows: tuple[RowState, ...]
    cols: tuple[ColState, ...]
    columns: dict[ColState, Column]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def entry(self, row: RowState, col: ColState) -> SqrtSum:
        return self.columns[col].get(row, ZERO)

    def iter_entries(self) -> Iterator[tuple[int, int, SqrtSum]]:
        """Nonzero entries as (row index, col index, value), row-major."""
        row_index = {r: i for i, r in enumerate(self.rows)}
        triplets = []
        for j, col in enumerate(self.cols):
            for row, value in self.columns[col].items():
                triplets.append((row_index[row], j, value))
        triplets.sort(key=lambda t: (t[0], t[1]))
        yield from triplets

    def rows_of(self) -> dict[RowState, dict[ColState, SqrtSum]]:
        """Row-major view of the same data."""
        out: dict[RowState, dict[ColState, SqrtSum]] = {r: {} for r in self.rows}
        for col, vec in self.columns.items():
            for row, value in vec.items():
                out[row][col] = value
        return out

    def to_json_dict(self) -> dict:
        return {
            "schema": "so5cg/1",
            "kind": "coupling_matrix",
            "source": self.source.to_json(),
            "shape": list(self.shape),
            "rows": [r.to_json() for r in self.rows],
            "cols": [c.to_json() for c in self.cols],
            "entries": [[i, j, v.to_json_dict()]
                        for i, j, v in self.iter_entries()],
        }

    def to_csv_rows(self) -> Iterator[list[str]]:
        header = ["s_tj1", "s_tj2", "tm1", "tm2", "p_tj1", "p_tj2",
                  "tpm1", "tpm2", "target_tj1", "target_tj2", "copy",
                  "t_tj1", "t_tj2", "tmt1", "tmt2", "value"]
        yield header
        for i, j, v in self.iter_entries():
            r, c = self.rows[i], self.cols[j]
            yield [str(x) for x in (
                r.source_so4.j1.twice, r.source_so4.j2.twice,
                r.m1.twice, r.m2.twice,
                r.part.j1.twice, r.part.j2.twice,
                r.pm1.twice, r.pm2.twice,
                c.target.j1.twice, c.target.j2.twice, c.copy,
                c.target_so4.j1.twice, c.target_so4.j2.twice,
                c.mt1.twice, c.mt2.twice)] + [format(v)]


def product_rows(source: IrrepLabel) -> tuple[RowState, ...]:
    """Every product-basis state, in lexicographic order."""
    rows = []
    for s in branching(source):
        for m1 in m_values(s.j1):
            for m2 in m_values(s.j2):
                for p in branching(FOURTEEN):
                    for pm1 in m_values(p.j1):
                        for pm2 in m_values(p.j2):
                            rows.append(RowState(s, m1, m2, p, pm1, pm2))
    return tuple(sorted(rows, key=RowState.sort_key))


def coupled_cols(source: IrrepLabel) -> tuple[ColState, ...]:
    """Every coupled state over all present channels, in lexicographic order."""
    cols = []
    for block in decompose_with_14(source):
        for copy in range(1, block.multiplicity + 1):
            for t in branching(block.target):
                for mt1 in m_values(t.j1):
                    for mt2 in m_values(t.j2):
                        cols.append(ColState(block.target, copy, t, mt1, mt2))
    return tuple(sorted(cols, key=ColState.sort_key))


def coupling_matrix(source: IrrepLabel) -> CouplingMatrix:
    """Assemble the full coupling matrix; always square by the dimension audit."""
    rows = product_rows(source)
    cols = coupled_cols(source)
    assert len(cols) == 14 * dim(source), "dimension audit failed"
    assert len(rows) == len(cols)
    columns = {col: _column_vector(source, col) for col in cols}
    return CouplingMatrix(source, rows, cols, columns)


def column_gram_deviation(matrix: CouplingMatrix
                          ) -> Optional[tuple[ColState, ColState, SqrtSum]]:
    """First (col, col, value) where the exact Gram differs from identity.

    Columns with different total magnetic charge share no rows, so only
    same-charge pairs are examined; None means exact orthonormality.
    """
    sectors: dict[tuple[int, int], list[ColState]] = {}
    for col in matrix.cols:
        sectors.setdefault((col.mt1.twice, col.mt2.twice), []).append(col)
    for _, group in sorted(sectors.items()):
        for a in range(len(group)):
            va = matrix.columns[group[a]]
            for b in range(a, len(group)):
                vb = matrix.columns[group[b]]
                small, big = (va, vb) if len(va) <= len(vb) else (vb, va)
                acc = ZERO
                for row, value in small.items():
                    other = big.get(row)
                    if other is not None:
                        acc = acc + value * other
                want = 1 if a == b else 0
                if acc != want:
                    return (group[a], group[b], acc)
    return None


def row_gram_deviation(matrix: CouplingMatrix
                       ) -> Optional[tuple[RowState, RowState, SqrtSum]]:
    """Row-side analogue of column_gram_deviation (completeness check)."""
    rows_map = matrix.rows_of()
    sectors: dict[tuple[int, int], list[RowState]] = {}
    for row in matrix.rows:
        sectors.setdefault((row.m1.twice + row.pm1.twice,
                            row.m2.twice + row.pm2.twice), []).append(row)
    for _, group in sorted(sectors.items()):
        for a in range(len(group)):
            va = rows_map[group[a]]
            for b in range(a, len(group)):
                vb = rows_map[group[b]]
                small, big = (va, vb) if len(va) <= len(vb) else (vb, va)
                acc = ZERO
                for col, value in small.items():
                    other = big.get(col)
                    if other is not None:
                        acc = acc + value * other
                want = 1 if a == b else 0
                if acc != want:
                    return (group[a], group[b], acc)
    return None
