"""Machine-checkable invariant suites over the coupling engine.

Each check returns None on success or a short human-readable counterexample
string; the suite runners collect them into a deterministic report that the
command line front end renders as JSON.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Optional

from .errors import FormulaDomainError
from .exactnum import ONE, ZERO, sqrt_rational
from .fullcg import column_gram_deviation, coupling_matrix, row_gram_deviation
from .labels import (
    ALL_CHANNELS,
    ENTRY_SHIFTS,
    Channel,
    IrrepLabel,
    So4Label,
    branching,
    channels_present,
    dim,
    in_branching,
    iter_labels,
    m_values,
    multiplicity_of,
    target_of,
)
from .reduced import (
    aux_vector,
    channel_present_by_normalization,
    dot,
    mixing,
    reduced_vector,
    symmetry_extend,
)
from .su2 import su2_cg
from .tables import DIAGONAL_TABLE, RAISING_TABLES


def reduced_unitarity(max_twice_j1: int) -> Optional[str]:
    """Exact Gram identity of the reduced vectors at every (source, t)."""
    for src in iter_labels(max_twice_j1):
        chans = channels_present(src)
        vecs: dict[Channel, dict[So4Label, dict]] = {}
        targets = set()
        for ch in chans:
            tgt = target_of(src, ch)
            for t in branching(tgt):
                v = reduced_vector(src, ch, t)
                if v:
                    vecs.setdefault(ch, {})[t] = v
                    targets.add(t)
        for t in sorted(targets, key=lambda s: (s.j1.twice, s.j2.twice)):
            present = [ch for ch in chans if t in vecs.get(ch, {})]
            for c1, c2 in combinations_with_replacement(present, 2):
                g = dot(vecs[c1][t], vecs[c2][t])
                want = ONE if c1 == c2 else ZERO
                if g != want:
                    return (f"source {src}, t {t}, channels {c1} x {c2}: "
                            f"gram {g} != {want}")
    return None


def full_orthogonality(sources: tuple[IrrepLabel, ...]) -> Optional[str]:
    """Exact column orthonormality plus the squareness audit per source."""
    for src in sources:
        matrix = coupling_matrix(src)
        if matrix.shape != (14 * dim(src), 14 * dim(src)):
            return f"source {src}: shape {matrix.shape} fails the audit"
        bad = column_gram_deviation(matrix)
        if bad is not None:
            a, b, value = bad
            return f"source {src}: <{a}|{b}> = {value}"
    return None


def full_row_orthogonality(sources: tuple[IrrepLabel, ...]) -> Optional[str]:
    """Exact row orthonormality (completeness) for the spot-check sources."""
    for src in sources:
        bad = row_gram_deviation(coupling_matrix(src))
        if bad is not None:
            a, b, value = bad
            return f"source {src}: rows <{a}|{b}> = {value}"
    return None


def mixing_identities(max_twice_j1: int) -> Optional[str]:
    """<aux, copy1> = X and <aux, aux> = H^2 exactly, per target SO(4) label."""
    copy1 = Channel.of(0, 0, 1)
    for src in iter_labels(max_twice_j1):
        if not channel_present_by_normalization(src, copy1):
            continue
        mix = mixing(src)
        for t in branching(src):
            aux = aux_vector(src, t)
            c1v = reduced_vector(src, copy1, t)
            x_t = dot(aux, c1v)
            if x_t != mix.x:
                return f"source {src}, t {t}: <aux,copy1> = {x_t} != {mix.x}"
            h2_t = dot(aux, aux)
            if h2_t != mix.h2:
                return f"source {src}, t {t}: <aux,aux> = {h2_t} != {mix.h2}"
    return None


def symmetry_involution(max_twice_j1: int) -> Optional[str]:
    """Applying the transposition relation twice returns every raising entry."""
    for src in iter_labels(max_twice_j1):
        for ch in ALL_CHANNELS:
            if not ch.is_raising or ch not in channels_present(src):
                continue
            tgt = target_of(src, ch)
            for t in branching(tgt):
                for (s, part), v in reduced_vector(src, ch, t).items():
                    w = symmetry_extend(tgt, src, t, s, part)
                    if w != v:
                        return (f"source {src}, channel {ch}, t {t}, s {s}, "
                                f"part {part}: {w} != {v}")
    return None


def presence_agreement(max_twice_j1: int) -> Optional[str]:
    """Multiplicity count and normalization positivity decide presence alike."""
    for src in iter_labels(max_twice_j1):
        for ch in ALL_CHANNELS:
            tgt = target_of(src, ch)
            by_mult = tgt is not None and multiplicity_of(src, tgt) >= ch.copy
            by_norm = channel_present_by_normalization(src, ch)
            if by_mult != by_norm:
                return (f"source {src}, channel {ch}: multiplicity says "
                        f"{by_mult}, normalization says {by_norm}")
    return None


def guarded_zero_consistency(max_twice_j1: int) -> Optional[str]:
    """Outside the branching the printed formulas themselves vanish.

    Cells that refuse evaluation on a negative radicand are vacuously
    consistent; evaluable guarded cells must give exactly zero.
    """
    for src in iter_labels(max_twice_j1):
        b1, b2 = src.j1.as_fraction(), src.j2.as_fraction()
        for ch in channels_present(src):
            if ch.is_lowering or ch.copy == 2:
                continue
            table = RAISING_TABLES[ch.shift] if ch.is_raising else DIAGONAL_TABLE
            tgt = target_of(src, ch)
            for s in branching(src):
                j1, j2 = s.j1.as_fraction(), s.j2.as_fraction()
                for entry in ENTRY_SHIFTS:
                    tj1 = s.j1.twice + entry.dj1.twice
                    tj2 = s.j2.twice + entry.dj2.twice
                    if (tj1 >= 0 and tj2 >= 0
                            and in_branching(tgt, So4Label.of(tj1, tj2))):
                        continue
                    try:
                        v = table.bare_value(entry, j1, j2, b1, b2)
                    except FormulaDomainError:
                        continue
                    if not v.is_zero:
                        return (f"source {src}, channel {ch}, s {s}, "
                                f"entry {entry}: guarded cell evaluates to {v}")
    return None


def normalization_positivity(max_twice_j1: int) -> Optional[str]:
    """Every factor under a present channel's inverse square root is > 0."""
    for src in iter_labels(max_twice_j1):
        b1, b2 = src.j1.as_fraction(), src.j2.as_fraction()
        for ch in channels_present(src):
            if ch.is_lowering or ch.copy == 2:
                continue
            table = RAISING_TABLES[ch.shift] if ch.is_raising else DIAGONAL_TABLE
            values = table.factor_values(b1, b2)
            if any(v <= 0 for v in values):
                return f"source {src}, channel {ch}: factors {values}"
    return None


def su2_orthogonality(max_twice_j: int) -> Optional[str]:
    """Orthogonality and completeness of the SO(3) layer up to the bound."""
    for tj1 in range(max_twice_j + 1):
        for tj2 in range(max_twice_j + 1):
            # orthogonality in (J, M) for each fixed (m1, m2) pair sector
            for tm in range(-(tj1 + tj2), tj1 + tj2 + 1, 2):
                pairs = [(tm1, tm - tm1) for tm1 in range(-tj1, tj1 + 1, 2)
                         if abs(tm - tm1) <= tj2]
                js = [tJ for tJ in range(abs(tj1 - tj2), tj1 + tj2 + 1, 2)
                      if abs(tm) <= tJ]
                for ja, jb in combinations_with_replacement(js, 2):
                    acc = ZERO
                    for tm1, tm2 in pairs:
                        acc = acc + (su2_cg(tj1, tm1, tj2, tm2, ja, tm)
                                     * su2_cg(tj1, tm1, tj2, tm2, jb, tm))
                    want = ONE if ja == jb else ZERO
                    if acc != want:
                        return (f"j1 {tj1}/2 j2 {tj2}/2 M {tm}/2: "
                                f"<J {ja}/2|J {jb}/2> = {acc}")
                for (a1, a2), (b1, b2) in combinations_with_replacement(pairs, 2):
                    acc = ZERO
                    for tJ in js:
                        acc = acc + (su2_cg(tj1, a1, tj2, a2, tJ, tm)
                                     * su2_cg(tj1, b1, tj2, b2, tJ, tm))
                    want = ONE if (a1, a2) == (b1, b2) else ZERO
                    if acc != want:
                        return (f"j1 {tj1}/2 j2 {tj2}/2: completeness "
                                f"({a1},{a2}) x ({b1},{b2}) = {acc}")
    return None


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: Optional[str]

    def to_json_dict(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _run(name: str, fn: Callable[[], Optional[str]]) -> CheckResult:
    bad = fn()
    return CheckResult(name, bad is None, bad)


ORTHOGONALITY_SOURCES = tuple(IrrepLabel.of(*t) for t in
                              [(0, 0), (1, 0), (1, 1), (2, 0), (2, 2), (3, 1), (4, 2)])
ROW_SPOT_SOURCES = tuple(IrrepLabel.of(*t) for t in
                         [(1, 0), (1, 1), (2, 0), (2, 2)])


def suite_orthogonality(max_twice_j: int) -> list[CheckResult]:
    full_bound = min(max_twice_j, 4)
    full_sources = tuple(s for s in ORTHOGONALITY_SOURCES
                         if s.j1.twice <= full_bound)
    return [
        _run(f"reduced_unitarity <= {max_twice_j}",
             lambda: reduced_unitarity(max_twice_j)),
        _run(f"full_orthogonality {[str(s) for s in full_sources]}",
             lambda: full_orthogonality(full_sources)),
        _run(f"row_orthogonality {[str(s) for s in ROW_SPOT_SOURCES]}",
             lambda: full_row_orthogonality(ROW_SPOT_SOURCES)),
    ]


def suite_mixing(max_twice_j: int) -> list[CheckResult]:
    return [
        _run(f"mixing_identities <= {max_twice_j}",
             lambda: mixing_identities(max_twice_j)),
        _run(f"presence_agreement <= {max_twice_j}",
             lambda: presence_agreement(max_twice_j)),
        _run(f"normalization_positivity <= {max_twice_j}",
             lambda: normalization_positivity(max_twice_j)),
        _run(f"guarded_zero <= {min(max_twice_j, 6)}",
             lambda: guarded_zero_consistency(min(max_twice_j, 6))),
    ]


def suite_symmetry(max_twice_j: int) -> list[CheckResult]:
    bound = min(max_twice_j, 4)
    return [
        _run(f"symmetry_involution <= {bound}",
             lambda: symmetry_involution(bound)),
        _run("symmetry_example", _symmetry_example),
    ]


def _symmetry_example() -> Optional[str]:
    from fractions import Fraction

    from .labels import PART_11
    value = symmetry_extend(IrrepLabel.of(0, 0), IrrepLabel.of(2, 2),
                            So4Label.of(0, 0), So4Label.of(2, 2), PART_11)
    if value * value != sqrt_rational(Fraction(81, 196)):
        return f"lowering example squared is {value * value}, want 9/14"
    squares = ZERO
    for s, part in [(So4Label.of(2, 2), So4Label.of(2, 2)),
                    (So4Label.of(1, 1), So4Label.of(1, 1)),
                    (So4Label.of(0, 0), So4Label.of(0, 0))]:
        v = symmetry_extend(IrrepLabel.of(0, 0), IrrepLabel.of(2, 2),
                            So4Label.of(0, 0), s, part)
        squares = squares + v * v
    if squares != ONE:
        return f"lowering squares sum to {squares}, want 1"
    return None


def suite_su2(max_twice_j: int) -> list[CheckResult]:
    return [
        _run(f"su2_orthogonality <= {min(max_twice_j, 6)}",
             lambda: su2_orthogonality(min(max_twice_j, 6))),
    ]


def suite_oracle(source: Optional[IrrepLabel], tol: float,
                 projector_tol: float = 1e-8) -> list[CheckResult]:
    from .oracle import compare, numeric_decompose
    from .labels import decompose_with_14

    def one(src: IrrepLabel) -> Optional[str]:
        report = compare(src, tol=tol, projector_tol=projector_tol)
        if not report.passed:
            worst = max(report.blocks, key=lambda b: max(b.max_abs_dev,
                                                         b.projector_dev))
            return (f"source {src}, block {worst.target}: "
                    f"dev {worst.max_abs_dev:.3e}, "
                    f"projector {worst.projector_dev:.3e}")
        return None

    if source is not None:
        return [_run(f"oracle_compare {source}", lambda: one(source))]

    def content_sweep() -> Optional[str]:
        for src in iter_labels(8):
            if dim(src) > 35:
                continue
            nd = numeric_decompose(src)
            exact = {e.target: e.multiplicity for e in decompose_with_14(src)}
            if nd.content() != exact:
                return f"source {src}: numeric {nd.content()} != {exact}"
        return None

    checks = [_run("oracle_decompose dim<=35", content_sweep)]
    for t in [(1, 0), (1, 1), (2, 0)]:
        src = IrrepLabel.of(*t)
        checks.append(_run(f"oracle_compare {src}", lambda s=src: one(s)))
    checks.append(_run("oracle_compare 3/2,1/2 (copy 2)",
                       lambda: one(IrrepLabel.of(3, 1))))
    return checks


def run_suite(suite: str, max_twice_j: int = 8, tol: float = 1e-9,
              source: Optional[IrrepLabel] = None) -> list[CheckResult]:
    if suite == "orthogonality":
        return suite_orthogonality(max_twice_j)
    if suite == "mixing":
        return suite_mixing(max_twice_j)
    if suite == "symmetry":
        return suite_symmetry(max_twice_j)
    if suite == "su2":
        return suite_su2(max_twice_j)
    if suite == "oracle":
        return suite_oracle(source, tol)
    if suite == "all":
        out = []
        out.extend(suite_orthogonality(max_twice_j))
        out.extend(suite_mixing(max_twice_j))
        out.extend(suite_symmetry(max_twice_j))
        out.extend(suite_su2(max_twice_j))
        out.extend(suite_oracle(source, tol))
        return out
    raise ValueError(f"unknown suite: {suite}")
