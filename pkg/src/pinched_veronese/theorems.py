"""Expected-value catalogs for the two-variable Betti tables, and verification.

Each pinch class has a catalog of closed-form table entries, explicit zero
cells, and (for the interior class) cells that no closed form covers; verify()
computes the actual table, compares every cataloged claim, and reports the
uncovered cells without judging them.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from math import comb
from typing import Optional

from .betti import (
    BettiTable,
    ClassificationReport,
    DEFAULT_COMPLEX_BUDGET,
    classify,
    graded_betti,
    witness_non_cm,
)
from .linalg import DEFAULT_FIELD, FieldSpec
from .semigroup import PinchClass, PinchConfig, normality_probe
from .series import k_polynomial_check


@dataclass(frozen=True)
class ExpectedTable:
    """Catalog of claims about one table: exact values, zeros, and open cells."""

    label: str
    known: dict[tuple[int, int], int]
    known_details: dict[tuple[int, int], str]
    unknown: frozenset[tuple[int, int]]
    named_zeros: dict[str, tuple[int, int]]
    nonzero_cells: dict[str, tuple[int, int]]

    def implied_zero_cells(self, i_max: int, s_max: int) -> list[tuple[int, int]]:
        """Every scanned cell not pinned by a known value and not left open."""
        out = []
        for i in range(i_max + 1):
            for s in range(s_max + 1):
                cell = (i, s)
                if cell not in self.known and cell not in self.unknown:
                    out.append(cell)
        return out


def expected_max_d(d: int) -> ExpectedTable:
    """Completely linear table: (i, i+1) holds i*C(d-1, i+1)."""
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")
    known = {(0, 0): 1}
    details = {(0, 0): "unit"}
    for i in range(1, d - 1):
        known[(i, i + 1)] = i * comb(d - 1, i + 1)
        details[(i, i + 1)] = f"i*C(d-1,i+1) at i={i}"
    return ExpectedTable(
        label="max=d",
        known=known,
        known_details=details,
        unknown=frozenset(),
        named_zeros={},
        nonzero_cells={},
    )


def expected_max_d_minus_1(d: int) -> ExpectedTable:
    """Linear strand of length d-3 plus a lone socle entry at (d-2, d).

    The strand value C(d,i+1)*i*(d-i-2)/(d-1) must divide out exactly; a
    non-integral value signals a transcription bug, not a rounding question.
    """
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")
    known = {(0, 0): 1}
    details = {(0, 0): "unit"}
    for i in range(1, d - 2):
        num = comb(d, i + 1) * i * (d - i - 2)
        if num % (d - 1) != 0:
            raise ArithmeticError(
                f"strand value C({d},{i + 1})*{i}*{d - i - 2} is not divisible by {d - 1}"
            )
        known[(i, i + 1)] = num // (d - 1)
        details[(i, i + 1)] = f"C(d,i+1)*i*(d-i-2)/(d-1) at i={i}"
    known[(d - 2, d)] = 1
    details[(d - 2, d)] = "socle corner"
    return ExpectedTable(
        label="max=d-1",
        known=known,
        known_details=details,
        unknown=frozenset(),
        named_zeros={},
        nonzero_cells={},
    )


def expected_interior(d: int, i: int) -> ExpectedTable:
    """Interior-pinch catalog: strand up to the linearity break, tail values,
    explicit zero cells, and the open cells in between.

    The pinch index is normalized to min(i, d-i): the ring for (i, d-i) and
    (d-i, i) is the same, and only the normalized index makes the strand and
    break claims consistent under that identification.
    """
    if d < 4:
        raise ValueError(f"d must be >= 4 for an interior pinch, got {d}")
    if not 2 <= i <= (d + 1) // 2 or max(i, d - i) >= d - 1:
        raise ValueError(f"pinch index {i} is not interior for d={d}")
    i = min(i, d - i)
    known = {(0, 0): 1}
    details = {(0, 0): "unit"}
    for j in range(1, i):
        known[(j, j + 1)] = (d - 1) * comb(d - 2, j) - comb(d, j) - comb(d - 2, j + 1)
        details[(j, j + 1)] = f"(d-1)*C(d-2,j) - C(d,j) - C(d-2,j+1) at j={j}"
    known[(d - 3, d - 1)] = comb(d, 2) - 1
    details[(d - 3, d - 1)] = "C(d,2) - 1"
    known[(d - 2, d)] = comb(d, 3) - comb(d, 2) + 1
    details[(d - 2, d)] = "C(d,3) - C(d,2) + 1"
    known[(d - 1, d + 1)] = 1
    details[(d - 1, d + 1)] = "top corner"
    unknown = {(j, j + 1) for j in range(i, d - 2)} | {
        (c, c + 2) for c in range(i - 1, d - 3)
    }
    unknown -= set(known)
    named_zeros = {
        "first-row-tail-zero": (d - 2, d - 1),
        "strand-break-zero": (i - 2, i),
    }
    nonzero = {
        "second-strand-head": (d - 3, d - 2),
        "linearity-break": (i - 1, i + 1),
    }
    return ExpectedTable(
        label="max<d-1",
        known=known,
        known_details=details,
        unknown=frozenset(unknown),
        named_zeros=named_zeros,
        nonzero_cells=nonzero,
    )


def expected_table(config: PinchConfig) -> ExpectedTable:
    if config.n != 2:
        raise ValueError("expected tables are cataloged for n = 2 only")
    cls = config.pinch_class
    if cls is PinchClass.MAX_D:
        return expected_max_d(config.d)
    if cls is PinchClass.MAX_D_MINUS_1:
        return expected_max_d_minus_1(config.d)
    return expected_interior(config.d, min(config.m))


# -- verification ---------------------------------------------------------


@dataclass
class Check:
    """One verified claim; passed is None for purely informational items."""

    label: str
    detail: str
    passed: Optional[bool]
    expected: object = None
    actual: object = None

    @property
    def judged(self) -> bool:
        return self.passed is not None

    def to_json_obj(self) -> dict:
        return {
            "label": self.label,
            "detail": self.detail,
            "passed": self.passed,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
        }


def _jsonable(x):
    if isinstance(x, (int, str, bool, type(None), float)):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


@dataclass
class VerificationReport:
    config: PinchConfig
    field: FieldSpec
    checks: list[Check] = dataclass_field(default_factory=list)
    classification: Optional[ClassificationReport] = None
    table: Optional[BettiTable] = None

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks if c.judged)

    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if c.judged and not c.passed]

    def to_text(self) -> str:
        lines = [f"verification of n={self.config.n} d={self.config.d} m={tuple(self.config.m)} over {self.field}"]
        if self.table is not None:
            lines.append(self.table.to_text())
        for c in self.checks:
            if not c.judged:
                lines.append(f"  [open] {c.label}: {c.detail} (computed {c.actual})")
                continue
            mark = "PASS" if c.passed else "FAIL"
            suffix = "" if c.passed else f" (expected {c.expected}, got {c.actual})"
            lines.append(f"  [{mark}] {c.label}: {c.detail}{suffix}")
        lines.append(f"  => {'all checks pass' if self.all_pass else 'FAILURES PRESENT'}")
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "n": self.config.n,
            "d": self.config.d,
            "m": list(self.config.m),
            "field": self.field.label,
            "all_pass": self.all_pass,
            "checks": [c.to_json_obj() for c in self.checks],
            "classification": self.classification.to_json_obj() if self.classification else None,
            "table": self.table.to_json_obj() if self.table is not None else None,
        }


def _expected_cm(config: PinchConfig) -> bool:
    top = max(config.m)
    return top == config.d or (top == config.d - 1 and config.n == 2)


def _verify_two_variables(
    config: PinchConfig,
    field: FieldSpec,
    cache,
    jobs: int,
    budget: int,
) -> VerificationReport:
    table = graded_betti(config, field, cache=cache, jobs=jobs, budget=budget)
    report = VerificationReport(config=config, field=field, table=table)
    checks = report.checks
    exp = expected_table(config)

    for cell in sorted(exp.known):
        i, s = cell
        want = exp.known[cell]
        got = table.entry(i, s)
        checks.append(
            Check(
                label=f"betti[{i},{s}]",
                detail=exp.known_details[cell],
                passed=(got == want),
                expected=want,
                actual=got,
            )
        )

    for name, (i, s) in sorted(exp.named_zeros.items()):
        got = table.entry(i, s)
        checks.append(
            Check(
                label=f"zero[{i},{s}]", detail=name, passed=(got == 0), expected=0, actual=got
            )
        )
    zero_cells = exp.implied_zero_cells(table.i_max, table.s_max)
    offenders = [(i, s, table.entry(i, s)) for i, s in zero_cells if table.entry(i, s)]
    checks.append(
        Check(
            label="zero-region",
            detail=f"{len(zero_cells)} cells outside the cataloged support",
            passed=not offenders,
            expected="all zero",
            actual=offenders or "all zero",
        )
    )
    for name, (i, s) in sorted(exp.nonzero_cells.items()):
        got = table.entry(i, s)
        checks.append(
            Check(
                label=f"nonzero[{i},{s}]", detail=name, passed=(got != 0), expected="nonzero", actual=got
            )
        )

    classification = classify(table)
    report.classification = classification
    want_cm = _expected_cm(config)
    checks.append(
        Check(
            label="cm-classification",
            detail="depth equals Krull dimension exactly on the two CM classes",
            passed=(classification.is_cm == want_cm),
            expected=want_cm,
            actual=classification.is_cm,
        )
    )
    if config.pinch_class is PinchClass.MAX_D_MINUS_1:
        checks.append(
            Check(
                label="gorenstein",
                detail="the max=d-1 class is Gorenstein",
                passed=classification.is_gorenstein,
                expected=True,
                actual=classification.is_gorenstein,
            )
        )
    if classification.is_gorenstein:
        totals = [table.total(i) for i in range(classification.pdim + 1)]
        checks.append(
            Check(
                label="gorenstein-symmetry",
                detail="total Betti numbers read the same in both directions",
                passed=(totals == totals[::-1]),
                expected=totals[::-1],
                actual=totals,
            )
        )

    cls = config.pinch_class
    if cls is PinchClass.MAX_D:
        want_lin = classification.pdim
    elif cls is PinchClass.MAX_D_MINUS_1:
        want_lin = config.d - 3
    else:
        want_lin = min(config.m) - 2
    checks.append(
        Check(
            label="linearity-index",
            detail="length of the purely linear strand",
            passed=(classification.linearity_index == want_lin),
            expected=want_lin,
            actual=classification.linearity_index,
        )
    )
    want_reg = 1 if cls is PinchClass.MAX_D else 2
    checks.append(
        Check(
            label="regularity",
            detail="observed max of s - i over the support",
            passed=(classification.observed_regularity == want_reg),
            expected=want_reg,
            actual=classification.observed_regularity,
        )
    )
    checks.append(
        Check(
            label="series-identity",
            detail="alternating Betti sums equal the cleared Hilbert numerator",
            passed=k_polynomial_check(table, config),
            expected=True,
            actual=None,
        )
    )

    for i, s in sorted(exp.unknown):
        checks.append(
            Check(
                label=f"open[{i},{s}]",
                detail=f"no closed form cataloged (field {field.label})",
                passed=None,
                actual=table.entry(i, s),
            )
        )
    return report


def _verify_general(
    config: PinchConfig, field: FieldSpec, budget: int
) -> VerificationReport:
    report = VerificationReport(config=config, field=field)
    if _expected_cm(config):
        probe = normality_probe(config, degree_bound=6, multiplier_bound=4)
        report.checks.append(
            Check(
                label="normality-probe",
                detail="bounded search for a non-normality witness (t <= 6, mult <= 4)",
                passed=(probe is None),
                expected=None,
                actual=probe,
            )
        )
    else:
        witness = witness_non_cm(config, field, budget=budget)
        report.checks.append(
            Check(
                label="noncm-witness",
                detail=f"homology of the witness complex at h={tuple(witness.h)}, i={witness.index}",
                passed=(witness.dimension >= 1),
                expected=">= 1",
                actual=witness.dimension,
            )
        )
        report.checks.append(
            Check(
                label="cm-classification",
                detail="witness forces depth below the Krull dimension",
                passed=True,
                expected=False,
                actual=False,
            )
        )
    return report


def verify(
    config: PinchConfig,
    field: FieldSpec = DEFAULT_FIELD,
    *,
    cache=None,
    jobs: int = 1,
    budget: int = DEFAULT_COMPLEX_BUDGET,
) -> VerificationReport:
    """Compute, compare against the catalogs, classify, and itemize the outcome.

    For n = 2 this runs the full pipeline (table, catalog comparison,
    classification, series identity).  For n >= 3 there is no catalog; the
    report carries the cheap classification evidence (a non-CM witness, or a
    clean normality probe).
    """
    if config.n == 2:
        return _verify_two_variables(config, field, cache, jobs, budget)
    return _verify_general(config, field, budget)
