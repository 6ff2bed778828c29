"""Exact Euler characteristics of finite categories.

The similarity matrix counts hom-sets over the rationals; a weighting
(resp. coweighting) solves the all-ones column (row) system exactly.
The Euler characteristic exists iff both do, and equals the entry sum
of either.  All arithmetic is ``fractions.Fraction``; nothing here is
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .covers import Cover, Subcategory, classify_subcategory, intersect, union_closure
from .fincat import FinCategory, ValidationReport, Violation

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class QMatrix:
    """A dense rational matrix, rows of Fractions."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "QMatrix":
        ent = tuple(tuple(Fraction(x) for x in row) for row in rows)
        ncols = len(ent[0]) if ent else 0
        if any(len(r) != ncols for r in ent):
            raise ValueError("ragged rows")
        return cls(len(ent), ncols, ent)

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       tuple(tuple(self.entries[i][j] for i in range(self.rows))
                             for j in range(self.cols)))

    def mul(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = [ZERO] * other.cols
            for k in range(self.cols):
                a = self.entries[i][k]
                if a:
                    orow = other.entries[k]
                    for j in range(other.cols):
                        if orow[j]:
                            row[j] += a * orow[j]
            out.append(tuple(row))
        return QMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)


def _reduce(rows: list[list[Fraction]], width: int) -> list[int]:
    """In-place Gauss-Jordan over the first ``width`` columns.

    Columns beyond ``width`` (augmented right-hand sides) are carried
    along.  Returns the pivot columns.  Zero entries are skipped, so
    triangular similarity matrices reduce in near-linear time.
    """
    pivots: list[int] = []
    r = 0
    for col in range(width):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        lead = prow[col]
        if lead != 1:
            for j in range(col, len(prow)):
                if prow[j]:
                    prow[j] /= lead
        for i, row in enumerate(rows):
            if i != r and row[col]:
                c = row[col]
                for j in range(col, len(row)):
                    if prow[j]:
                        row[j] -= c * prow[j]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(m: QMatrix) -> int:
    rows = [list(r) for r in m.entries]
    return len(_reduce(rows, m.cols))


def solve_right(
    m: QMatrix, rhs: Sequence[Fraction], free_value: Fraction = ZERO
) -> Optional[tuple[Fraction, ...]]:
    """Exact solution of m x = rhs, or None iff the system is inconsistent.

    Underdetermined systems get the canonical solution with every free
    variable set to ``free_value`` (0 by default).
    """
    if len(rhs) != m.rows:
        raise ValueError("rhs length mismatch")
    rows = [list(r) + [Fraction(b)] for r, b in zip(m.entries, rhs)]
    pivots = _reduce(rows, m.cols)
    for i in range(len(pivots), m.rows):
        if rows[i][-1]:
            return None
    x = [Fraction(free_value)] * m.cols
    pivot_set = set(pivots)
    for r_idx, col in enumerate(pivots):
        val = rows[r_idx][-1]
        if free_value:
            for j in range(m.cols):
                if j != col and j not in pivot_set and rows[r_idx][j]:
                    val -= rows[r_idx][j] * free_value
        x[col] = val
    return tuple(x)


def zeta_matrix(cat: FinCategory) -> QMatrix:
    """Hom-set cardinalities in object declaration order."""
    return QMatrix.from_rows(
        [[len(cat.hom_set(x, y)) for y in cat.objects] for x in cat.objects]
    )


def solve_weighting(
    cat: FinCategory, side: str = "weight", free_value: Fraction = ZERO
) -> Optional[tuple[Fraction, ...]]:
    """Weighting (zeta w = 1) or coweighting (v zeta = 1) of a category."""
    if side not in ("weight", "coweight"):
        raise ValueError(f"side must be 'weight' or 'coweight', got {side!r}")
    z = zeta_matrix(cat)
    if side == "coweight":
        z = z.transpose()
    return solve_right(z, [ONE] * z.rows, free_value)


@dataclass(frozen=True)
class EulerResult:
    """chi is present iff both vectors are; reason says which is missing."""

    chi: Optional[Fraction]
    weighting: Optional[tuple[Fraction, ...]]
    coweighting: Optional[tuple[Fraction, ...]]
    reason: str = ""


def euler_characteristic(cat: FinCategory) -> EulerResult:
    """Sum of a weighting when a coweighting also exists; exact rational.

    The empty category has Euler characteristic 0.
    """
    w = solve_weighting(cat, "weight")
    v = solve_weighting(cat, "coweight")
    if w is not None and v is not None:
        return EulerResult(sum(w, ZERO), w, v)
    missing = [name for name, vec in (("weighting", w), ("coweighting", v)) if vec is None]
    return EulerResult(None, w, v, reason="no " + " and no ".join(missing))


def inclusion_exclusion_terms(
    cover: Cover,
) -> list[tuple[tuple[str, ...], Optional[Fraction]]]:
    """chi of every strictly increasing intersection, in level-lex order.

    Empty intersections are kept (their chi is 0), so the alternating
    sum below matches the literal formula term by term.
    """
    from itertools import combinations

    out = []
    for n in range(len(cover.index_order)):
        for labels in combinations(cover.index_order, n + 1):
            piece = intersect([cover.parts[a] for a in labels]).as_category()
            out.append((labels, euler_characteristic(piece).chi))
    return out


def inclusion_exclusion_sum(cover: Cover) -> Optional[Fraction]:
    """Alternating sum of piece characteristics; None if any is undefined.

    Equals chi of the parent for ideal covers and for filter covers;
    fails in general (see the two-part counterexample in the tests).
    """
    total = ZERO
    for labels, chi in inclusion_exclusion_terms(cover):
        if chi is None:
            return None
        total += chi if (len(labels) - 1) % 2 == 0 else -chi
    return total


def two_set_formula(a: Subcategory, b: Subcategory) -> ValidationReport:
    """chi(A u B) = chi(A) + chi(B) - chi(A n B) for two ideals or two filters.

    Hypothesis violations are reported, not thrown; the report's details
    list every chi value that could be computed.
    """
    v: list[Violation] = []
    details: list[str] = []
    if a.parent != b.parent:
        return ValidationReport((Violation("parents", (), "subcategories have different parents"),))
    ca, cb = classify_subcategory(a), classify_subcategory(b)
    if not ((ca.is_ideal and cb.is_ideal) or (ca.is_filter and cb.is_filter)):
        v.append(Violation(
            "hypothesis", (),
            "parts are not both ideals or both filters; the two-set formula can fail "
            f"(A: {ca}, B: {cb})",
        ))
    values = {}
    for label, sub in (("A", a), ("B", b), ("AnB", intersect([a, b])), ("AuB", union_closure([a, b]))):
        chi = euler_characteristic(sub.as_category()).chi
        values[label] = chi
        details.append(f"chi({label}) = {'undefined' if chi is None else chi}")
        if chi is None:
            v.append(Violation("hypothesis", (label,), f"chi({label}) does not exist"))
    if not v:
        lhs = values["AuB"]
        rhs = values["A"] + values["B"] - values["AnB"]
        if lhs != rhs:
            v.append(Violation("equality", (), f"chi(AuB) = {lhs} but chi(A)+chi(B)-chi(AnB) = {rhs}"))
    return ValidationReport(tuple(v), details=tuple(details))


def mobius_oracle(cat: FinCategory) -> Fraction:
    """Euler characteristic of a poset via Mobius inversion.

    Independent of the weighting solver: sums mu over all intervals of
    the order relation.  Raises on non-poset input.
    """
    if not cat.is_poset():
        raise ValueError("mobius_oracle requires a poset category")
    objs = cat.objects
    leq = {(x, y) for x in objs for y in objs if cat.hom_set(x, y)}
    mu: dict[tuple[str, str], Fraction] = {}

    def mu_of(x: str, y: str) -> Fraction:
        if (x, y) in mu:
            return mu[(x, y)]
        if x == y:
            val = ONE
        else:
            val = -sum(
                (mu_of(x, z) for z in objs if (x, z) in leq and (z, y) in leq and z != y),
                ZERO,
            )
        mu[(x, y)] = val
        return val

    return sum((mu_of(x, y) for (x, y) in sorted(leq)), ZERO)


def format_rational(q: Fraction) -> str:
    """Render p/q, or just n when integral."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
