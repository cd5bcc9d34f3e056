"""Gelfand-Tsetlin patterns, branching and Weyl dimensions for gl(n) weights.

A dominant weight with integer label differences indexes an irreducible
module; patterns interlacing down the chain gl(1) < gl(2) < ... < gl(n)
enumerate its canonical orthonormal basis.  The canonical order is
lexicographic on the rows read top row first, larger labels first, so the
highest weight state always has ordinal 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .kernel import DomainError, to_rational

Weight = tuple[Fraction, ...]


def weight(labels) -> Weight:
    """Coerce a sequence of ints/strings/Fractions to a weight tuple."""
    return tuple(to_rational(x) for x in labels)


def format_weight(lam) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


def is_dominant(lam) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def has_integer_steps(lam) -> bool:
    return all((lam[i] - lam[i + 1]).denominator == 1 for i in range(len(lam) - 1))


def check_highest_weight(lam) -> Weight:
    """Validate dominance and integer label differences, returning the weight."""
    lam = weight(lam)
    if not lam:
        raise DomainError("weight must have at least one label")
    if not is_dominant(lam):
        raise DomainError(
            f"weight {format_weight(lam)} is not dominant (labels must not increase)")
    if not has_integer_steps(lam):
        raise DomainError(
            f"weight {format_weight(lam)} must have integer label differences")
    return lam


def rows_interlace(upper, lower) -> bool:
    """Betweenness: upper[i] >= lower[i] >= upper[i+1] with integer gaps."""
    if len(lower) != len(upper) - 1:
        return False
    for i, low in enumerate(lower):
        if not (upper[i] >= low >= upper[i + 1]):
            return False
        if (upper[i] - low).denominator != 1:
            return False
    return True


def _descending_steps(hi: Fraction, lo: Fraction):
    value = hi
    while value >= lo:
        yield value
        value -= 1


def branch(lam) -> list[Weight]:
    """All gl(n) weights interlacing a gl(n+1) weight, in canonical order.

    The list is multiplicity free and ordered lexicographically with larger
    labels first, matching the pattern enumeration order.
    """
    lam = check_highest_weight(lam)
    if len(lam) < 2:
        raise DomainError("branching needs a gl(n+1) weight with n >= 1")
    out: list[Weight] = []

    def extend(prefix: tuple[Fraction, ...], i: int):
        if i == len(lam) - 1:
            out.append(prefix)
            return
        for value in _descending_steps(lam[i], lam[i + 1]):
            extend(prefix + (value,), i + 1)

    extend((), 0)
    return out


@dataclass(frozen=True)
class GTPattern:
    """Triangular array of interlacing labels; rows[0] is the top row.

    Row k (1-based level, length k) is rows[n - k] for an n-label pattern.
    """

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def row(self, k: int) -> tuple[Fraction, ...]:
        """Length-k row at level k (1 <= k <= size)."""
        if not 1 <= k <= self.size:
            raise DomainError(f"level {k} outside 1..{self.size}")
        return self.rows[self.size - k]

    def label(self, k: int, i: int) -> Fraction:
        """Label at level k, position i (both 1-based)."""
        return self.row(k)[i - 1]

    def top(self) -> Weight:
        return self.rows[0]

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self.rows for x in row)

    def is_valid(self) -> bool:
        return all(
            rows_interlace(self.rows[i], self.rows[i + 1])
            for i in range(self.size - 1)
        )

    def shifted(self, k: int, r: int, step: int = 1) -> "GTPattern | None":
        """Pattern with label (k, r) moved by step, or None if that leaves
        the interlacing lattice."""
        if not 1 <= r <= k:
            raise DomainError(f"row index {r} outside 1..{k}")
        n = self.size
        if not 1 <= k < n:
            raise DomainError(f"only levels 1..{n - 1} may shift (top row is fixed)")
        idx = n - k
        new_row = list(self.rows[idx])
        new_row[r - 1] += step
        rows = self.rows[:idx] + (tuple(new_row),) + self.rows[idx + 1:]
        if not rows_interlace(rows[idx - 1], rows[idx]):
            return None
        if k > 1 and not rows_interlace(rows[idx], rows[idx + 1]):
            return None
        return GTPattern(rows)

    def shifted_many(self, moves) -> "GTPattern | None":
        """Pattern with several (level, index, step) moves applied at once.

        Validity is checked only on the final pattern; a chain may pass
        through transiently broken intermediate shapes.
        """
        rows = [list(row) for row in self.rows]
        n = self.size
        for k, r, step in moves:
            if not (1 <= k < n and 1 <= r <= k):
                raise DomainError(f"move ({k}, {r}) outside the pattern")
            rows[n - k][r - 1] += step
        candidate = GTPattern(tuple(tuple(row) for row in rows))
        return candidate if candidate.is_valid() else None


def pattern_weight(p: GTPattern) -> Weight:
    """gl(n) weight of a pattern: w_k = sum(row k) - sum(row k-1)."""
    sums = [Fraction(0)] * (p.size + 1)
    for k in range(1, p.size + 1):
        sums[k] = sum(p.row(k), Fraction(0))
    return tuple(sums[k] - sums[k - 1] for k in range(1, p.size + 1))


def enumerate_patterns(lam) -> list[GTPattern]:
    """All patterns with top row lam, in canonical order.

    The length equals dimension(lam); cross-checking the two is the
    standard sanity test on the enumeration.
    """
    lam = check_highest_weight(lam)
    if len(lam) == 1:
        return [GTPattern((lam,))]
    out = []
    for mu in branch(lam):
        for sub in enumerate_patterns(mu):
            out.append(GTPattern((lam,) + sub.rows))
    return out


def dimension(lam) -> int:
    """Weyl dimension formula, prod_{i<j} (lam_i - lam_j + j - i) / (j - i).

    Computed exactly; serves as an independent oracle for the pattern count.
    """
    lam = check_highest_weight(lam)
    n = len(lam)
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(lam[i] - lam[j] + j - i, j - i)
    if value.denominator != 1:
        raise DomainError(f"dimension of {lam} is not integral")
    return int(value)


def pattern_ordinals(patterns) -> dict[GTPattern, int]:
    """Ordinal of each pattern in the canonical basis order."""
    return {p: i for i, p in enumerate(patterns)}
