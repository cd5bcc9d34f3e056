"""Scalar kernel: exact rationals, signed square roots, dense float64 helpers.

Everything with a closed form (characteristic roots, Casimir eigenvalues,
squared matrix elements) is evaluated in exact rational arithmetic; operator
level checks run in float64 because matrix elements are square roots of
rationals and sums of those do not stay closed-form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Arbitrary-precision rational scalar; always lowest terms, denominator > 0.
Rational = Fraction


class DimensionError(ValueError):
    """Matrix shapes do not conform to the requested operation."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class DegenerateRootError(ValueError):
    """Coincident characteristic roots where distinct roots are required."""


class DegeneratePatternError(ValueError):
    """A formula denominator vanishes for this pattern/shift combination."""


class SchurViolationError(RuntimeError):
    """An operator expected to act as a scalar failed the scalarity check."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a construction bug."""


class ConventionError(RuntimeError):
    """No candidate sign convention satisfies the calibration identities."""


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or a string like '3/2' to an exact Fraction.

    Floats are rejected on purpose: exact quantities must never pass
    through binary floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise DomainError(f"not an exact rational: {value!r}")


@dataclass(frozen=True)
class Surd:
    """Signed square root ``sign * sqrt(radicand)`` of a non-negative rational.

    Closed under multiplication and negation; sums are not closed, so
    callers needing sums convert to float first.
    """

    sign: int
    radicand: Fraction

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        rad = to_rational(self.radicand)
        object.__setattr__(self, "radicand", rad)
        if rad < 0:
            raise DomainError(f"radicand must be non-negative, got {rad}")
        if (self.sign == 0) != (rad == 0):
            raise DomainError("sign is zero exactly when the radicand is zero")

    @staticmethod
    def zero() -> "Surd":
        return Surd(0, Fraction(0))

    @staticmethod
    def sqrt(radicand) -> "Surd":
        """Positive square root of a non-negative rational."""
        rad = to_rational(radicand)
        return Surd(1 if rad > 0 else 0, rad)

    @property
    def squared(self) -> Fraction:
        """Exact square; the sign information is lost."""
        return self.radicand

    def __mul__(self, other):
        if not isinstance(other, Surd):
            return NotImplemented
        return Surd(self.sign * other.sign, self.radicand * other.radicand)

    def __neg__(self) -> "Surd":
        if self.sign == 0:
            return self
        return Surd(-self.sign, self.radicand)

    def __float__(self) -> float:
        return self.sign * math.sqrt(float(self.radicand))

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        return f"{self.sign}*sqrt({self.radicand.numerator}/{self.radicand.denominator})"


@dataclass(frozen=True)
class Tolerance:
    """Thresholds for declaring a float matrix zero.

    A matrix M counts as zero when max|M_ij| <= abs_eps + rel_eps * scale,
    where scale is the largest absolute entry among the reference inputs.
    """

    abs_eps: float = 1e-9
    rel_eps: float = 1e-9

    def __post_init__(self):
        if not (self.abs_eps > 0 and self.rel_eps > 0):
            raise DomainError("tolerance components must be strictly positive")

    def threshold(self, scale: float = 0.0) -> float:
        return self.abs_eps + self.rel_eps * scale

    def is_zero(self, m, *reference) -> bool:
        scale = max((max_abs(x) for x in reference), default=max_abs(m))
        return max_abs(m) <= self.threshold(scale)


def max_abs(m) -> float:
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m)))


def _require_finite(m, what: str):
    if not np.all(np.isfinite(m)):
        raise DomainError(f"{what} contains non-finite entries")


def matrix_power(m, k: int) -> np.ndarray:
    """k-th power of a square matrix by repeated multiplication, M^0 = I."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"matrix_power needs a square matrix, got shape {m.shape}")
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"exponent must be a non-negative integer, got {k!r}")
    _require_finite(m, "matrix_power input")
    out = np.eye(m.shape[0])
    for _ in range(k):
        out = out @ m
    _require_finite(out, "matrix_power result")
    return out


def partial_trace_block(big, s: int, d: int) -> np.ndarray:
    """Sum of the s diagonal d x d blocks of an (s*d) x (s*d) matrix."""
    big = np.asarray(big, dtype=np.float64)
    if s <= 0 or d <= 0 or big.shape != (s * d, s * d):
        raise DimensionError(
            f"partial_trace_block needs shape ({s}*{d}, {s}*{d}), got {big.shape}"
        )
    _require_finite(big, "partial_trace_block input")
    out = np.zeros((d, d))
    for i in range(s):
        out += big[i * d:(i + 1) * d, i * d:(i + 1) * d]
    return out


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def rationalize(x: float, tol: Tolerance, max_denominator: int = 10 ** 6) -> Fraction:
    """Round a float to the nearest small-denominator rational, or fail loudly."""
    r = Fraction(x).limit_denominator(max_denominator)
    if abs(x - float(r)) > tol.threshold(abs(x)):
        raise ConsistencyError(f"{x!r} is not within tolerance of a small rational")
    return r


def freeze(m: np.ndarray) -> np.ndarray:
    """Mark an array immutable so built representations stay shareable."""
    m.setflags(write=False)
    return m
