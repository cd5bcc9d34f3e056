"""Named verification suites over built representations, producing
machine-readable reports with per-check residuals."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from .kernel import DomainError, Tolerance, commutator, max_abs
from .gtbasis import branch, format_weight
from .glrep import Representation, nonelementary_coefficient
from .charident import (
    KIND_A,
    KIND_ABAR,
    build_char_matrix,
    char_roots,
    build_projector,
    cbar_diagonal,
    elementary_square_from_invariants,
    invariant_C_eigenvalue,
    norm_invariant_diagonals,
    restricted_projector,
    shift_components,
    verify_identity,
)
from .superglmn import (
    SuperWeight,
    super_vector_weight,
    verify_super_identity,
    vector_rep_relations_hold,
)

SUITE_NAMES = ("relations", "identity", "projectors", "invariants",
               "melcross", "super")


@dataclass(frozen=True)
class CheckRecord:
    description: str
    passed: bool
    residual: float | None = None
    threshold: float | None = None
    exact: bool = False

    def to_dict(self) -> dict:
        return {
            "description": self.description,
            "kind": "exact" if self.exact else "residual",
            "residual": self.residual,
            "threshold": self.threshold,
            "passed": self.passed,
        }


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckRecord] = field(default_factory=list)
    duration_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add_residual(self, description: str, residual: float, threshold: float):
        residual, threshold = float(residual), float(threshold)
        self.checks.append(CheckRecord(
            description, residual <= threshold, residual, threshold))

    def add_exact(self, description: str, passed: bool):
        self.checks.append(CheckRecord(description, bool(passed), exact=True))

    def to_dict(self) -> dict:
        total = len(self.checks)
        passed = sum(1 for c in self.checks if c.passed)
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "summary": {
                "total": total,
                "passed": passed,
                "failed": total - passed,
                "overall": self.passed,
            },
            "duration_ms": self.duration_ms,
        }


def _block(big: np.ndarray, i: int, j: int, d: int) -> np.ndarray:
    return big[(i - 1) * d:i * d, (j - 1) * d:j * d]


def suite_relations(rep: Representation, tol: Tolerance) -> VerificationReport:
    """[a_ij, a_kl] = d_kj a_il - d_il a_kj over every generator pair."""
    report = VerificationReport("relations")
    worst = 0.0
    scale = 0.0
    pairs = 0
    idx = range(1, rep.N + 1)
    for i, j, k, l in itertools.product(idx, idx, idx, idx):
        lhs = commutator(rep.gen(i, j), rep.gen(k, l))
        rhs = np.zeros_like(lhs)
        if k == j:
            rhs = rhs + rep.gen(i, l)
        if i == l:
            rhs = rhs - rep.gen(k, j)
        worst = max(worst, max_abs(lhs - rhs))
        scale = max(scale, max_abs(lhs), max_abs(rhs))
        pairs += 1
    report.add_residual(
        f"defining relations on {format_weight(rep.weight)}, worst of {pairs} generator pairs",
        worst, tol.threshold(scale))
    return report


def suite_identity(rep: Representation, tol: Tolerance) -> VerificationReport:
    report = VerificationReport("identity")
    for kind in (KIND_A, KIND_ABAR):
        cm = build_char_matrix(rep, kind)
        spectrum = char_roots(rep.weight, kind)
        for check in verify_identity(cm, spectrum, tol):
            report.checks.append(CheckRecord(
                f"{check.description} on {format_weight(rep.weight)}",
                check.passed, check.residual, check.threshold))
    return report


def suite_projectors(rep: Representation, tol: Tolerance) -> VerificationReport:
    report = VerificationReport("projectors")
    d = rep.dim * rep.N
    for kind in (KIND_A, KIND_ABAR):
        cm = build_char_matrix(rep, kind)
        spectrum = char_roots(rep.weight, kind)
        projectors = [build_projector(cm, spectrum, r)
                      for r in range(1, rep.N + 1)]
        scale = max(max_abs(p.matrix) for p in projectors)
        idem = max(max_abs(p.matrix @ p.matrix - p.matrix) for p in projectors)
        report.add_residual(
            f"idempotency, kind {kind} on {format_weight(rep.weight)}",
            idem, tol.threshold(scale * scale))
        ortho = 0.0
        for a, b in itertools.combinations(projectors, 2):
            ortho = max(ortho, max_abs(a.matrix @ b.matrix))
        report.add_residual(
            f"mutual orthogonality, kind {kind} on {format_weight(rep.weight)}",
            ortho, tol.threshold(scale * scale))
        total = sum(p.matrix for p in projectors)
        report.add_residual(
            f"completeness (sum equals identity), kind {kind} on {format_weight(rep.weight)}",
            max_abs(total - np.eye(d)), tol.threshold(scale))
        ranks_ok = all(p.rank == p.root.multiplicity for p in projectors)
        report.add_exact(
            f"projector ranks equal constituent dimensions, kind {kind} "
            f"on {format_weight(rep.weight)}", ranks_ok)
    return report


def suite_invariants(rep: Representation, tol: Tolerance) -> VerificationReport:
    """Projector-corner and squared-norm invariants of the top branching step."""
    if rep.N < 2:
        raise DomainError("invariant suite needs a gl(n+1) module with n >= 1")
    report = VerificationReport("invariants")
    n = rep.N - 1
    d = rep.dim
    lam = rep.weight
    branches = branch(lam)

    c_sums_ok = all(
        sum(invariant_C_eigenvalue(lam, mu, k, "C")
            for k in range(1, rep.N + 1)) == 1
        for mu in branches)
    report.add_exact(
        f"sum_k C_k = 1 on each of {len(branches)} branches of {format_weight(lam)}",
        c_sums_ok)

    cm_bar = build_char_matrix(rep, KIND_ABAR)
    spectrum_bar = char_roots(lam, KIND_ABAR)
    corner = 0.0
    corner_scale = 1.0
    for k in range(1, rep.N + 1):
        proj = build_projector(cm_bar, spectrum_bar, k)
        block = _block(proj.matrix, rep.N, rep.N, d)
        expected = np.diag(cbar_diagonal(rep, k))
        corner = max(corner, max_abs(block - expected))
        corner_scale = max(corner_scale, max_abs(block), max_abs(expected))
    report.add_residual(
        f"Cbar corner blocks match the closed form on {format_weight(lam)}",
        corner, tol.threshold(corner_scale))

    psi = [rep.gen(j, rep.N) for j in range(1, n + 1)]
    comps_by_r = []
    for r in range(1, n + 1):
        sc = shift_components(rep, r, tol)
        comps_by_r.append(sc.components)
        report.add_residual(
            f"shift component contractions agree, r={r} on {format_weight(lam)}",
            sc.contraction_residual, tol.threshold(max(
                max_abs(c) for c in sc.components) if sc.components else 0.0))
        report.add_residual(
            f"shift component supports only the +D_{r} weight shift on {format_weight(lam)}",
            sc.support_residual, tol.threshold(1.0))
    completeness = 0.0
    for j in range(n):
        total = sum(comps[j] for comps in comps_by_r)
        completeness = max(completeness, max_abs(total - psi[j]))
    report.add_residual(
        f"shift components sum back to the raising column on {format_weight(lam)}",
        completeness, tol.threshold(max(max_abs(m) for m in psi) if psi else 0.0))

    norm_resid = 0.0
    norm_scale = 1.0
    for r in range(1, n + 1):
        comps = comps_by_r[r - 1]
        p_mat = restricted_projector(rep, n, r, KIND_A)
        pbar_mat = restricted_projector(rep, n, r, KIND_ABAR)
        mbar_num, mbar_den = norm_invariant_diagonals(rep, r, bar=True)
        m_num, m_den = norm_invariant_diagonals(rep, r, bar=False)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                lhs = mbar_den[:, None] * (comps[i - 1] @ comps[j - 1].T)
                rhs = mbar_num[:, None] * _block(p_mat, i, j, d)
                norm_resid = max(norm_resid, max_abs(lhs - rhs))
                norm_scale = max(norm_scale, max_abs(lhs), max_abs(rhs))
                lhs = m_den[:, None] * (comps[i - 1].T @ comps[j - 1])
                rhs = m_num[:, None] * _block(pbar_mat, i, j, d)
                norm_resid = max(norm_resid, max_abs(lhs - rhs))
                norm_scale = max(norm_scale, max_abs(lhs), max_abs(rhs))
    report.add_residual(
        f"squared-norm identities psi psi+ = Mbar P and psi+ psi = M Pbar "
        f"(cleared denominators) on {format_weight(lam)}",
        norm_resid, tol.threshold(norm_scale))

    exact_ok = True
    surds = rep.raising_surds.get(n, {})
    for c, pattern in enumerate(rep.patterns):
        for r in range(1, n + 1):
            expected = elementary_square_from_invariants(pattern, r)
            target = pattern.shifted(n, r)
            if target is None:
                actual = 0
            else:
                surd = surds.get((rep.ordinal[target], c))
                actual = surd.squared if surd is not None else 0
            if expected != actual:
                exact_ok = False
    report.add_exact(
        f"squared ladder coefficients equal M*Cbar products exactly, "
        f"all {rep.dim} states of {lam}", exact_ok)
    return report


def suite_melcross(rep: Representation, tol: Tolerance) -> VerificationReport:
    """Closed product-form magnitudes against the commutator-built entries
    for every generator a_{l,j} with j - l >= 2."""
    report = VerificationReport("melcross")
    if rep.N < 3:
        raise DomainError("cross-check needs gl(N) with N >= 3")
    for l in range(1, rep.N - 1):
        for j in range(l + 2, rep.N + 1):
            actual = np.abs(rep.gen(l, j))
            expected = np.zeros_like(actual)
            top = j - 1
            ranges = [range(1, level + 1) for level in range(top, l - 1, -1)]
            for c, pattern in enumerate(rep.patterns):
                for shifts in itertools.product(*ranges):
                    moves = [(level, idx, 1) for level, idx in
                             zip(range(top, l - 1, -1), shifts)]
                    target = pattern.shifted_many(moves)
                    if target is None:
                        continue
                    coeff = nonelementary_coefficient(pattern, l, top, shifts)
                    expected[rep.ordinal[target], c] = float(coeff)
            resid = max_abs(actual - expected)
            report.add_residual(
                f"|a_{l},{j}| entries match the product form on {format_weight(rep.weight)}",
                resid, tol.threshold(max(max_abs(actual), max_abs(expected))))
    return report


def suite_super(m: int, n: int, tol: Tolerance,
                lam: SuperWeight | None = None) -> VerificationReport:
    """Graded defining relations plus both super characteristic identities
    on the vector representation."""
    report = VerificationReport("super")
    if lam is not None and lam != super_vector_weight(m, n):
        raise DomainError(
            f"super suite runs on the vector weight {super_vector_weight(m, n)}")
    report.add_exact(
        f"graded defining relations hold exactly on gl({m}|{n})",
        vector_rep_relations_hold(m, n))
    for kind in (KIND_A, KIND_ABAR):
        check = verify_super_identity(m, n, kind, tol)
        report.checks.append(CheckRecord(
            check.description, check.passed, check.residual, check.threshold))
    return report


def run_suite(name: str, *, rep: Representation | None = None,
              super_mn: tuple[int, int] | None = None,
              super_weight: SuperWeight | None = None,
              tol: Tolerance | None = None) -> VerificationReport:
    """Dispatch one named suite and stamp its wall-clock duration."""
    tol = tol or Tolerance()
    start = time.perf_counter()
    if name == "super":
        if super_mn is None:
            raise DomainError("super suite needs a gl(m|n) algebra")
        report = suite_super(*super_mn, tol, lam=super_weight)
    else:
        if rep is None:
            raise DomainError(f"suite {name!r} needs a gl(n) representation")
        if name == "relations":
            report = suite_relations(rep, tol)
        elif name == "identity":
            report = suite_identity(rep, tol)
        elif name == "projectors":
            report = suite_projectors(rep, tol)
        elif name == "invariants":
            report = suite_invariants(rep, tol)
        elif name == "melcross":
            report = suite_melcross(rep, tol)
        else:
            raise DomainError(f"unknown suite {name!r}")
    report.duration_ms = (time.perf_counter() - start) * 1000.0
    return report
