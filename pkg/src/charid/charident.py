"""Characteristic matrices of gl(n) modules: polynomial identities, spectral
projectors, shift components of vector operators, and the subalgebra
invariants attached to them.

Two constructions coexist.  On an irreducible module the characteristic
roots are scalars and projectors are Lagrange products with scalar nodes.
Restricted to the gl(n) subalgebra of a gl(n+1) module the roots become
diagonal operators (functions of the row-n pattern labels), and the same
Lagrange products with operator nodes project onto branch components.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .kernel import (
    ConsistencyError,
    DegenerateRootError,
    DomainError,
    Tolerance,
    max_abs,
)
from .glrep import (
    Representation,
    _cancelled_ratio,
    casimir_eigenvalue_formula,
    gl_block_matrix,
)
from .gtbasis import (
    Weight,
    check_highest_weight,
    dimension,
    is_dominant,
    pattern_weight,
    rows_interlace,
    weight,
)

KIND_A = "A"
KIND_ABAR = "Abar"
KIND_GENERAL = "general"


@dataclass(frozen=True)
class Root:
    """One characteristic root: exact value, the constituent highest weight
    it belongs to (None when merged or unresolved) and the dimension of its
    eigenspace (0 marks a root absent from the module)."""

    value: Fraction
    constituent: Weight | None
    multiplicity: int


@dataclass(frozen=True)
class CharMatrix:
    kind: str
    weight: Weight
    block_count: int
    block_size: int
    big: np.ndarray
    mu: Weight | None = None


@dataclass(frozen=True)
class Projector:
    r: int
    root: Root
    matrix: np.ndarray

    @property
    def rank(self) -> int:
        return int(round(float(np.trace(self.matrix))))


@dataclass(frozen=True)
class ResidualReport:
    description: str
    residual: float
    threshold: float
    passed: bool


def vector_weight(n: int) -> Weight:
    return weight((1,) + (0,) * (n - 1))


def dual_vector_weight(n: int) -> Weight:
    return weight((0,) * (n - 1) + (-1,))


def alpha_roots(lam) -> list[Fraction]:
    """Roots of the plain characteristic matrix: alpha_j = lam_j + n - j."""
    lam = check_highest_weight(lam)
    n = len(lam)
    return [lam[j - 1] + n - j for j in range(1, n + 1)]


def alpha_bar_roots(lam) -> list[Fraction]:
    """Roots of the negative-transpose matrix: abar_j = j - 1 - lam_j."""
    lam = check_highest_weight(lam)
    return [Fraction(j - 1) - lam[j - 1] for j in range(1, len(lam) + 1)]


def _shifted(lam: Weight, k: int, step: int) -> Weight:
    return lam[:k - 1] + (lam[k - 1] + step,) + lam[k:]


class DualVectorRep:
    """Dual of the defining representation, a(i,j) -> -e_ji.

    Using this realisation (rather than a pattern-basis build of the weight
    (0,...,0,-1)) makes the coproduct construction reproduce the plain
    characteristic matrix entry by entry, not merely up to basis change.
    """

    def __init__(self, n: int):
        if n < 1:
            raise DomainError("dual vector representation needs n >= 1")
        self.N = n
        self.dim = n
        self.weight = dual_vector_weight(n)

    def gen(self, i: int, j: int) -> np.ndarray:
        m = np.zeros((self.N, self.N))
        m[j - 1, i - 1] = -1.0
        return m


def build_char_matrix(rep: Representation, kind: str, aux=None) -> CharMatrix:
    """Assemble the characteristic matrix of a built representation.

    kind "A": block (i,j) = a_{ij}.  kind "Abar": block (i,j) = -a_{ji}.
    kind "general": aux supplies an auxiliary representation (Representation
    or DualVectorRep) and the matrix is -sum_ij aux(a_ij) (x) rep(a_ji),
    the operator the quadratic Casimir coproduct produces.
    """
    d = rep.dim
    if kind in (KIND_A, KIND_ABAR):
        big = gl_block_matrix(rep, kind)
        return CharMatrix(kind, rep.weight, rep.N, d, big)
    if kind == KIND_GENERAL:
        if aux is None:
            raise DomainError("general kind needs an auxiliary representation")
        if aux.N != rep.N:
            raise DomainError("auxiliary representation must share the algebra size")
        s = aux.dim
        big = np.zeros((s * d, s * d))
        for i in range(1, rep.N + 1):
            for j in range(1, rep.N + 1):
                big -= np.kron(aux.gen(i, j), rep.gen(j, i))
        return CharMatrix(kind, rep.weight, s, d, big, mu=aux.weight)
    raise DomainError(f"unknown characteristic matrix kind {kind!r}")


def general_root_candidates(lam, mu) -> dict[Fraction, tuple[Weight, ...]]:
    """Candidate roots of the coproduct matrix, keyed by exact value.

    Candidates are lam + w over the weights w of V(mu), kept when dominant;
    the value is -(chi_nu - chi_mu - chi_lam)/2 in quadratic Casimir
    eigenvalues.  Distinct constituents may share a value, hence the tuple.
    """
    lam = check_highest_weight(lam)
    mu = check_highest_weight(mu)
    if len(lam) != len(mu):
        raise DomainError("lam and mu must belong to the same gl(n)")
    chi_lam = casimir_eigenvalue_formula(lam, 2)
    chi_mu = casimir_eigenvalue_formula(mu, 2)
    seen: dict[Weight, None] = {}
    from .gtbasis import enumerate_patterns  # local import keeps module load light

    for p in enumerate_patterns(mu):
        seen.setdefault(pattern_weight(p), None)
    out: dict[Fraction, list[Weight]] = {}
    for w in seen:
        nu = tuple(a + b for a, b in zip(lam, w))
        if not is_dominant(nu):
            continue
        value = -(casimir_eigenvalue_formula(nu, 2) - chi_mu - chi_lam) / 2
        out.setdefault(value, []).append(nu)
    return {v: tuple(nus) for v, nus in out.items()}


def char_roots(lam, kind: str, mu=None, cm: CharMatrix | None = None,
               tol: Tolerance | None = None) -> tuple[Root, ...]:
    """Exact characteristic roots with constituent labels and multiplicities.

    For kinds "A"/"Abar" the multiplicity is the Weyl dimension of the
    shifted constituent, or 0 when the shift leaves the dominant cone (the
    root is then absent from the module's minimal polynomial).  For the
    general kind, candidates are pruned against the numerically observed
    spectrum of the supplied (or freshly built) matrix; equal candidate
    values merge into one root.
    """
    lam = check_highest_weight(lam)
    n = len(lam)
    if kind == KIND_A:
        out = []
        for j, value in enumerate(alpha_roots(lam), start=1):
            nu = _shifted(lam, j, -1)
            mult = dimension(nu) if is_dominant(nu) else 0
            out.append(Root(value, nu, mult))
        return tuple(out)
    if kind == KIND_ABAR:
        out = []
        for j, value in enumerate(alpha_bar_roots(lam), start=1):
            nu = _shifted(lam, j, +1)
            mult = dimension(nu) if is_dominant(nu) else 0
            out.append(Root(value, nu, mult))
        return tuple(out)
    if kind != KIND_GENERAL:
        raise DomainError(f"unknown characteristic matrix kind {kind!r}")
    if mu is None:
        raise DomainError("general kind needs the auxiliary highest weight mu")
    tol = tol or Tolerance()
    candidates = general_root_candidates(lam, mu)
    if cm is None:
        cm = build_char_matrix(Representation(lam), KIND_GENERAL,
                               aux=Representation(mu))
    eigenvalues = np.linalg.eigvalsh(cm.big)
    atol = tol.threshold(max_abs(eigenvalues))
    out = []
    for value in sorted(candidates):
        count = int(np.sum(np.abs(eigenvalues - float(value)) <= atol))
        if count == 0:
            continue
        nus = candidates[value]
        out.append(Root(value, nus[0] if len(nus) == 1 else None, count))
    matched = sum(root.multiplicity for root in out)
    if matched != eigenvalues.size:
        unmatched = [
            float(e) for e in eigenvalues
            if all(abs(e - float(v)) > atol for v in candidates)
        ]
        raise ConsistencyError(
            f"observed spectrum is not contained in the candidate root set; "
            f"unmatched eigenvalues {unmatched[:5]}"
        )
    return tuple(out)


def verify_identity(cm: CharMatrix, spectrum, tol: Tolerance | None = None
                    ) -> list[ResidualReport]:
    """Residuals of the polynomial identity prod(cm - value) over the roots.

    Equal root values are merged into a single factor; factors are applied
    in ascending root order so reports are bit-stable.  For one- and
    two-label weights of kind "A" the low-rank closed forms in the Casimir
    eigenvalues are checked as well.
    """
    tol = tol or Tolerance()
    values = sorted({root.value for root in spectrum})
    d = cm.big.shape[0]
    product = np.eye(d)
    scale = 0.0
    for value in values:
        factor = cm.big - float(value) * np.eye(d)
        scale = max(scale, max_abs(factor))
        product = product @ factor
    residual = max_abs(product)
    threshold = tol.threshold(scale)
    reports = [ResidualReport(
        f"characteristic identity, kind {cm.kind}, {len(values)} distinct roots",
        residual, threshold, residual <= threshold)]
    if cm.kind == KIND_A and len(cm.weight) == 1:
        sigma1 = casimir_eigenvalue_formula(cm.weight, 1)
        res = max_abs(cm.big - float(sigma1) * np.eye(d))
        thr = tol.threshold(max_abs(cm.big))
        reports.append(ResidualReport(
            "rank-1 closed form: A - sigma1", res, thr, res <= thr))
    if cm.kind == KIND_A and len(cm.weight) == 2:
        sigma1 = casimir_eigenvalue_formula(cm.weight, 1)
        sigma2 = casimir_eigenvalue_formula(cm.weight, 2)
        const = (sigma1 * sigma1 + sigma1 - sigma2) / 2
        m = cm.big
        res = max_abs(m @ m - float(sigma1 + 1) * m + float(const) * np.eye(d))
        thr = tol.threshold(max(max_abs(m @ m), max_abs(m)))
        reports.append(ResidualReport(
            "rank-2 closed form: A^2 - (sigma1+1) A + (sigma1^2+sigma1-sigma2)/2",
            res, thr, res <= thr))
    return reports


def build_projector(cm: CharMatrix, spectrum, r: int) -> Projector:
    """Lagrange projector onto the eigenspace of the r-th root (1-based).

    Absent roots (multiplicity 0) yield the zero projector and are excluded
    from the interpolation product; the remaining root values must be
    pairwise distinct.
    """
    spectrum = tuple(spectrum)
    if not 1 <= r <= len(spectrum):
        raise DomainError(f"root index {r} outside 1..{len(spectrum)}")
    present = [root for root in spectrum if root.multiplicity > 0]
    values = [root.value for root in present]
    if len(set(values)) != len(values):
        raise DegenerateRootError(
            f"repeated root values in spectrum: {sorted(map(str, values))}")
    target = spectrum[r - 1]
    d = cm.big.shape[0]
    if target.multiplicity == 0:
        return Projector(r, target, np.zeros((d, d)))
    matrix = np.eye(d)
    for root in present:
        if root.value == target.value:
            continue
        matrix = matrix @ (cm.big - float(root.value) * np.eye(d))
        matrix /= float(target.value - root.value)
    return Projector(r, target, matrix)


# ---------------------------------------------------------------------------
# Operator-valued roots on the gl(n) restriction of a gl(n+1) module.

def row_label_array(rep: Representation, level: int, k: int) -> np.ndarray:
    """k-th label of each pattern's row `level`, as a float vector."""
    return np.array([float(p.row(level)[k - 1]) for p in rep.patterns])


def operator_root_array(rep: Representation, level: int, k: int,
                        kind: str) -> np.ndarray:
    labels = row_label_array(rep, level, k)
    if kind == KIND_A:
        return labels + (level - k)
    if kind == KIND_ABAR:
        return (k - 1) - labels
    raise DomainError(f"unknown kind {kind!r}")


def restricted_projector(rep: Representation, level: int, r: int,
                         kind: str) -> np.ndarray:
    """Projector component of the subalgebra characteristic matrix.

    The interpolation nodes are diagonal operators built from the row-level
    pattern labels; they commute with the subalgebra blocks, and within each
    branch component the node values are pairwise distinct, so the product
    is well defined on the whole (reducible) restriction.
    """
    if not 1 <= r <= level:
        raise DomainError(f"component index {r} outside 1..{level}")
    big = gl_block_matrix(rep, kind, level=level)
    d = rep.dim
    root_r = operator_root_array(rep, level, r, kind)
    out = np.eye(level * d)
    for l in range(1, level + 1):
        if l == r:
            continue
        root_l = operator_root_array(rep, level, l, kind)
        out = out @ (big - np.diag(np.tile(root_l, level)))
        out = out / np.tile(root_r - root_l, level)[None, :]
    return out


def _block(big: np.ndarray, i: int, j: int, d: int) -> np.ndarray:
    return big[(i - 1) * d:i * d, (j - 1) * d:j * d]


@dataclass(frozen=True)
class ShiftComponents:
    """The r-th shift components psi[n;r]_j of the raising column of a
    gl(n+1) module, with their internal consistency residuals."""

    r: int
    components: tuple[np.ndarray, ...]
    cross_components: tuple[np.ndarray, ...]
    contraction_residual: float
    support_residual: float


def shift_components(rep: Representation, r: int,
                     tol: Tolerance | None = None) -> ShiftComponents:
    """Project the vector operator psi_j = a_{j,n+1} onto its r-th component.

    Both contraction routes are computed, psi_i Pbar[n;r]_{ij} and
    P[n;r]_{ji} psi_i; their disagreement and the off-shift support (entries
    connecting row-n weights other than mu -> mu + D_r) are reported as
    residuals.
    """
    n = rep.N - 1
    if n < 1:
        raise DomainError("shift components need a gl(n+1) module with n >= 1")
    if not 1 <= r <= n:
        raise DomainError(f"component index {r} outside 1..{n}")
    d = rep.dim
    psi = [rep.gen(j, rep.N) for j in range(1, n + 1)]
    pbar = restricted_projector(rep, n, r, KIND_ABAR)
    p = restricted_projector(rep, n, r, KIND_A)
    components = []
    cross = []
    for j in range(1, n + 1):
        comp = np.zeros((d, d))
        alt = np.zeros((d, d))
        for i in range(1, n + 1):
            comp += psi[i - 1] @ _block(pbar, i, j, d)
            alt += _block(p, j, i, d) @ psi[i - 1]
        components.append(comp)
        cross.append(alt)
    contraction = max(
        max_abs(c - a) for c, a in zip(components, cross))
    rows_n = [tuple(pat.row(n)) for pat in rep.patterns]
    support = 0.0
    for comp in components:
        for row in range(d):
            for col in range(d):
                entry = float(abs(comp[row, col]))
                if entry == 0.0:
                    continue
                expected = list(rows_n[col])
                expected[r - 1] += 1
                if rows_n[row] != tuple(expected):
                    support = max(support, entry)
    return ShiftComponents(r, tuple(components), tuple(cross),
                           contraction, support)


# ---------------------------------------------------------------------------
# Invariants of the gl(n) < gl(n+1) pair.

def _top_roots(lam_top: Weight) -> list[Fraction]:
    n1 = len(lam_top)
    return [lam_top[p - 1] + n1 - p for p in range(1, n1 + 1)]


def _sub_roots(lam_sub: Weight) -> list[Fraction]:
    n = len(lam_sub)
    return [lam_sub[l - 1] + n - l for l in range(1, n + 1)]


def _check_branch_pair(lam_top, lam_sub) -> tuple[Weight, Weight]:
    lam_top = check_highest_weight(lam_top)
    lam_sub = check_highest_weight(lam_sub)
    if len(lam_sub) != len(lam_top) - 1:
        raise DomainError("branch weight must have one label fewer")
    if not rows_interlace(lam_top, lam_sub):
        raise DomainError(f"{lam_sub} is not a branch of {lam_top}")
    return lam_top, lam_sub


def invariant_C_eigenvalue(lam_top, lam_sub, k: int, kind: str = "C") -> Fraction:
    """Closed-form eigenvalue of the projector corner invariant C_{k,n+1}
    (or Cbar_{k,n+1}) on the branch component lam_sub."""
    lam_top, lam_sub = _check_branch_pair(lam_top, lam_sub)
    tops = _top_roots(lam_top)
    subs = _sub_roots(lam_sub)
    if not 1 <= k <= len(tops):
        raise DomainError(f"index {k} outside 1..{len(tops)}")
    if kind == "C":
        shift = 1
    elif kind == "Cbar":
        shift = 0
    else:
        raise DomainError(f"unknown invariant kind {kind!r}")
    value = Fraction(1)
    for p, alpha in enumerate(tops, start=1):
        if p == k:
            continue
        gap = tops[k - 1] - alpha
        if gap == 0:
            raise DegenerateRootError(
                f"coincident characteristic roots {k} and {p} of {lam_top}")
        value /= gap
    for alpha in subs:
        value *= tops[k - 1] - alpha - shift
    return value


def invariant_M_eigenvalue(lam_top, lam_sub, r: int, kind: str = "M") -> Fraction:
    """Closed-form eigenvalue of the squared-norm invariant M_{r,n}
    (or Mbar_{r,n}) on the branch component lam_sub."""
    lam_top, lam_sub = _check_branch_pair(lam_top, lam_sub)
    tops = _top_roots(lam_top)
    subs = _sub_roots(lam_sub)
    n = len(subs)
    if not 1 <= r <= n:
        raise DomainError(f"index {r} outside 1..{n}")
    if kind == "M":
        num_shift, den_shift = 1, 1
    elif kind == "Mbar":
        num_shift, den_shift = 0, -1
    else:
        raise DomainError(f"unknown invariant kind {kind!r}")
    value = Fraction(-1 if n % 2 else 1)
    for alpha in tops:
        value *= alpha - subs[r - 1] - num_shift
    for l, alpha in enumerate(subs, start=1):
        if l == r:
            continue
        gap = subs[r - 1] - alpha + den_shift
        if gap == 0:
            raise DegenerateRootError(
                f"degenerate denominator for M invariant r={r} on {lam_sub}")
        value /= gap
    return value


def elementary_square_from_invariants(pattern, r: int) -> Fraction:
    """<pattern| M_{r,n} Cbar_{r,n} |pattern> assembled from the invariant
    factor lists, with paired zeros cancelled.

    This is the promised square of the top-level ladder coefficient; it
    takes a different code path from the coefficient itself, so exact
    agreement is a genuine cross-check of the root conventions.
    """
    big_n = pattern.size
    n = big_n - 1
    if n < 1:
        raise DomainError("needs a pattern with at least two rows")
    if not 1 <= r <= n:
        raise DomainError(f"index {r} outside 1..{n}")
    tops = [pattern.row(big_n)[p - 1] + big_n - p for p in range(1, big_n + 1)]
    subs = [pattern.row(n)[l - 1] + n - l for l in range(1, n + 1)]
    lows = ([pattern.row(n - 1)[l - 1] + (n - 1) - l for l in range(1, n)]
            if n > 1 else [])
    a = subs[r - 1]
    num = [alpha - a - 1 for alpha in tops] + [a - alpha for alpha in lows]
    den = []
    for l, alpha in enumerate(subs, start=1):
        if l == r:
            continue
        den.append(a - alpha + 1)
        den.append(a - alpha)
    sign = -1 if n % 2 else 1
    return _cancelled_ratio(sign, num, den,
                            f"M*Cbar product r={r} on {pattern.rows}")


def norm_invariant_diagonals(rep: Representation, r: int, bar: bool
                             ) -> tuple[np.ndarray, np.ndarray]:
    """Numerator and denominator of the M (or Mbar) invariant per basis
    vector, evaluated on each pattern's row-n labels.

    Returned separately so operator identities can be checked with cleared
    denominators on patterns where the denominator vanishes.
    """
    n = rep.N - 1
    tops = _top_roots(rep.weight)
    nums = np.zeros(rep.dim)
    dens = np.zeros(rep.dim)
    sign = -1 if n % 2 else 1
    for idx, pat in enumerate(rep.patterns):
        subs = [pat.row(n)[l - 1] + n - l for l in range(1, n + 1)]
        a = subs[r - 1]
        num = Fraction(sign)
        for alpha in tops:
            num *= alpha - a - (1 if not bar else 0)
        den = Fraction(1)
        for l, alpha in enumerate(subs, start=1):
            if l == r:
                continue
            den *= a - alpha + (1 if not bar else -1)
        nums[idx] = float(num)
        dens[idx] = float(den)
    return nums, dens


def cbar_diagonal(rep: Representation, k: int) -> np.ndarray:
    """Closed-form Cbar_{k,n+1} value per basis vector (row-n labels)."""
    n = rep.N - 1
    tops = _top_roots(rep.weight)
    out = np.zeros(rep.dim)
    for idx, pat in enumerate(rep.patterns):
        subs = [pat.row(n)[l - 1] + n - l for l in range(1, n + 1)]
        value = Fraction(1)
        for p, alpha in enumerate(tops, start=1):
            if p == k:
                continue
            value /= tops[k - 1] - alpha
        for alpha in subs:
            value *= tops[k - 1] - alpha
        out[idx] = float(value)
    return out
