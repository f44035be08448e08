"""Finite-difference ground truth for the PDM and constant-mass operators.

The kinetic term uses the flux-conserving 3-point stencil

    (A psi)_j = -[w_{j+1/2}(psi_{j+1}-psi_j) - w_{j-1/2}(psi_j-psi_{j-1})]/h^2
                + V_j psi_j,     w = c/m at midpoints,

with c the convention's kinetic factor (1/2 for HALF, 1 for UNIT) and
Dirichlet walls at +-L. Sampling w at midpoints enforces continuity of
(1/m) psi' across mass variations by construction. Eigensolution is dense and
non-Hermitian; no symmetry shortcut is valid for complex PT potentials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
import scipy.linalg

from .conventions import SpectrumConvention
from .errors import ConvergenceError, NaNGuard
from .mass_models import GridSpec, SampledFunction
from .reference_potentials import EnergyLevel

__all__ = [
    "DiscreteOperator",
    "EigenResult",
    "SpectrumReport",
    "discretize_pdm",
    "discretize_const",
    "eigen_solve",
    "residual",
    "spectrum_compare",
    "pt_commutation_defect",
]

REALITY_TOL_SCALE = 1e-6


@dataclass(frozen=True)
class DiscreteOperator:
    grid: GridSpec
    matrix: np.ndarray  # N x N complex; boundary rows are zero (Dirichlet)
    convention: SpectrumConvention
    boundary: str = "dirichlet"


def discretize_pdm(mass: Callable, V: Callable, grid: GridSpec,
                   conv: SpectrumConvention = SpectrumConvention.HALF) -> DiscreteOperator:
    """Assemble the PDM operator -c d/dx[(1/m) d/dx] + V on the grid."""
    x = grid.points
    n = grid.num_points_N
    h = grid.spacing
    xm = 0.5 * (x[:-1] + x[1:])
    w = conv.kinetic_factor / np.asarray(mass(xm), dtype=float)
    v = np.asarray(V(x), dtype=complex)
    if not np.all(np.isfinite(v)):
        raise NaNGuard("potential is not finite on the grid")
    a = np.zeros((n, n), dtype=complex)
    i = np.arange(1, n - 1)
    a[i, i] = (w[i - 1] + w[i]) / h ** 2 + v[i]
    a[i, i - 1] = -w[i - 1] / h ** 2
    a[i, i + 1] = -w[i] / h ** 2
    return DiscreteOperator(grid=grid, matrix=a, convention=conv)


def discretize_const(V: Callable, grid: GridSpec,
                     conv: SpectrumConvention = SpectrumConvention.HALF) -> DiscreteOperator:
    """Constant-mass operator -c d^2/dy^2 + V."""
    return discretize_pdm(lambda x: np.ones_like(np.asarray(x, dtype=float)), V, grid, conv)


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: np.ndarray            # sorted by real part
    residuals: np.ndarray
    reality_flags: np.ndarray
    grid: GridSpec
    convention: SpectrumConvention
    eigenvectors: Optional[np.ndarray] = None   # N x k, boundary entries zero

    def real_eigenvalues(self) -> np.ndarray:
        return self.eigenvalues[self.reality_flags]

    def to_json_dict(self) -> dict:
        return {
            "eigenvalues": [[e.real, e.imag] for e in self.eigenvalues],
            "residuals": list(map(float, self.residuals)),
            "reality": list(map(bool, self.reality_flags)),
            "grid": self.grid.to_dict(),
            "convention": self.convention.value,
        }


def eigen_solve(op: DiscreteOperator, k: int, want_vectors: bool = True) -> EigenResult:
    """k eigenvalues of smallest real part, with residual certificates."""
    n = op.grid.num_points_N
    if not 1 <= k <= n - 2:
        raise ValueError(f"k must be in [1, N-2] = [1, {n - 2}], got {k}")
    interior = op.matrix[1:-1, 1:-1]
    try:
        if want_vectors:
            vals, vecs = scipy.linalg.eig(interior)
        else:
            vals = scipy.linalg.eig(interior, right=False)
            vecs = None
    except scipy.linalg.LinAlgError as exc:
        raise ConvergenceError(f"dense eigendecomposition failed: {exc}") from exc
    order = np.argsort(vals.real, kind="stable")[:k]
    vals = vals[order]
    if vecs is not None:
        vecs = vecs[:, order]
        rnorm = np.linalg.norm(vecs, axis=0)
        res = np.linalg.norm(interior @ vecs - vecs * vals[None, :], axis=0) / rnorm
        full = np.zeros((n, k), dtype=complex)
        full[1:-1, :] = vecs
        vecs = full
    else:
        res = np.full(k, np.nan)
    reality = np.abs(vals.imag) < REALITY_TOL_SCALE * np.maximum(1.0, np.abs(vals.real))
    return EigenResult(eigenvalues=vals, residuals=res, reality_flags=reality,
                       grid=op.grid, convention=op.convention, eigenvectors=vecs)


def residual(op: DiscreteOperator, psi: SampledFunction, E: complex) -> float:
    """||A psi - E psi||_2 / ||psi||_2 over interior rows.

    Interior rows keep their boundary-column couplings, so analytic samples
    are judged against the pure stencil truncation, not against the wall.
    """
    if psi.grid != op.grid:
        raise ValueError("psi grid does not match operator grid")
    v = psi.values
    nrm = np.linalg.norm(v[1:-1])
    if not np.isfinite(nrm) or nrm == 0.0:
        raise NaNGuard("residual of a zero or non-finite vector")
    r = op.matrix[1:-1, :] @ v - E * v[1:-1]
    return float(np.linalg.norm(r) / nrm)


def pt_commutation_defect(op: DiscreteOperator) -> float:
    """max |A - C M A M C| with M the index mirror and C conjugation."""
    a = op.matrix
    return float(np.max(np.abs(a - np.conj(a[::-1, ::-1]))))


@dataclass(frozen=True)
class SpectrumReport:
    matched: tuple            # (n, E_analytic, E_numeric, gap)
    unmatched: tuple          # (n, E_analytic)
    spurious: tuple           # numeric eigenvalues below edge with no partner
    tol: float
    passed: bool

    def lines(self) -> list[str]:
        out = []
        for n, ea, en, gap in self.matched:
            out.append(f"n={n}: analytic={ea:.10g} numeric={en:.10g} |gap|={gap:.3e}")
        for n, ea in self.unmatched:
            out.append(f"n={n}: analytic={ea:.10g} UNMATCHED")
        for en in self.spurious:
            out.append(f"spurious numeric level {en:.10g}")
        out.append("PASS" if self.passed else "FAIL")
        return out

    def to_json_dict(self) -> dict:
        return {
            "matched": [
                {"n": n, "E_analytic": [ea.real, ea.imag],
                 "E_numeric": [en.real, en.imag], "gap": gap}
                for n, ea, en, gap in self.matched
            ],
            "unmatched": [{"n": n, "E_analytic": [ea.real, ea.imag]}
                          for n, ea in self.unmatched],
            "spurious": [[e.real, e.imag] for e in self.spurious],
            "tol": self.tol,
            "passed": self.passed,
        }


def collapse_conjugate_pairs(vals: np.ndarray, pair_tol: float = 1e-6) -> np.ndarray:
    """Replace each complex-conjugate eigenvalue pair by two copies of its mean.

    Near a defective (exceptional) point — e.g. the quasi-parity tower
    crossings of the generalized oscillator at integer coupling — the
    discrete spectrum splits into a conjugate pair straddling the true level
    at first order in h. The pair mean (the trace of the 2x2 Jordan block)
    recovers second-order accuracy and is the right observable to compare
    against a closed-form level. Eigenvalues without a conjugate partner are
    left untouched.
    """
    out = np.array(vals, dtype=complex)
    used = np.zeros(len(out), dtype=bool)
    for i, v in enumerate(out):
        scale = max(1.0, abs(v))
        if used[i] or abs(v.imag) <= pair_tol * scale:
            continue
        gaps = np.abs(out - np.conj(v))
        gaps[i] = np.inf
        gaps[used] = np.inf
        j = int(np.argmin(gaps))
        if gaps[j] <= pair_tol * scale:
            mean = 0.5 * (v + out[j])
            out[i] = out[j] = mean
            used[i] = used[j] = True
    return out


def spectrum_compare(analytic: Sequence[EnergyLevel], numeric: EigenResult,
                     tol: float, continuum_edge: Optional[float] = None) -> SpectrumReport:
    """Greedy match of analytic levels to numeric eigenvalues by real part."""
    numeric_vals = list(numeric.eigenvalues)
    used = [False] * len(numeric_vals)
    matched, unmatched = [], []
    for lev in sorted(analytic, key=lambda l: l.energy.real):
        ea = complex(lev.energy)
        best, best_gap = None, np.inf
        for i, en in enumerate(numeric_vals):
            if used[i]:
                continue
            gap = abs(en.real - ea.real)
            if gap < best_gap:
                best, best_gap = i, gap
        if best is not None and abs(numeric_vals[best] - ea) <= tol:
            used[best] = True
            matched.append((lev.n, ea, complex(numeric_vals[best]),
                            float(abs(numeric_vals[best] - ea))))
        else:
            unmatched.append((lev.n, ea))
    spurious = []
    if continuum_edge is not None:
        spurious = [complex(en) for i, en in enumerate(numeric_vals)
                    if not used[i] and en.real < continuum_edge]
    passed = not unmatched and not spurious
    return SpectrumReport(matched=tuple(matched), unmatched=tuple(unmatched),
                          spurious=tuple(spurious), tol=tol, passed=passed)
