"""Dense Hermitian eigensolver, unitary propagation and 1-D root bracketing.

All matrices here are small (dim <= 16) complex numpy arrays with entries in
MHz.  The eigendecomposition is a cyclic complex Jacobi iteration: at these
dimensions it is robust, dependency-free and bit-deterministic, which keeps
sweep outputs reproducible.  Kets are plain complex vectors normalized to 1.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import ConvergenceError, NonHermitianError

MAX_DIM = 16
MAX_SWEEPS = 100
OFFDIAG_FACTOR = 1e-14     # convergence threshold relative to max|H|
HERMITICITY_TOL = 1e-12

ROOT_XTOL = 1e-10          # bisection interval width
ROOT_MIN_SEPARATION = 1e-8


class EigenSystem(NamedTuple):
    """Eigenvalues (real, ascending, MHz) and orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray


def require_hermitian(h) -> np.ndarray:
    """Validate and return h as a square complex array, dim <= 16."""
    a = np.asarray(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n < 1 or n > MAX_DIM:
        raise ValueError(f"matrix dimension must be in [1, {MAX_DIM}], got {n}")
    scale = float(np.max(np.abs(a))) if a.size else 0.0
    mismatch = float(np.max(np.abs(a - a.conj().T)))
    if mismatch > HERMITICITY_TOL * max(scale, 1e-300):
        raise NonHermitianError(
            f"matrix is not Hermitian: max |H - H^dag| = {mismatch:.3e} "
            f"exceeds {HERMITICITY_TOL:.0e} * max|H| = {HERMITICITY_TOL * scale:.3e}"
        )
    return a


def hermitian_eig(h) -> EigenSystem:
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Eigenvalues come back ascending; eigenvector columns are orthonormal with
    a fixed phase convention (largest-magnitude component real positive), so
    repeated calls are bitwise identical.
    """
    a = require_hermitian(h).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return EigenSystem(np.zeros(n), v)
    thresh = OFFDIAG_FACTOR * scale

    for _ in range(MAX_SWEEPS):
        off = max(
            (float(np.max(np.abs(a[i, i + 1:]))) for i in range(n - 1)),
            default=0.0,
        )
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 0.01 * thresh:
                    continue
                phase = apq / abs(apq)
                # rotation angle from the 2x2 subproblem, smaller root for stability
                tau = (a[q, q].real - a[p, p].real) / (2.0 * abs(apq))
                if tau >= 0.0:
                    t = -1.0 / (tau + math.hypot(1.0, tau))
                else:
                    t = 1.0 / (-tau + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + s * np.conj(phase) * col_q
                a[:, q] = -s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + s * phase * row_q
                a[q, :] = -s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp + s * np.conj(phase) * vq
                v[:, q] = -s * phase * vp + c * vq
    else:
        raise ConvergenceError(
            f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps "
            f"(off-diagonal threshold {thresh:.3e})"
        )

    values = np.real(np.diag(a)).copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = v[:, order]
    for j in range(n):
        k = int(np.argmax(np.abs(vectors[:, j])))
        pivot = vectors[k, j]
        mag = abs(pivot)
        if mag > 0.0:
            vectors[:, j] *= np.conj(pivot) / mag
        vectors[k, j] = vectors[k, j].real  # kill rounding residue in the pivot
    return EigenSystem(values, vectors)


def evolve(h, psi, t: float) -> np.ndarray:
    """Propagate psi under a constant Hamiltonian for time t (units 1/MHz).

    psi(t) = V exp(-i 2 pi lambda t) V^dag psi(0); norm-preserving to
    rounding.  Time-dependent drives are handled by callers slicing time.
    """
    es = hermitian_eig(h)
    state = np.asarray(psi, dtype=complex)
    if state.shape != (es.values.shape[0],):
        raise ValueError(
            f"state dimension {state.shape} does not match matrix dimension "
            f"{es.values.shape[0]}"
        )
    phases = np.exp(-2j * math.pi * es.values * t)
    return es.vectors @ (phases * (es.vectors.conj().T @ state))


def bracket_roots(
    f: Callable[[float], float], lo: float, hi: float, n_scan: int
) -> list[float]:
    """Locate roots of f on [lo, hi] by grid scan plus bisection.

    Every sign change between adjacent scan points (and every exact zero on
    the grid) is refined to an interval width of ROOT_XTOL.  Tangential roots
    that do not change sign are not detected.  Returns an ascending list with
    near-duplicates (closer than ROOT_MIN_SEPARATION) removed.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if n_scan < 2:
        raise ValueError(f"n_scan must be >= 2, got {n_scan}")
    xs = np.linspace(lo, hi, n_scan)
    fs = [float(f(float(x))) for x in xs]
    if not all(math.isfinite(y) for y in fs):
        raise ValueError("f is not finite on the scan grid")

    roots: list[float] = []
    for x, y in zip(xs, fs):
        if y == 0.0:
            roots.append(float(x))
    for i in range(n_scan - 1):
        fa, fb = fs[i], fs[i + 1]
        if fa == 0.0 or fb == 0.0 or (fa < 0.0) == (fb < 0.0):
            continue
        a, b = float(xs[i]), float(xs[i + 1])
        while b - a > ROOT_XTOL:
            mid = 0.5 * (a + b)
            fm = float(f(mid))
            if fm == 0.0:
                a = b = mid
                break
            if (fa < 0.0) != (fm < 0.0):
                b = mid
            else:
                a, fa = mid, fm
        roots.append(0.5 * (a + b))

    roots.sort()
    deduped: list[float] = []
    for r in roots:
        if not deduped or r - deduped[-1] >= ROOT_MIN_SEPARATION:
            deduped.append(r)
    return deduped
