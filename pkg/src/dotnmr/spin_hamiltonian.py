"""Nuclear-spin (1/2) x electron-spin Hamiltonian and the switchable resonance.

Within one orbital multiplet the spin sector is governed by (MHz units)

    H = A [ (I+ S- + I- S+) + 2 Iz Sz ] - gamma_n B Iz + gamma_e B Sz,

with the flip-flop ladder part driving nuclear-electron exchange and the
Iz Sz part shifting levels statically.  Total projection F_z = Iz + Sz is
conserved, so the triplet-sector matrix is block diagonal per F_z.

The observable nuclear resonance is the transition in which only the nucleus
flips: from the stretched state |-;1,-1> to the F_z = -1/2 eigenstate
|Psi> = c1 |+;1,-1> + c2 |-;1,0>.  Its frequency has the closed form

    f = 3A/2 + (gamma_n - gamma_e) B / 2
        + sqrt( (A + (gamma_n + gamma_e) B)^2 + 8 A^2 ) / 2,

which nmr_numeric must reproduce from the full 6x6 diagonalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DotConfig, b_field_from_ratio, nuclear_larmor_mhz
from .errors import DegenerateSelectionError
from .hyperfine import coupling_a
from .numerics import EigenSystem, hermitian_eig
from .spectrum import ground_state_at

OVERLAP_DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class SpinBasisLabel:
    """One product state |i_z; S, S_z> of nucleus and electron pair."""

    i_z: float      # +0.5 or -0.5
    s_total: int    # 0 or 1
    s_z: int        # in [-s_total, s_total]

    def __post_init__(self):
        if self.i_z not in (0.5, -0.5):
            raise ValueError(f"i_z must be +-0.5, got {self.i_z}")
        if self.s_total not in (0, 1):
            raise ValueError(f"s_total must be 0 or 1, got {self.s_total}")
        if abs(self.s_z) > self.s_total:
            raise ValueError(f"s_z={self.s_z} out of range for S={self.s_total}")

    @property
    def f_z(self) -> float:
        return self.i_z + self.s_z


@dataclass(frozen=True)
class SpinMatrix:
    """Hermitian spin Hamiltonian (MHz) over an explicitly labeled basis."""

    matrix: np.ndarray
    labels: tuple[SpinBasisLabel, ...]


@dataclass(frozen=True)
class NmrResult:
    """Numeric resonance next to its closed form and the mixing amplitudes."""

    f_nmr: float     # E(|-;1,-1>) - E(|Psi>), MHz
    f_closed: float  # closed-form value, MHz
    c1: float        # <+;1,-1|Psi>
    c2: float        # <-;1,0|Psi>
    f0: float        # bare Larmor gamma_n * B, MHz


def spin_basis(s_total: int) -> tuple[SpinBasisLabel, ...]:
    """Basis ordered by descending F_z, then descending i_z."""
    labels = [
        SpinBasisLabel(i_z=iz, s_total=s_total, s_z=sz)
        for iz in (0.5, -0.5)
        for sz in range(s_total, -s_total - 1, -1)
    ]
    labels.sort(key=lambda lb: (-lb.f_z, -lb.i_z))
    return tuple(labels)


def _raise_coeff(s: float, m: float) -> float:
    """<s, m+1 | S+ | s, m> = sqrt(s(s+1) - m(m+1))."""
    return math.sqrt(s * (s + 1.0) - m * (m + 1.0))


def build_spin_matrix(
    a_mhz: float, b_tesla: float, cfg: DotConfig, s_total: int
) -> SpinMatrix:
    """Assemble the spin Hamiltonian in MHz over the labeled basis.

    Triplet: full 6x6 with the flip-flop and Iz Sz terms.  Singlet electrons
    are uncoupled, leaving a 2x2 nuclear Zeeman matrix.
    """
    if a_mhz < 0:
        raise ValueError(f"a_mhz must be >= 0, got {a_mhz}")
    if b_tesla < 0:
        raise ValueError(f"b_tesla must be >= 0, got {b_tesla}")
    labels = spin_basis(s_total)
    n = len(labels)
    h = np.zeros((n, n), dtype=complex)
    for i, li in enumerate(labels):
        h[i, i] = (
            2.0 * a_mhz * li.i_z * li.s_z
            - cfg.gamma_n * b_tesla * li.i_z
            + cfg.gamma_e * b_tesla * li.s_z
        )
        if s_total == 0:
            continue
        for j, lj in enumerate(labels):
            # I+ S- : i_z up by 1, s_z down by 1 (and the conjugate I- S+)
            if li.i_z == lj.i_z + 1.0 and li.s_z == lj.s_z - 1:
                amp = a_mhz * _raise_coeff(0.5, lj.i_z) * _raise_coeff(s_total, li.s_z)
                h[i, j] += amp
                h[j, i] += amp
    return SpinMatrix(matrix=h, labels=labels)


def nmr_closed_form(a_mhz: float, b_tesla: float, cfg: DotConfig) -> float:
    """Closed-form nuclear resonance of the triplet sector, MHz."""
    if a_mhz < 0 or b_tesla < 0:
        raise ValueError("a_mhz and b_tesla must be >= 0")
    gn = cfg.gamma_n
    ge = cfg.gamma_e
    return (
        1.5 * a_mhz
        + 0.5 * (gn - ge) * b_tesla
        + 0.5 * math.sqrt((a_mhz + (gn + ge) * b_tesla) ** 2 + 8.0 * a_mhz * a_mhz)
    )


def _eigvec_for(es: EigenSystem, index: int) -> int:
    """Eigenpair whose vector has the largest weight on basis state `index`."""
    return int(np.argmax(np.abs(es.vectors[index, :])))


def nmr_numeric(a_mhz: float, b_tesla: float, cfg: DotConfig) -> NmrResult:
    """Resonance from the 6x6 diagonalization; must match the closed form.

    |Psi> is picked inside the F_z = -1/2 block by maximal overlap with
    |+;1,-1> rather than by eigenvalue order, which stays robust down to
    B -> 0 where the ordering flips.
    """
    sm = build_spin_matrix(a_mhz, b_tesla, cfg, s_total=1)
    labels = sm.labels
    i_stretched = labels.index(SpinBasisLabel(-0.5, 1, -1))
    i_flip = labels.index(SpinBasisLabel(0.5, 1, -1))
    i_keep = labels.index(SpinBasisLabel(-0.5, 1, 0))

    es = hermitian_eig(sm.matrix)
    block_weight = (
        np.abs(es.vectors[i_flip, :]) ** 2 + np.abs(es.vectors[i_keep, :]) ** 2
    )
    cand = np.argsort(block_weight, kind="stable")[-2:]
    overlaps = np.abs(es.vectors[i_flip, cand]) ** 2
    if abs(overlaps[0] - overlaps[1]) <= OVERLAP_DEGENERACY_TOL:
        raise DegenerateSelectionError(
            "the two F_z = -1/2 eigenstates have equal overlap with |+;1,-1>; "
            "cannot select the resonance partner"
        )
    j_psi = int(cand[int(np.argmax(overlaps))])
    j_low = _eigvec_for(es, i_stretched)

    c1 = es.vectors[i_flip, j_psi]
    c2 = es.vectors[i_keep, j_psi]
    # real-symmetric block + fixed phase convention leave both real
    if max(abs(c1.imag), abs(c2.imag)) > 1e-10:
        raise DegenerateSelectionError("mixing amplitudes came out complex")

    f_nmr = float(es.values[j_low] - es.values[j_psi])
    return NmrResult(
        f_nmr=f_nmr,
        f_closed=nmr_closed_form(a_mhz, b_tesla, cfg),
        c1=float(c1.real),
        c2=float(c2.real),
        f0=nuclear_larmor_mhz(cfg, b_tesla),
    )


def relative_shift(cfg: DotConfig, x: float, ir_excited: bool = False) -> float:
    """Relative resonance shift (f - f0)/f0 at ratio x; exactly 0 for singlets."""
    if not x > 0:
        raise ValueError(f"x must be > 0 (f0 vanishes at B=0), got {x}")
    ground = ground_state_at(cfg, x)
    if ground.s_total == 0:
        return 0.0
    a = coupling_a(cfg, x, ground.m_abs, ground.s_total, ir_excited)
    b = b_field_from_ratio(cfg, x)
    f0 = nuclear_larmor_mhz(cfg, b)
    return (nmr_closed_form(a, b, cfg) - f0) / f0
