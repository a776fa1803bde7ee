"""Two-electron orbital spectrum and magic-number ground-state transitions.

Center-of-mass and relative motion separate exactly for a parabolic dot, and
the inverse-square electron repulsion keeps the relative problem solvable in
closed form.  The lowest relative branch for angular momentum |m| is

    E_rel(m) / hbar*omega0 = sqrt(x^2 + 4)/2 * (1 + mu_m) - |m| * x / 2,

with mu_m = sqrt(m^2 + alpha_tilde) absorbing the repulsion strength.  The
center-of-mass ground energy is independent of (m, S) and drops out of all
ground-state comparisons, as does the MHz-scale hyperfine energy (nine orders
of magnitude below the meV orbital scale).

Fermion antisymmetry ties total spin to the parity of m: even m pairs with
the singlet (S=0), odd m with the triplet (S=1).  The triplet rides the
S_z = -1 Zeeman branch.  As the field ratio x grows the ground state hops
through the magic-number sequence (0,0), (1,1), (3,1), (5,1), ...
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .config import DotConfig, zeeman_ratio
from .errors import ParityError
from .numerics import bracket_roots


def spin_for_m(m_abs: int) -> int:
    """Total spin forced by antisymmetry: 0 for even |m|, 1 for odd."""
    return m_abs % 2


def mu_m(m_abs: int, alpha_tilde: float) -> float:
    """Effective angular-momentum index sqrt(m^2 + alpha_tilde)."""
    if m_abs < 0:
        raise ValueError(f"m_abs must be >= 0, got {m_abs}")
    if alpha_tilde < 0:
        raise ValueError(f"alpha_tilde must be >= 0, got {alpha_tilde}")
    return math.sqrt(m_abs * m_abs + alpha_tilde)


def effective_omega_ratio(x: float) -> float:
    """Hybrid frequency over omega_0: sqrt(x^2 + 4)."""
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    return math.sqrt(x * x + 4.0)


def rel_ground_energy(m_abs: int, alpha_tilde: float, x: float) -> float:
    """Lowest relative-motion energy for angular momentum |m|, in hbar*omega0."""
    return 0.5 * effective_omega_ratio(x) * (1.0 + mu_m(m_abs, alpha_tilde)) - 0.5 * m_abs * x


def total_ground_energy(m_abs: int, s_total: int, cfg: DotConfig, x: float) -> float:
    """Relative plus spin-Zeeman energy in hbar*omega0 (CM constant omitted).

    The triplet contributes -zeeman_ratio (its S_z = -1 branch); the singlet
    has no electron Zeeman energy.
    """
    if s_total != spin_for_m(m_abs):
        raise ParityError(
            f"(|m|={m_abs}, S={s_total}) violates the parity rule: even m pairs "
            "with S=0, odd m with S=1"
        )
    e = rel_ground_energy(m_abs, cfg.alpha_tilde, x)
    if s_total == 1:
        e -= zeeman_ratio(cfg, x)
    return e


@dataclass(frozen=True)
class OrbitalGround:
    """Orbital ground-state label (|m|, S) with its energy at ratio x."""

    x: float
    m_abs: int
    s_total: int
    energy: float
    at_search_boundary: bool = False

    def __post_init__(self):
        if self.s_total != spin_for_m(self.m_abs):
            raise ParityError(
                f"(|m|={self.m_abs}, S={self.s_total}) violates the parity rule"
            )

    @property
    def label(self) -> tuple[int, int]:
        return (self.m_abs, self.s_total)


@dataclass(frozen=True)
class TransitionPoint:
    """Ground-state boundary: at x_star the labels swap from_state -> to_state."""

    x_star: float
    from_state: tuple[int, int]
    to_state: tuple[int, int]

    def __post_init__(self):
        if not self.x_star > 0:
            raise ValueError(f"x_star must be > 0, got {self.x_star}")
        if self.from_state == self.to_state:
            raise ValueError("transition endpoints must differ")
        if not self.to_state[0] > self.from_state[0]:
            raise ValueError(
                f"|m| must increase across a transition, got "
                f"{self.from_state} -> {self.to_state}"
            )


def ground_state_at(cfg: DotConfig, x: float) -> OrbitalGround:
    """Lowest-energy (|m|, S) over m in [0, m_max]; ties go to smaller |m|.

    When the minimum lands on m_max itself the true ground state may lie
    outside the searched window, so the result carries a boundary flag and a
    warning is issued.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    best_m = 0
    best_e = math.inf
    for m in range(cfg.m_max + 1):
        e = total_ground_energy(m, spin_for_m(m), cfg, x)
        if e < best_e:
            best_m, best_e = m, e
    at_boundary = best_m == cfg.m_max
    if at_boundary:
        warnings.warn(
            f"ground-state search hit m_max={cfg.m_max} at x={x}; "
            "increase m_max to trust this result",
            stacklevel=2,
        )
    return OrbitalGround(
        x=x,
        m_abs=best_m,
        s_total=spin_for_m(best_m),
        energy=best_e,
        at_search_boundary=at_boundary,
    )


def magic_transitions(
    cfg: DotConfig, x_lo: float, x_hi: float, scan_points: int = 2048
) -> list[TransitionPoint]:
    """Locate every ground-state change in [x_lo, x_hi].

    A label scan brackets each change to one grid cell, then the pairwise
    energy-difference root is refined by bisection.  Ground-state |m| is
    non-decreasing in x, so equal labels at both cell edges mean no change
    inside.
    """
    if not 0 <= x_lo < x_hi:
        raise ValueError(f"need 0 <= x_lo < x_hi, got [{x_lo}, {x_hi}]")
    step = (x_hi - x_lo) / (scan_points - 1)
    grid = [x_lo + i * step for i in range(scan_points - 1)] + [x_hi]
    labels = [ground_state_at(cfg, x).label for x in grid]

    points: list[TransitionPoint] = []
    for i in range(len(grid) - 1):
        la, lb = labels[i], labels[i + 1]
        if la == lb:
            continue
        ma, sa = la
        mb, sb = lb

        def energy_gap(x: float) -> float:
            return total_ground_energy(ma, sa, cfg, x) - total_ground_energy(mb, sb, cfg, x)

        roots = bracket_roots(energy_gap, grid[i], grid[i + 1], 2)
        if not roots:
            # labels changed without a sign change only when the crossing sits
            # exactly on a grid point; rescan the cell more finely
            roots = bracket_roots(energy_gap, grid[i], grid[i + 1], 64)
        if not roots:
            raise RuntimeError(
                f"ground-state label changed in [{grid[i]}, {grid[i + 1]}] "
                "but no energy crossing was found"
            )
        points.append(TransitionPoint(x_star=roots[0], from_state=la, to_state=lb))
    return points
