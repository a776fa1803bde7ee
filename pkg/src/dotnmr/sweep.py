"""Field-ratio sweep assembling couplings and resonance frequencies per point.

Each row composes the orbital ground state, the contact coupling (with and
without infrared excitation of the center of mass) and the resulting nuclear
resonance.  In singlet windows the nucleus is decoupled: the coupling and
shift columns are exactly 0 and both resonance columns equal the bare Larmor
frequency.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .config import DotConfig, b_field_from_ratio, nuclear_larmor_mhz
from .errors import ConfigError
from .hyperfine import delta_cm, delta_m
from .spectrum import ground_state_at, mu_m
from .spin_hamiltonian import nmr_closed_form


@dataclass(frozen=True)
class SweepRow:
    """One sweep record; field order is the CSV column order."""

    x: float
    b_tesla: float
    m_abs: int
    s_total: int
    mu_m: float
    delta_l0sq: float
    delta_cm_l0sq: float
    a_mhz: float
    a_cm_mhz: float
    f0_mhz: float
    f_nmr_mhz: float
    f_nmr_ir_mhz: float
    shift: float
    shift_ir: float


SWEEP_COLUMNS = tuple(f.name for f in fields(SweepRow))


@dataclass(frozen=True)
class SweepSpec:
    """Grid of the default sweep; ir selects the IR column for plotting."""

    x_min: float = 0.05
    x_max: float = 5.0
    steps: int = 500
    ir: bool = False


def sweep_row(cfg: DotConfig, x: float) -> SweepRow:
    """Compute one sweep record at ratio x > 0."""
    ground = ground_state_at(cfg, x)
    b = b_field_from_ratio(cfg, x)
    f0 = nuclear_larmor_mhz(cfg, b)
    mu = mu_m(ground.m_abs, cfg.alpha_tilde)

    if ground.s_total == 0:
        return SweepRow(
            x=x, b_tesla=b, m_abs=ground.m_abs, s_total=0, mu_m=mu,
            delta_l0sq=0.0, delta_cm_l0sq=0.0, a_mhz=0.0, a_cm_mhz=0.0,
            f0_mhz=f0, f_nmr_mhz=f0, f_nmr_ir_mhz=f0, shift=0.0, shift_ir=0.0,
        )

    density = delta_m(cfg, x, ground.m_abs)
    density_cm = delta_cm(cfg, x, ground.m_abs)
    a = 0.5 * cfg.hyperfine_c * density
    a_cm = 0.5 * cfg.hyperfine_c * density_cm
    f_nmr = nmr_closed_form(a, b, cfg)
    f_nmr_ir = nmr_closed_form(a_cm, b, cfg)
    return SweepRow(
        x=x, b_tesla=b, m_abs=ground.m_abs, s_total=1, mu_m=mu,
        delta_l0sq=density, delta_cm_l0sq=density_cm, a_mhz=a, a_cm_mhz=a_cm,
        f0_mhz=f0, f_nmr_mhz=f_nmr, f_nmr_ir_mhz=f_nmr_ir,
        shift=(f_nmr - f0) / f0, shift_ir=(f_nmr_ir - f0) / f0,
    )


def run_sweep(cfg: DotConfig, x_min: float, x_max: float, steps: int) -> list[SweepRow]:
    """Uniform inclusive grid of sweep rows, deterministic for fixed inputs."""
    if steps < 2:
        raise ConfigError(f"steps must be >= 2, got {steps}")
    if not x_min > 0:
        raise ConfigError(f"x_min must be > 0 (the bare Larmor f0 vanishes at B=0), got {x_min}")
    if not x_min < x_max:
        raise ConfigError(f"need x_min < x_max, got [{x_min}, {x_max}]")
    step = (x_max - x_min) / (steps - 1)
    rows = []
    for i in range(steps):
        x = x_max if i == steps - 1 else x_min + i * step
        try:
            rows.append(sweep_row(cfg, x))
        except Exception as exc:
            raise RuntimeError(f"sweep failed at x = {x}: {exc}") from exc
    return rows
