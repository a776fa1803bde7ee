"""Physical parameters of the dot-plus-nucleus system and unit conversions.

Unit bookkeeping used throughout the package:

* orbital-sector energies are dimensionless, in units of the confinement
  quantum hbar*omega0;
* spin-sector energies are frequencies in MHz (energy divided by Planck's
  constant);
* the magnetic field enters through the dimensionless ratio
  x = omega_c / omega_0, with omega_c = e*B/m* the cyclotron frequency.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, fields

from .errors import ConfigError

# Free-electron cyclotron energy per Tesla (meV/T), i.e. twice the Bohr
# magneton.  Inverts omega_c = e*B/m*:  B = x * hbar_omega0 * mstar_ratio / K_CYC.
K_CYC_MEV_PER_T = 0.1157676

# Bohr magneton as a frequency, MHz/T.  gamma_e for a g-factor g is
# g * MU_B_MHZ_PER_T; used only for the g/gamma_e consistency warning.
MU_B_MHZ_PER_T = 13996.2449

# Planck constant in meV per MHz of frequency.
H_MEV_PER_MHZ = 4.135667696e-6


@dataclass(frozen=True)
class DotConfig:
    """Material, dot and nuclear parameters.  Immutable once validated.

    Defaults describe a silicon dot with a central spin-1/2 carbon nucleus:
    gamma_n/gamma_e are the standard 13C/electron gyromagnetic ratios and
    hyperfine_c is the contact strength C/l0^2 = 60 MHz.  The confinement
    energy and mass ratio are chosen so the first singlet-triplet boundary
    sits near 1.6 T; both stay configurable.
    """

    hbar_omega0: float = 2.5      # confinement energy, meV
    mstar_ratio: float = 0.19     # effective mass m*/m_e
    g_factor: float = 2.0
    gamma_n: float = 10.7084      # nuclear gyromagnetic ratio, MHz/T
    gamma_e: float = 28024.95     # electron gyromagnetic ratio, MHz/T
    hyperfine_c: float = 60.0     # contact coupling C/l0^2, MHz
    alpha_tilde: float = 3.0      # repulsion strength (alpha/l0^2)/(hbar omega0)
    m_max: int = 15               # largest |m| scanned for the ground state


CONFIG_FIELDS = tuple(f.name for f in fields(DotConfig))


@dataclass(frozen=True)
class FieldPoint:
    """A sweep point: dimensionless ratio x and the corresponding field in T."""

    x: float
    b_tesla: float


def validate_config(cfg: DotConfig) -> DotConfig:
    """Check all parameter invariants; returns cfg unchanged when valid.

    Raises ConfigError naming the offending field.  Soft inconsistencies
    (gamma_e not matching g_factor, weak gamma_e/gamma_n hierarchy) only warn.
    """
    if not cfg.hbar_omega0 > 0:
        raise ConfigError(f"hbar_omega0 must be > 0, got {cfg.hbar_omega0}")
    if not cfg.mstar_ratio > 0:
        raise ConfigError(f"mstar_ratio must be > 0, got {cfg.mstar_ratio}")
    if not isinstance(cfg.m_max, int) or isinstance(cfg.m_max, bool):
        raise ConfigError(f"m_max must be an integer, got {cfg.m_max!r}")
    if cfg.m_max < 5:
        raise ConfigError(f"m_max must be >= 5, got {cfg.m_max}")
    if not cfg.gamma_n > 0:
        raise ConfigError(f"gamma_n must be > 0, got {cfg.gamma_n}")
    if not cfg.gamma_e > cfg.gamma_n:
        raise ConfigError(
            f"gamma_e must exceed gamma_n, got gamma_e={cfg.gamma_e}, gamma_n={cfg.gamma_n}"
        )
    if cfg.alpha_tilde < 0:
        raise ConfigError(f"alpha_tilde must be >= 0, got {cfg.alpha_tilde}")
    if cfg.hyperfine_c < 0:
        raise ConfigError(f"hyperfine_c must be >= 0, got {cfg.hyperfine_c}")

    if cfg.gamma_e < 100.0 * cfg.gamma_n:
        warnings.warn(
            f"gamma_e ({cfg.gamma_e} MHz/T) is less than 100x gamma_n "
            f"({cfg.gamma_n} MHz/T); the electron-Zeeman-dominated regime "
            "assumed by the resonance formulas may not hold",
            stacklevel=2,
        )
    expected_gamma_e = cfg.g_factor * MU_B_MHZ_PER_T
    if expected_gamma_e > 0 and abs(cfg.gamma_e / expected_gamma_e - 1.0) > 0.02:
        warnings.warn(
            f"gamma_e ({cfg.gamma_e} MHz/T) differs from g_factor*mu_B/h "
            f"({expected_gamma_e:.2f} MHz/T) by more than 2%",
            stacklevel=2,
        )
    return cfg


def b_field_from_ratio(cfg: DotConfig, x: float) -> float:
    """Magnetic field in Tesla for a given ratio x = omega_c/omega_0."""
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    return x * cfg.hbar_omega0 * cfg.mstar_ratio / K_CYC_MEV_PER_T


def zeeman_ratio(cfg: DotConfig, x: float) -> float:
    """Electron Zeeman energy g*mu_B*B over hbar*omega0.

    Algebraically (g/2) * (m*/m_e) * x, independent of the field conversion.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    return 0.5 * cfg.g_factor * cfg.mstar_ratio * x


def field_point(cfg: DotConfig, x: float) -> FieldPoint:
    return FieldPoint(x=x, b_tesla=b_field_from_ratio(cfg, x))


def nuclear_larmor_mhz(cfg: DotConfig, b_tesla: float) -> float:
    """Bare nuclear resonance gamma_n * B in MHz (the undoped-dot signal)."""
    return cfg.gamma_n * b_tesla
