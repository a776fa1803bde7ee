import math

import numpy as np
import pytest

from dotnmr import (
    DegenerateSelectionError,
    DotConfig,
    SpinBasisLabel,
    build_spin_matrix,
    nmr_closed_form,
    nmr_numeric,
    relative_shift,
)
from dotnmr.spectrum import magic_transitions
from dotnmr.spin_hamiltonian import spin_basis


def test_basis_ordering_triplet():
    labels = spin_basis(1)
    assert [(lb.i_z, lb.s_z) for lb in labels] == [
        (0.5, 1), (0.5, 0), (-0.5, 1), (0.5, -1), (-0.5, 0), (-0.5, -1),
    ]
    f_z = [lb.f_z for lb in labels]
    assert f_z == sorted(f_z, reverse=True)


def test_basis_ordering_singlet():
    labels = spin_basis(0)
    assert [(lb.i_z, lb.s_z) for lb in labels] == [(0.5, 0), (-0.5, 0)]


def test_label_validation():
    with pytest.raises(ValueError):
        SpinBasisLabel(0.3, 1, 0)
    with pytest.raises(ValueError):
        SpinBasisLabel(0.5, 0, 1)


def test_triplet_matrix_elements(default_cfg):
    a, b = 3.0, 0.5
    gn = default_cfg.gamma_n * b
    ge = default_cfg.gamma_e * b
    sm = build_spin_matrix(a, b, default_cfg, 1)
    h = sm.matrix
    idx = {(lb.i_z, lb.s_z): i for i, lb in enumerate(sm.labels)}

    assert h[idx[(0.5, 1)], idx[(0.5, 1)]] == pytest.approx(a - gn / 2 + ge, rel=1e-14)
    assert h[idx[(-0.5, -1)], idx[(-0.5, -1)]] == pytest.approx(a + gn / 2 - ge, rel=1e-14)
    assert h[idx[(0.5, -1)], idx[(-0.5, 0)]] == pytest.approx(math.sqrt(2.0) * a, rel=1e-14)
    assert h[idx[(-0.5, 1)], idx[(0.5, 0)]] == pytest.approx(math.sqrt(2.0) * a, rel=1e-14)
    assert np.max(np.abs(h - h.conj().T)) == 0.0


def test_f_z_block_structure_is_exact(default_cfg):
    sm = build_spin_matrix(1.7, 0.9, default_cfg, 1)
    for i, li in enumerate(sm.labels):
        for j, lj in enumerate(sm.labels):
            if li.f_z != lj.f_z:
                assert sm.matrix[i, j] == 0.0


def test_singlet_matrix_is_nuclear_zeeman_only(default_cfg):
    b = 2.0
    sm = build_spin_matrix(5.0, b, default_cfg, 0)  # coupling ignored for S=0
    expected = np.diag([-0.5 * default_cfg.gamma_n * b, 0.5 * default_cfg.gamma_n * b])
    assert np.allclose(sm.matrix, expected, atol=0)


def test_traceless_zeeman(default_cfg):
    sm = build_spin_matrix(0.0, 1.3, default_cfg, 1)
    assert np.trace(sm.matrix) == 0.0


def test_closed_form_limits(default_cfg):
    b = 20.0 / default_cfg.gamma_n  # gamma_n B = 20 MHz
    assert nmr_closed_form(0.0, b, default_cfg) == pytest.approx(20.0, rel=1e-12)
    assert nmr_closed_form(2.0, 0.0, default_cfg) == pytest.approx(6.0, rel=1e-12)


def test_closed_form_large_field_example():
    cfg = DotConfig(gamma_n=20.0, gamma_e=52344.0)  # gn B = 20, ge B = 52344 at B = 1
    f = nmr_closed_form(2.0, 1.0, cfg)
    direct = 3.0 + 0.5 * (20.0 - 52344.0) + 0.5 * math.sqrt((2.0 + 52364.0) ** 2 + 32.0)
    assert f == pytest.approx(direct, rel=1e-15)
    assert f == pytest.approx(24.0002, abs=5e-5)
    assert abs(f - (20.0 + 4.0)) / f < 1e-3  # electron-Zeeman-dominated approximation


def test_numeric_matches_closed_form_on_grid(default_cfg):
    worst = 0.0
    for a in np.logspace(math.log10(0.1), math.log10(10.0), 20):
        for b in np.logspace(math.log10(0.1), math.log10(10.0), 20):
            res = nmr_numeric(float(a), float(b), default_cfg)
            worst = max(worst, abs(res.f_nmr - res.f_closed) / res.f_closed)
    assert worst <= 1e-10


def test_numeric_mixing_normalization(default_cfg):
    for a, b in ((0.5, 0.2), (8.0, 0.1), (1.0, 9.0)):
        res = nmr_numeric(a, b, default_cfg)
        assert abs(res.c1 ** 2 + res.c2 ** 2 - 1.0) <= 1e-10
        assert res.f_nmr > 0.0


def test_decoupled_limit_amplitudes(default_cfg):
    res = nmr_numeric(0.0, 1.0, default_cfg)
    assert res.c1 == pytest.approx(1.0, abs=1e-12)
    assert res.c2 == pytest.approx(0.0, abs=1e-12)
    assert res.f_nmr == pytest.approx(res.f0, rel=1e-12)


def test_larmor_limit(default_cfg):
    b = 1.5
    f0 = default_cfg.gamma_n * b
    assert abs(nmr_closed_form(0.0, b, default_cfg) - f0) / f0 <= 1e-12
    # at A = 1e-6 f0 the physical deviation is 2A, i.e. 2e-6 relative
    a = 1e-6 * f0
    deviation = abs(nmr_closed_form(a, b, default_cfg) - f0) / f0
    assert deviation <= 2.1e-6
    assert deviation >= 1.9e-6


def test_zeeman_dominated_approximation(default_cfg):
    # whenever gamma_e B >= 2000 A the resonance is gamma_n B + 2A to 1e-3
    for a in (0.5, 2.0, 10.0):
        for b in np.logspace(-1, 1, 8):
            if default_cfg.gamma_e * b < 2000.0 * a:
                continue
            f = nmr_closed_form(a, float(b), default_cfg)
            approx = default_cfg.gamma_n * float(b) + 2.0 * a
            assert abs(f - approx) / f <= 1e-3


def test_perturbative_mixing_scaling(default_cfg):
    # c2^2 -> 2 A^2 / (gamma_e B)^2 in the strong-field limit
    a = 1.0
    bs = (2.0, 4.0, 8.0, 16.0)
    c2sq = [nmr_numeric(a, b, default_cfg).c2 ** 2 for b in bs]
    prefactor = c2sq[-1] * (default_cfg.gamma_e * bs[-1]) ** 2 / (2.0 * a * a)
    assert prefactor == pytest.approx(1.0, rel=2e-2)
    slope = math.log(c2sq[-1] / c2sq[0]) / math.log(bs[-1] / bs[0])
    assert slope == pytest.approx(-2.0, abs=2e-2)


def test_degenerate_selection_guard():
    # equal diagonal entries in the F_z=-1/2 block force 50/50 eigenvectors
    a, b, gn = 1.0, 1.0, 2.0
    degenerate = DotConfig(gamma_n=gn, gamma_e=-(a + gn * b) / b)
    with pytest.raises(DegenerateSelectionError):
        nmr_numeric(a, b, degenerate)


def test_relative_shift_singlet_window(default_cfg):
    assert relative_shift(default_cfg, 0.2) == 0.0
    assert relative_shift(default_cfg, 0.2, ir_excited=True) == 0.0


def test_relative_shift_at_onset(default_cfg):
    x1 = magic_transitions(default_cfg, 0.0, 1.0)[0].x_star
    shift = relative_shift(default_cfg, x1 + 1e-9)
    assert shift == pytest.approx(0.2799, abs=2e-4)
    shift_ir = relative_shift(default_cfg, x1 + 1e-9, ir_excited=True)
    assert shift_ir == pytest.approx(0.4198, abs=2e-4)


def test_relative_shift_requires_positive_x(default_cfg):
    with pytest.raises(ValueError):
        relative_shift(default_cfg, 0.0)


def test_build_matrix_rejects_negative_inputs(default_cfg):
    with pytest.raises(ValueError):
        build_spin_matrix(-1.0, 1.0, default_cfg, 1)
    with pytest.raises(ValueError):
        build_spin_matrix(1.0, -1.0, default_cfg, 1)
