"""Command-line front end.

Subcommands:
  sweep        field-ratio sweep -> CSV (+ optional SVG plots) + manifest
  transitions  table of ground-state boundaries in a ratio window
  nmr          single-point couplings and resonance frequencies
  gate         Hadamard check and conditional-CNOT fidelity demo

Exit codes: 0 success, 1 configuration error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import DotConfig, b_field_from_ratio, nuclear_larmor_mhz, validate_config
from .errors import ConfigError, DotnmrError
from .gates import TwoQubitModel, cnot_conditional, hadamard
from .hyperfine import coupling_a, delta_cm, delta_m
from .output import (
    SweepSpec,
    build_manifest,
    emit_svg,
    load_config,
    write_csv,
    write_manifest,
)
from .spectrum import ground_state_at, magic_transitions, mu_m
from .spin_hamiltonian import nmr_numeric
from .sweep import run_sweep


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage errors map to exit code 1."""

    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dotnmr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p):
        p.add_argument("--config", type=Path, default=None, help="JSON config file")
        p.add_argument("--x-min", type=float, default=None, help="lower field ratio")
        p.add_argument("--x-max", type=float, default=None, help="upper field ratio")

    p_sweep = sub.add_parser("sweep", help="run a field-ratio sweep")
    add_common(p_sweep)
    p_sweep.add_argument("--steps", type=int, default=None, help="grid points (inclusive)")
    p_sweep.add_argument("--ir", action="store_true", help="plot the IR-excited shift column")
    p_sweep.add_argument("--out-dir", type=Path, default=Path("."), help="output directory")
    p_sweep.add_argument("--svg", action="store_true", help="also emit SVG line plots")

    p_tr = sub.add_parser("transitions", help="list ground-state boundaries")
    add_common(p_tr)

    p_nmr = sub.add_parser("nmr", help="resonance at one field ratio")
    p_nmr.add_argument("--config", type=Path, default=None, help="JSON config file")
    p_nmr.add_argument("--x", type=float, required=True, help="field ratio omega_c/omega_0")
    p_nmr.add_argument("--ir", action="store_true", help="IR-excited center of mass")

    p_gate = sub.add_parser("gate", help="RF gate demos")
    p_gate.add_argument("--f-a", type=float, default=17.393, help="qubit a Larmor, MHz")
    p_gate.add_argument("--f-b", type=float, default=17.393, help="qubit b Larmor, MHz")
    p_gate.add_argument("--j-coupling", type=float, default=0.001,
                        help="state-dependent shift J, MHz")
    p_gate.add_argument("--rabi-over-j", type=float, default=0.05,
                        help="pulse selectivity ratio")
    return parser


def _load(args) -> tuple[DotConfig, SweepSpec]:
    if getattr(args, "config", None) is not None:
        cfg, spec = load_config(args.config)
    else:
        cfg, spec = validate_config(DotConfig()), SweepSpec()
    overrides = {}
    for key in ("x_min", "x_max", "steps"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "ir", False):
        overrides["ir"] = True
    if overrides:
        spec = SweepSpec(**{**spec.__dict__, **overrides})
    return cfg, spec


def _cmd_sweep(args) -> int:
    cfg, spec = _load(args)
    rows = run_sweep(cfg, spec.x_min, spec.x_max, spec.steps)
    out_dir = args.out_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = [write_csv(rows, out_dir / "sweep.csv")]
    if args.svg:
        paths.append(emit_svg(rows, "delta_l0sq", out_dir / "coupling.svg"))
        shift_column = "shift_ir" if spec.ir else "shift"
        paths.append(emit_svg(rows, shift_column, out_dir / "shift.svg"))
    manifest = build_manifest(cfg, spec, paths)
    manifest_path = write_manifest(manifest, out_dir / "manifest.json")
    print(f"wrote {len(rows)} rows over x in [{spec.x_min:g}, {spec.x_max:g}]")
    for entry in manifest.outputs:
        print(f"  {out_dir / entry['path']}  sha256={entry['sha256'][:16]}")
    print(f"  {manifest_path}")
    return 0


def _cmd_transitions(args) -> int:
    cfg, spec = _load(args)
    points = magic_transitions(cfg, spec.x_min, spec.x_max)
    print("x_star      (|m|,S) -> (|m|,S)    B_tesla")
    for tp in points:
        b = b_field_from_ratio(cfg, tp.x_star)
        print(
            f"{tp.x_star:.6f}    {tp.from_state} -> {tp.to_state}    {b:.6f}"
        )
    if not points:
        print("(no ground-state change in this window)")
    return 0


def _cmd_nmr(args) -> int:
    if args.config is not None:
        cfg, _ = load_config(args.config)
    else:
        cfg = validate_config(DotConfig())
    x = args.x
    ground = ground_state_at(cfg, x)
    b = b_field_from_ratio(cfg, x)
    f0 = nuclear_larmor_mhz(cfg, b)
    print(f"x = {x:g}   B = {b:.6f} T   ground state (|m|,S) = {ground.label}")
    print(f"mu_m = {mu_m(ground.m_abs, cfg.alpha_tilde):.9g}")
    if ground.s_total == 0:
        print(f"singlet window: nucleus uncoupled, f_nmr = f0 = {f0:.9g} MHz, shift = 0")
        return 0
    a = coupling_a(cfg, x, ground.m_abs, ground.s_total, args.ir)
    density = delta_cm(cfg, x, ground.m_abs) if args.ir else delta_m(cfg, x, ground.m_abs)
    result = nmr_numeric(a, b, cfg)
    print(f"ir_excited = {args.ir}")
    print(f"delta*l0^2 = {density:.9g}   A = {a:.9g} MHz")
    print(f"f0 = {result.f0:.9g} MHz")
    print(f"f_nmr (numeric) = {result.f_nmr:.9g} MHz")
    print(f"f_nmr (closed)  = {result.f_closed:.9g} MHz")
    print(f"mixing: c1 = {result.c1:.9g}, c2 = {result.c2:.9g}")
    print(f"relative shift = {(result.f_nmr - result.f0) / result.f0:.9g}")
    return 0


def _cmd_gate(args) -> int:
    h = hadamard()
    print("Hadamard acts as |0> -> (|0>+|1>)/sqrt2, |1> -> (|0>-|1>)/sqrt2:")
    print(f"  column 0: ({h[0, 0].real:+.6f}, {h[1, 0].real:+.6f})")
    print(f"  column 1: ({h[0, 1].real:+.6f}, {h[1, 1].real:+.6f})")
    model = TwoQubitModel(f_a=args.f_a, f_b=args.f_b, j_coupling=args.j_coupling)
    print(f"two-qubit model: f_a={model.f_a} MHz, f_b={model.f_b} MHz, J={model.j_coupling} MHz")
    report = cnot_conditional(model, args.rabi_over_j)
    print(
        f"CNOT at rabi/J = {args.rabi_over_j:g}: fidelity = {report.fidelity:.8f}, "
        f"off-resonant residual = {report.residual_offresonant_population:.3e}"
    )
    print("selectivity sweep:")
    for ratio in (1 / 5, 1 / 10, 1 / 20):
        rep = cnot_conditional(model, ratio)
        print(f"  rabi/J = 1/{round(1 / ratio)}: fidelity = {rep.fidelity:.8f}")
    return 0


_COMMANDS = {
    "sweep": _cmd_sweep,
    "transitions": _cmd_transitions,
    "nmr": _cmd_nmr,
    "gate": _cmd_gate,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except (DotnmrError, ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
