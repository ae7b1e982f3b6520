"""`slot`: precode one seeded symbol slot and print every intermediate."""

import argparse

import numpy as np

from cli.options import add_scenario_arguments
from schemas.trial import TrialConfig
from services.channel import draw_channel, zf_power, zf_precoder
from services.constellation import draw_symbols, make_constellation
from services.sim import Stream, trial_seed
from services.slp import precode_slot

PRINT_OPTIONS = {"precision": 6, "suppress": True, "linewidth": 120, "floatmode": "fixed"}


def register(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("slot", help="inspect a single precoded slot")
    add_scenario_arguments(parser, n_r=4, seed=1)
    parser.add_argument("--nt", type=int, default=6, help="transmit antennas N_t (default 6)")
    parser.set_defaults(run=run)
    return parser


def _show(name: str, value: object) -> None:
    print(f"{name} =")
    print(value)


def run(args: argparse.Namespace) -> int:
    cfg = TrialConfig(
        n_r=args.nr,
        n_t_values=[args.nt],
        constellation=args.mod,
        gamma_db=args.gamma_db,
        trials=1,
        master_seed=args.seed,
        ring_ratio=args.ring_ratio,
    )
    c = make_constellation(cfg.constellation, cfg.ring_ratio)
    gamma = cfg.gamma_amplitude
    h = draw_channel(cfg.n_r, args.nt, trial_seed(cfg.master_seed, args.nt, 0, Stream.CHANNEL))
    w = zf_precoder(h)
    s = draw_symbols(c, cfg.n_r, trial_seed(cfg.master_seed, args.nt, 0, Stream.SYMBOLS))
    result = precode_slot(h, w, s, c, gamma)

    target = gamma * s.entries
    y = result.received
    margin_i = np.sign(s.entries.real) * (y.real - target.real)
    margin_q = np.sign(s.entries.imag) * (y.imag - target.imag)
    phase = np.angle(y * np.conj(s.entries))

    power_zf = zf_power(w, s, gamma)
    with np.printoptions(**PRINT_OPTIONS):
        print(f"constellation {c.kind.value} M={c.order}  N_r={cfg.n_r}  N_t={args.nt}  seed={cfg.master_seed}")
        _show("H", h.h)
        _show("W", w.w)
        _show("s", s.entries)
        _show("u_raw", result.u_raw)
        _show("u_corrected", result.u_corrected)
        _show("x", result.x)
        _show("margin_inphase", margin_i)
        _show("margin_quadrature", margin_q)
        _show("phase_offset", phase)
    print("corrections = " + " ".join(f.value for f in result.corrections))
    print(f"power_zf = {power_zf:.6f}")
    print(f"power_slp = {result.total_power:.6f}")
    print(f"gain_db = {10 * np.log10(power_zf / result.total_power):.6f}")
    print(f"nnls_iterations = {result.nnls_iterations}")
    return 0
