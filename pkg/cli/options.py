"""Flag parsers shared by the subcommands."""

import argparse

from models.enums import ModulationToken
from services.constellation import DEFAULT_RING_RATIO


def parse_nt(text: str) -> list[int]:
    """
    N_t sweep: `a`, `a:b`, `a:b:step` (inclusive of b) or `a,b,c`.
    """
    try:
        if "," in text:
            values = [int(part) for part in text.split(",")]
        elif ":" in text:
            parts = [int(part) for part in text.split(":")]
            if len(parts) not in (2, 3):
                raise ValueError(text)
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) == 3 else 1
            if step < 1 or stop < start:
                raise ValueError(text)
            values = list(range(start, stop + 1, step))
        else:
            values = [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid N_t sweep {text!r}; use a, a:b, a:b:step or a,b,c") from None
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"N_t values must be positive, got {text!r}")
    return values


def parse_gamma_db(text: str) -> list[float]:
    """One SNR constraint in dB for every user, or a comma list with one per user."""
    try:
        return [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid --gamma-db {text!r}") from None


def add_scenario_arguments(parser: argparse.ArgumentParser, n_r: int, seed: int) -> None:
    """--nr, --mod, --gamma-db, --seed, --ring-ratio."""
    parser.add_argument("--nr", type=int, default=n_r, help=f"receive users N_r (default {n_r})")
    parser.add_argument(
        "--mod",
        type=ModulationToken,
        choices=list(ModulationToken),
        default=ModulationToken.QPSK,
        metavar="{" + ",".join(t.value for t in ModulationToken) + "}",
        help="constellation (default qpsk)",
    )
    parser.add_argument(
        "--gamma-db", type=parse_gamma_db, default=[10.0], help="SNR constraint in dB, scalar or per-user list (default 10)"
    )
    parser.add_argument("--seed", type=int, default=seed, help=f"master seed (default {seed})")
    parser.add_argument(
        "--ring-ratio",
        type=float,
        default=DEFAULT_RING_RATIO,
        help=f"16-APSK outer/inner radius ratio (default {DEFAULT_RING_RATIO})",
    )
