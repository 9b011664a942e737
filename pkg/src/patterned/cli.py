"""Command-line interface.

Subcommands cover sequence generation, counting with claim reconciliation,
prime partitioning, turn words, curve/dragon/tessellation SVGs, DAG export,
and the walk/spectrum/sweep simulations. Every command accepts ``--config``
pointing at a JSON file with the same keys as the flags; explicit flags win.

Exit status: 0 on success, 2 on validation or I/O errors, 3 on numerical
failures.
"""

import argparse
import dataclasses
import json
import math
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import islice
from typing import List, Optional

import numpy as np

from . import core, curves, dynamics, graphs, serialize
from .errors import ConvergenceError

# Claimed values for the first hundred integers, reported alongside computed
# results and never fed into any computation.
CLAIMED_COUNT_100 = 72
CLAIMED_DENSITY_100 = 0.72


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run parameters (flags layered over the config file)."""

    limit: Optional[int] = None
    k: Optional[int] = None
    sites: Optional[int] = None
    steps: int = 100
    alpha: float = 1.0
    beta: float = 0.5
    theta_l: float = math.pi / 4
    theta_r: float = -math.pi / 4
    g_l: float = 1.0
    g_r: float = 1.0
    omega_mode: str = dynamics.OMEGA_FROM_ENERGY
    omega: float = 1.0
    s: float = 0.5
    s_grid: str = "0:1:11"
    initial_site: int = 1
    initial_coin: str = core.TURN_RIGHT
    boundary: str = dynamics.BOUNDARY_REFLECTING
    generations: int = 4
    word: Optional[str] = None
    max_len: int = 12
    placements: Optional[object] = None  # JSON string or parsed list
    unit: float = 1.0
    max_edges: int = curves.DEFAULT_EDGE_CAP
    chain: bool = True
    cluster: bool = True
    gap_primes: bool = False
    all_words: bool = False
    format: Optional[str] = None
    out: Optional[str] = None


_CONFIG_FIELDS = {f.name for f in dataclasses.fields(RunConfig)}


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    file_cfg = {}
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            file_cfg = json.load(fh)
        if not isinstance(file_cfg, dict):
            raise ValueError("config file must hold a JSON object")
        unknown = set(file_cfg) - _CONFIG_FIELDS
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    merged = {}
    for name in _CONFIG_FIELDS:
        flag = getattr(args, name, None)
        if flag is not None:
            merged[name] = flag
        elif name in file_cfg:
            merged[name] = file_cfg[name]
    return RunConfig(**merged)


@contextmanager
def _out_stream(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _require(cfg: RunConfig, name: str):
    value = getattr(cfg, name)
    if value is None:
        raise ValueError(f"{name} is required for this command")
    return value


def _format(cfg: RunConfig, default: str) -> str:
    fmt = cfg.format or default
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    return fmt


def _parse_word(word: str) -> List[str]:
    letters = list(word.upper())
    bad = set(letters) - {core.TURN_LEFT, core.TURN_RIGHT}
    if bad or not letters:
        raise ValueError(f"word must be a non-empty string over L/R, got {word!r}")
    return letters


def _seed_turns(cfg: RunConfig) -> List[str]:
    if cfg.word is not None:
        return _parse_word(cfg.word)
    return core.turn_sequence(_require(cfg, "k"))


def _parse_motions(value) -> List[curves.RigidMotion]:
    if isinstance(value, str):
        value = json.loads(value)
    if not isinstance(value, list) or not value:
        raise ValueError("placements must be a non-empty JSON list of motions")
    motions = []
    for i, entry in enumerate(value):
        if not isinstance(entry, dict):
            raise ValueError(f"placements[{i}] must be an object")
        unknown = set(entry) - {"rotation", "reflect", "translation"}
        if unknown:
            raise ValueError(f"placements[{i}] has unknown keys: {sorted(unknown)}")
        translation = entry.get("translation", (0, 0))
        motions.append(
            curves.RigidMotion(
                rotation=entry.get("rotation", 0),
                reflect=bool(entry.get("reflect", False)),
                translation=(int(translation[0]), int(translation[1])),
            )
        )
    return motions


def _parse_s_grid(grid: str) -> List[float]:
    """Either comma-separated values or 'start:stop:count' (inclusive)."""
    if ":" in grid:
        parts = grid.split(":")
        if len(parts) != 3:
            raise ValueError(f"s_grid range must be start:stop:count, got {grid!r}")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 2:
            raise ValueError("s_grid range needs at least 2 points")
        return [float(v) for v in np.linspace(start, stop, count)]
    try:
        return [float(v) for v in grid.split(",") if v.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad s_grid value in {grid!r}") from exc


def _chain_sites(cfg: RunConfig) -> int:
    if cfg.sites is not None:
        return cfg.sites
    if cfg.limit is not None:
        return len(core.patterned_sequence(cfg.limit))
    raise ValueError("either sites or limit is required for this command")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_gen(cfg: RunConfig) -> int:
    limit = _require(cfg, "limit")
    profiles = [core.profile(n) for n in core.patterned_sequence(limit)]
    fmt = _format(cfg, "csv")
    with _out_stream(cfg.out) as stream:
        if fmt == "csv":
            serialize.write_csv(
                stream,
                serialize.PROFILE_CSV_HEADER,
                (serialize.profile_row(p) for p in profiles),
            )
        else:
            payload = {
                "limit": limit,
                "profiles": [serialize.profile_json(p) for p in profiles],
            }
            serialize.write_json(stream, payload)
    return 0


def _cmd_count(cfg: RunConfig) -> int:
    limit = _require(cfg, "limit")
    report = core.count_and_density(limit)
    payload = {
        "limit": report.limit,
        "count": report.count,
        "density": report.density,
        "claim": None,
    }
    if limit == 100:
        claim = {
            "count": CLAIMED_COUNT_100,
            "density": CLAIMED_DENSITY_100,
            "matches_computed": report.count == CLAIMED_COUNT_100,
        }
        if report.count != CLAIMED_COUNT_100:
            claim["discrepancy"] = report.count - CLAIMED_COUNT_100
            claim["note"] = (
                "the claimed enumeration double-counts entries such as 21, 48, "
                "81, 91 and admits non-qualifying numbers such as 54, 56, 87"
            )
        payload["claim"] = claim
    with _out_stream(cfg.out) as stream:
        serialize.write_json(stream, payload)
    return 0


def _cmd_primes(cfg: RunConfig) -> int:
    limit = _require(cfg, "limit")
    patterned = graphs.patterned_primes(limit)
    gaps = graphs.gap_primes(limit)
    fmt = _format(cfg, "csv")
    with _out_stream(cfg.out) as stream:
        if fmt == "csv":
            rows = sorted(
                [(p, "patterned") for p in patterned] + [(p, "gap") for p in gaps]
            )
            serialize.write_csv(stream, ("p", "group"), rows)
        else:
            serialize.write_json(
                stream, {"limit": limit, "patterned": patterned, "gap": gaps}
            )
    return 0


def _cmd_turns(cfg: RunConfig) -> int:
    k = _require(cfg, "k")
    labels = core.turn_sequence(k)
    members = list(islice(core.iter_patterned(), k))
    fmt = _format(cfg, "csv")
    with _out_stream(cfg.out) as stream:
        if fmt == "csv":
            rows = [(i + 1, n, t) for i, (n, t) in enumerate(zip(members, labels))]
            serialize.write_csv(stream, ("index", "n", "turn"), rows)
        else:
            serialize.write_json(
                stream, {"k": k, "numbers": members, "turns": labels}
            )
    return 0


def _curve_stats_payload(curve: curves.LatticeCurve) -> dict:
    stats = curves.curve_stats(curve)
    return {
        "segment_count": stats.segment_count,
        "unique_edge_count": stats.unique_edge_count,
        "revisited_vertex_count": stats.revisited_vertex_count,
        "bounded_region_count": stats.bounded_region_count,
        "bounding_box": list(stats.bounding_box),
        "max_turn_run": stats.max_turn_run,
    }


def _emit_svg(cfg: RunConfig, svg: str, stats: dict) -> None:
    if cfg.out is None:
        sys.stdout.write(svg)
    else:
        with _out_stream(cfg.out) as stream:
            stream.write(svg)
        serialize.write_json(sys.stdout, stats)


def _cmd_curve(cfg: RunConfig) -> int:
    curve = curves.trace(_seed_turns(cfg))
    _emit_svg(cfg, serialize.curve_svg(curve, unit=cfg.unit), _curve_stats_payload(curve))
    return 0


def _cmd_seahorse_scan(cfg: RunConfig) -> int:
    fmt = _format(cfg, "csv")
    results = list(curves.scan_turn_words(cfg.max_len))
    with _out_stream(cfg.out) as stream:
        if cfg.all_words:
            if fmt == "csv":
                rows = [
                    (w, len(w), r.max_turn_run_ok, r.single_region_ok,
                     r.reflection_ok, r.is_seahorse)
                    for w, r in results
                ]
                header = ("word", "length", "max_run_ok", "single_region_ok",
                          "reflection_ok", "is_seahorse")
                serialize.write_csv(stream, header, rows)
            else:
                serialize.write_json(
                    stream,
                    {
                        "max_len": cfg.max_len,
                        "words": [
                            {
                                "word": w,
                                "max_run_ok": r.max_turn_run_ok,
                                "single_region_ok": r.single_region_ok,
                                "reflection_ok": r.reflection_ok,
                                "is_seahorse": r.is_seahorse,
                            }
                            for w, r in results
                        ],
                    },
                )
        else:
            words = [w for w, r in results if r.is_seahorse]
            if fmt == "csv":
                serialize.write_csv(
                    stream, ("word", "length"), [(w, len(w)) for w in words]
                )
            else:
                serialize.write_json(
                    stream, {"max_len": cfg.max_len, "seahorses": words}
                )
    return 0


def _cmd_dragon(cfg: RunConfig) -> int:
    seed = curves.trace(_seed_turns(cfg))
    grown = curves.iterate_dragon(seed, cfg.generations, max_edges=cfg.max_edges)
    stats = _curve_stats_payload(grown)
    stats["generations"] = cfg.generations
    stats["seed_segments"] = seed.segment_count
    _emit_svg(cfg, serialize.curve_svg(grown, unit=cfg.unit), stats)
    return 0


def _cmd_tessellate(cfg: RunConfig) -> int:
    if cfg.placements is None:
        raise ValueError("placements is required for tessellate")
    motions = _parse_motions(cfg.placements)
    base = curves.trace(_seed_turns(cfg))
    tess = curves.tessellate(base, motions)
    stats = {
        "tiles": len(tess.tiles),
        "unique_edge_count": len(tess.edges),
        "overlap_count": tess.overlap_count,
        "bounded_region_count": curves.bounded_regions_euler(tess.edges),
    }
    _emit_svg(cfg, serialize.tessellation_svg(tess, unit=cfg.unit), stats)
    return 0


def _cmd_dag(cfg: RunConfig) -> int:
    limit = _require(cfg, "limit")
    dag = graphs.build_dag(
        limit,
        include_chain=cfg.chain,
        include_prime_cluster=cfg.cluster,
        include_gap_primes=cfg.gap_primes,
    )
    graphs.verify_acyclic_and_sort(dag)
    with _out_stream(cfg.out) as stream:
        stream.write(serialize.dag_dot(dag))
    return 0


def _cmd_walk(cfg: RunConfig) -> int:
    n = _chain_sites(cfg)
    coins = dynamics.CoinSpec(theta_L=cfg.theta_l, theta_R=cfg.theta_r)
    series = dynamics.run_walk(
        n,
        cfg.steps,
        coins=coins,
        initial_site=cfg.initial_site,
        initial_coin=cfg.initial_coin,
        boundary=cfg.boundary,
    )
    header = ("step",) + tuple(f"site_{i}" for i in range(1, n + 1))
    with _out_stream(cfg.out) as stream:
        serialize.write_csv(
            stream,
            header,
            ((step, *(float(p) for p in row)) for step, row in enumerate(series)),
        )
    return 0


def _build_chain(cfg: RunConfig) -> dynamics.OscillatorChain:
    return dynamics.patterned_chain(
        _chain_sites(cfg),
        g_L=cfg.g_l,
        g_R=cfg.g_r,
        s=cfg.s,
        omega_mode=cfg.omega_mode,
        omega=cfg.omega,
        alpha=cfg.alpha,
        beta=cfg.beta,
    )


def _cmd_modes(cfg: RunConfig) -> int:
    chain = _build_chain(cfg)
    spectrum = dynamics.eigensystem(
        dynamics.build_single_excitation_hamiltonian(chain)
    )
    rows = (
        (j + 1, float(spectrum.eigenvalues[j]), float(spectrum.participation_ratios[j]))
        for j in range(len(spectrum.eigenvalues))
    )
    with _out_stream(cfg.out) as stream:
        serialize.write_csv(
            stream, ("index", "eigenvalue", "participation_ratio"), rows
        )
    return 0


def _cmd_sweep(cfg: RunConfig) -> int:
    chain = _build_chain(cfg)
    points = dynamics.adiabatic_sweep(chain, _parse_s_grid(cfg.s_grid))
    rows = (
        (p.s, p.ground_energy, p.spectral_gap, p.ground_participation_ratio)
        for p in points
    )
    with _out_stream(cfg.out) as stream:
        serialize.write_csv(
            stream,
            ("s", "ground_energy", "spectral_gap", "ground_participation_ratio"),
            rows,
        )
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "count": _cmd_count,
    "primes": _cmd_primes,
    "turns": _cmd_turns,
    "curve": _cmd_curve,
    "seahorse-scan": _cmd_seahorse_scan,
    "dragon": _cmd_dragon,
    "tessellate": _cmd_tessellate,
    "dag": _cmd_dag,
    "walk": _cmd_walk,
    "modes": _cmd_modes,
    "sweep": _cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patterned",
        description="Digit-divisor numbers: sequences, curves, DAGs, dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *specs):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON config file; flags override it")
        p.add_argument("--out", help="output path (default: stdout)")
        for spec in specs:
            spec(p)
        p.set_defaults(func=_COMMANDS[name])
        return p

    def limit(p):
        p.add_argument("--limit", type=int, help="upper bound of the integer range")

    def k_arg(p):
        p.add_argument("--k", type=int, help="number of sequence members to use")

    def fmt(p):
        p.add_argument("--format", choices=("csv", "json"))

    def word(p):
        p.add_argument("--word", help="explicit L/R turn word (overrides --k)")

    def unit(p):
        p.add_argument("--unit", type=float, help="SVG pixels per lattice unit")

    def chain_params(p):
        p.add_argument("--sites", type=int, help="number of chain sites")
        p.add_argument("--limit", type=int,
                       help="size the chain by the qualifying numbers <= limit")
        p.add_argument("--g-l", type=float, help="coupling for L-turn links")
        p.add_argument("--g-r", type=float, help="coupling for R-turn links")
        p.add_argument("--omega-mode", choices=("energy", "constant"))
        p.add_argument("--omega", type=float, help="site frequency in constant mode")
        p.add_argument("--alpha", type=float, help="match-count energy weight")
        p.add_argument("--beta", type=float, help="repeat-turn energy weight")

    add("gen", "profiles of the qualifying numbers", limit, fmt)
    add("count", "count, density, and claim reconciliation", limit)
    add("primes", "qualifying vs gap primes", limit, fmt)
    add("turns", "turn word of the sequence", k_arg, fmt)
    add("curve", "trace the turn word into an SVG curve", k_arg, word, unit)

    scan = add("seahorse-scan", "exhaustive seahorse scan of short turn words", fmt)
    scan.add_argument("--max-len", type=int, help="longest word length to scan")
    scan.add_argument("--all-words", action="store_const", const=True,
                      help="list every word with its condition flags")

    dragon = add("dragon", "iterated curve doubling as SVG", k_arg, word, unit)
    dragon.add_argument("--generations", type=int)
    dragon.add_argument("--max-edges", type=int, help="resource cap on curve size")

    tess = add("tessellate", "rigid-motion copies of a curve as SVG", k_arg, word, unit)
    tess.add_argument(
        "--placements",
        help='JSON list like [{"rotation":90,"reflect":false,"translation":[0,0]}]',
    )

    dag = add("dag", "DOT export of the number DAG", limit)
    dag.add_argument("--chain", action=argparse.BooleanOptionalAction,
                     help="include consecutive-number edges")
    dag.add_argument("--cluster", action=argparse.BooleanOptionalAction,
                     help="include consecutive-prime edges")
    dag.add_argument("--gap-primes", action="store_const", const=True,
                     help="add gap primes as isolated nodes")

    walk = add("walk", "coined-walk position distributions", chain_params)
    walk.add_argument("--steps", type=int)
    walk.add_argument("--theta-l", type=float, help="coin angle for L-turn sites")
    walk.add_argument("--theta-r", type=float, help="coin angle for R-turn sites")
    walk.add_argument("--initial-site", type=int, help="start site, 1-based")
    walk.add_argument("--initial-coin", choices=("L", "R"))
    walk.add_argument("--boundary", choices=("reflecting", "absorbing"))

    modes = add("modes", "chain eigenmodes as CSV", chain_params)
    modes.add_argument("--s", type=float, help="interpolation parameter in [0,1]")

    sweep = add("sweep", "spectral series over an s grid", chain_params)
    sweep.add_argument("--s-grid", help="comma list or start:stop:count")

    return parser


def cli_dispatch(argv) -> int:
    """Parse argv, run one subcommand, and map failures to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:  # argparse handles --help and bad flags
        return int(exc.code or 0)
    try:
        cfg = _resolve_config(args)
        return args.func(cfg)
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
