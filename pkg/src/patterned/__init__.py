"""Digit-divisor numbers: classification, curves, DAGs, and chain dynamics."""

from .core import (
    DensityReport,
    DigitDivisorProfile,
    count_and_density,
    is_patterned,
    is_patterned_prime,
    is_patterned_two_digit,
    patterned_sequence,
    profile,
    site_energy,
    turn,
    turn_sequence,
)
from .curves import (
    CurveStats,
    LatticeCurve,
    RigidMotion,
    SeahorseReport,
    Tessellation,
    apply_motion,
    curve_stats,
    is_seahorse,
    iterate_dragon,
    region_count_flood,
    tessellate,
    trace,
)
from .dynamics import (
    CoinSpec,
    OscillatorChain,
    Spectrum,
    WalkState,
    adiabatic_sweep,
    build_single_excitation_hamiltonian,
    deterministic_walk,
    eigensystem,
    energy_landscape,
    participation_ratio,
    run_walk,
    unitary_walk_step,
)
from .graphs import (
    NodeLabel,
    PatternedDag,
    build_dag,
    gap_statistics,
    verify_acyclic_and_sort,
)

__version__ = "0.1.0"

__all__ = [
    "CoinSpec",
    "CurveStats",
    "DensityReport",
    "DigitDivisorProfile",
    "LatticeCurve",
    "NodeLabel",
    "OscillatorChain",
    "PatternedDag",
    "RigidMotion",
    "SeahorseReport",
    "Spectrum",
    "Tessellation",
    "WalkState",
    "adiabatic_sweep",
    "apply_motion",
    "build_dag",
    "build_single_excitation_hamiltonian",
    "count_and_density",
    "curve_stats",
    "deterministic_walk",
    "eigensystem",
    "energy_landscape",
    "gap_statistics",
    "is_patterned",
    "is_patterned_prime",
    "is_patterned_two_digit",
    "is_seahorse",
    "iterate_dragon",
    "participation_ratio",
    "patterned_sequence",
    "profile",
    "region_count_flood",
    "run_walk",
    "site_energy",
    "tessellate",
    "trace",
    "turn",
    "turn_sequence",
    "unitary_walk_step",
    "verify_acyclic_and_sort",
]
