"""Bound states of the Varshni-Hellmann potential family."""
from .ansatz import (
    AnsatzParams,
    EnergyLevel,
    QuantumNumbers,
    RadialFunction,
    ansatz_energy,
    ansatz_wavefunction,
    match_coefficients,
)
from .errors import (
    ConvergenceFailure,
    DomainError,
    NetCoulombVanishes,
    NoBoundState,
    UnsupportedExcitedWavefunction,
)
from .oracle import OracleResult, RadialGrid, SolverConfig, auto_grid, bracket_scan, solve_bound, solve_level
from .potentials import (
    DerivedConstants,
    PotentialParams,
    coulomb,
    effective_potential,
    eval_expanded,
    eval_full,
    hellmann,
    special_case,
    varshni,
    yukawa,
)

__version__ = "0.1.0"
