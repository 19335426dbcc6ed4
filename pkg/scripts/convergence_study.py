"""Grid convergence of the Numerov oracle.

Solves a few levels on the automatic grid and on successively doubled grids
and prints the energy change per doubling. Fourth-order convergence shows up
as a ratio of about 16 between successive changes.

    python3 scripts/convergence_study.py
"""
import math

from vhp import QuantumNumbers, RadialGrid, SolverConfig, hellmann, solve_bound, solve_level, yukawa
from vhp.oracle import default_bracket
from vhp.potentials import PotentialParams

CASES = [
    ("hydrogen 1s", PotentialParams(c=1, mu=1), QuantumNumbers(0, 0), -0.5),
    ("hydrogen 2p", PotentialParams(c=1, mu=1), QuantumNumbers(0, 1), -0.125),
    ("Hellmann 2s alpha=0.01", hellmann(2, -1, 0.01), QuantumNumbers(1, 0), None),
    ("Yukawa 3d g=0.02", yukawa(math.sqrt(2), g=0.02), QuantumNumbers(0, 2), None),
]


def study(params, qn, doublings=3):
    base = solve_level(params, qn)
    # start coarse so the change per doubling is well above round-off
    grid = RadialGrid(base.grid.r_min, base.grid.r_max, max(1000, base.grid.num_points // 8))
    cfg = SolverConfig(*default_bracket(params, qn.l, "full", grid))
    energies = []
    for _ in range(doublings + 1):
        energies.append((grid.num_points, solve_bound(params, qn, "full", grid, cfg).energy))
        grid = grid.doubled()
    return energies


def main():
    for name, params, qn, exact in CASES:
        print(name)
        energies = study(params, qn)
        prev_change = None
        for i, (points, e) in enumerate(energies):
            line = f"    N={points:7d}  E={e:.12f}"
            if exact is not None:
                line += f"  err={abs(e - exact):.2e}"
            if i:
                change = abs(e - energies[i - 1][1])
                line += f"  change={change:.2e}"
                if prev_change:
                    line += f"  ratio={prev_change / change:.1f}"
                prev_change = change
            print(line)


if __name__ == "__main__":
    main()
