"""Orthogonal-ansatz VQE: iterative eigensolver with self-orthogonalizing
parameterized circuits, simulated on dense statevectors.

Typical use::

    from oavqe import ansatz, driver

    space = ansatz.compact_space(2)
    config = driver.SolverConfig(hamiltonian=h, space=space,
                                 family="compact", n_levels=4)
    result = driver.solve(config)
    result.energies      # one eigenvalue per level
    result.overlaps      # Gram matrix of the prepared states
"""

from . import ansatz, circuit, cli, driver, models, optimize, pauli
from . import statevector
from .ansatz import (ActiveSpace, compact_space, h2_fock_space,
                     reciprocal_orbital_space, make_family)
from .driver import (OptimizerSettings, SolverConfig, SpectrumResult,
                     exact_spectrum, solve, verify_orthogonality)
from .pauli import PauliSum

__all__ = [
    "ActiveSpace", "OptimizerSettings", "PauliSum", "SolverConfig",
    "SpectrumResult", "ansatz", "circuit", "cli", "compact_space", "driver",
    "exact_spectrum", "h2_fock_space", "make_family", "models", "optimize",
    "pauli", "reciprocal_orbital_space", "solve", "statevector",
    "verify_orthogonality",
]

__version__ = "0.1.0"
