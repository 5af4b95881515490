"""Numerical toolkit for quantum systems with a Lie dynamical algebra.

Builds finite matrix representations of the catalogued algebras (truncated
oscillator, spin, three-mode bosonic su(3)), constructs generalized coherent
states, propagates Schrodinger dynamics, measures quantumness (generator
variance sums and dispersion products), and integrates the corresponding
classical Hamiltonian models on coherent-state charts with chaos diagnostics.
"""

from .errors import (
    ConfigError,
    DimensionCapError,
    DomainError,
    LeakageError,
    LiesimError,
    NumericalError,
)
from .algebra import (
    AlgebraRep,
    SdfReport,
    algebra_closure_residual,
    build_h4_rep,
    build_su2_rep,
    build_su3_symmetric_rep,
    commutator_residual,
    direct_sum_rep,
    interior_mask,
    load_rep,
    save_rep,
    sdf_count,
)
from .states import (
    CoherentPoint,
    QuantumState,
    coherent_oscillator,
    coherent_spin,
    coherent_state,
    coherent_su3,
    family_minimum,
    haar_random_states,
    quantumness_dispersion_product,
    quantumness_sum,
    spin_expectations,
)
from .qdyn import (
    HamiltonianSpec,
    QuantumnessTrace,
    build_hamiltonian,
    evolve,
    make_rep,
    quantumness_trace,
    schrodinger_as_hamiltonian_flow,
    sdf_casimirs,
    spectral_ratios,
    symmetry_residual,
)
from .cmodel import (
    ClassicalHamiltonian,
    build_henon_heiles,
    build_lipkin_model,
    build_nn_model,
    build_oscillator_model,
    build_spin_pair_model,
    coherent_expectation_oracle,
    expectation_correction,
    generic_expectation_model,
    oscillator_correction_report,
    poisson_bracket,
)
from .orbits import (
    ChaosReport,
    OrbitRecord,
    ScreenSummary,
    escape_energy,
    integrability_screen,
    integrate,
    lyapunov_grid,
    lyapunov_max,
    oscillator_shell_grid,
    poincare_section,
    spin_band_grid,
)

__version__ = "0.1.0"
