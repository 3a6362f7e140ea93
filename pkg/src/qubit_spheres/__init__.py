"""Three-sphere geometric toolkit for two-qubit pure states."""

from .gates import Circuit, Gate, TrajectoryStep, apply, expand, parse_circuit, rotation, run
from .hopf import (
    Assignment,
    BaseSphere,
    EntanglementSphere,
    FiberSphere,
    SphereSet,
    reconstruct,
    rho_from_spheres,
    sphere_set,
)
from .quatmath import ComplexK, Quaternion, embed, exp_pure, split_complex_pair
from .state import (
    DensityMatrix,
    TwoQubitState,
    bloch_vector,
    coherence_d,
    concurrence_det,
    concurrence_from_rho,
    random_state,
    reduced_density,
)
from .verify import VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BaseSphere",
    "Circuit",
    "ComplexK",
    "DensityMatrix",
    "EntanglementSphere",
    "FiberSphere",
    "Gate",
    "Quaternion",
    "SphereSet",
    "TrajectoryStep",
    "TwoQubitState",
    "VerificationReport",
    "apply",
    "bloch_vector",
    "coherence_d",
    "concurrence_det",
    "concurrence_from_rho",
    "embed",
    "expand",
    "exp_pure",
    "parse_circuit",
    "random_state",
    "reconstruct",
    "reduced_density",
    "rho_from_spheres",
    "rotation",
    "run",
    "run_suite",
    "sphere_set",
    "split_complex_pair",
]
