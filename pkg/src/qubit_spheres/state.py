"""Two-qubit pure states, reduced density matrices, concurrence and coherence."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quatmath import ComplexK

NORM_TOL = 1e-9
ZERO_NORM_TOL = 1e-12
RADICAND_TOL = 1e-12

BELL_NAMES = ("phi+", "phi-", "psi+", "psi-")
BASIS_NAMES = ("00", "01", "10", "11")


class NotNormalizable(ValueError):
    """Amplitude vector has (near-)zero norm."""


class NormOutOfTolerance(ValueError):
    """Strict-mode construction with norm farther than NORM_TOL from 1."""


class NegativeRadicand(ValueError):
    """Square-root argument below -1e-12; the density matrix is invalid."""


@dataclass(frozen=True)
class TwoQubitState:
    """Amplitudes of |00>, |01>, |10>, |11>; unit norm, global phase kept.

    Qubit A is the most-significant factor: index = 2*a + b.
    """

    alpha: ComplexK
    beta: ComplexK
    gamma: ComplexK
    delta: ComplexK

    def __post_init__(self):
        if abs(self.norm() - 1.0) > NORM_TOL:
            raise NormOutOfTolerance(
                f"state norm {self.norm()!r} is not within {NORM_TOL} of 1"
            )

    @classmethod
    def from_amplitudes(cls, a: complex, b: complex, g: complex, d: complex,
                        policy: str = "renormalize") -> "TwoQubitState":
        """Build a state, either renormalizing (default) or validating strictly."""
        if policy not in ("renormalize", "strict"):
            raise ValueError(f"unknown normalization policy {policy!r}")
        a, b, g, d = complex(a), complex(b), complex(g), complex(d)
        n = math.sqrt(abs(a) ** 2 + abs(b) ** 2 + abs(g) ** 2 + abs(d) ** 2)
        if n < ZERO_NORM_TOL:
            raise NotNormalizable(f"amplitude norm {n!r} too small to normalize")
        if policy == "strict":
            if abs(n - 1.0) > NORM_TOL:
                raise NormOutOfTolerance(
                    f"strict mode: norm {n!r} not within {NORM_TOL} of 1"
                )
            return cls(a, b, g, d)
        return cls(a / n, b / n, g / n, d / n)

    @classmethod
    def basis(cls, label: str) -> "TwoQubitState":
        if label not in BASIS_NAMES:
            raise ValueError(f"basis label must be one of {BASIS_NAMES}, got {label!r}")
        amps = [0j, 0j, 0j, 0j]
        amps[BASIS_NAMES.index(label)] = 1 + 0j
        return cls(*amps)

    @classmethod
    def bell(cls, name: str) -> "TwoQubitState":
        s = 1 / math.sqrt(2)
        table = {
            "phi+": (s, 0, 0, s),
            "phi-": (s, 0, 0, -s),
            "psi+": (0, s, s, 0),
            "psi-": (0, s, -s, 0),
        }
        if name not in table:
            raise ValueError(f"bell name must be one of {BELL_NAMES}, got {name!r}")
        return cls(*(complex(v) for v in table[name]))

    def amplitudes(self) -> tuple[ComplexK, ComplexK, ComplexK, ComplexK]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta, self.gamma, self.delta], dtype=complex)

    def norm(self) -> float:
        return math.sqrt(abs(self.alpha) ** 2 + abs(self.beta) ** 2
                         + abs(self.gamma) ** 2 + abs(self.delta) ** 2)


@dataclass(frozen=True)
class DensityMatrix:
    """2x2 reduced density matrix of one qubit (Hermitian, trace 1)."""

    rho00: ComplexK
    rho01: ComplexK
    rho10: ComplexK
    rho11: ComplexK

    def as_array(self) -> np.ndarray:
        return np.array([[self.rho00, self.rho01], [self.rho10, self.rho11]],
                        dtype=complex)

    def trace(self) -> float:
        return (self.rho00 + self.rho11).real

    def purity(self) -> float:
        """Tr(rho^2), real for a Hermitian matrix."""
        return (abs(self.rho00) ** 2 + abs(self.rho11) ** 2
                + 2 * abs(self.rho01) ** 2)

    def hermiticity_defect(self) -> float:
        return max(abs(self.rho10 - self.rho01.conjugate()),
                   abs(self.rho00.imag), abs(self.rho11.imag))


def _check_qubit(which: str) -> str:
    if which not in ("A", "B"):
        raise ValueError(f"qubit label must be 'A' or 'B', got {which!r}")
    return which


def reduced_density(s: TwoQubitState, which: str) -> DensityMatrix:
    """Partial trace over the other qubit by direct index summation."""
    _check_qubit(which)
    a, b, g, d = s.amplitudes()
    if which == "A":
        # rho_ab = sum_c psi_{a c} conj(psi_{b c})
        return DensityMatrix(
            a * a.conjugate() + b * b.conjugate(),
            a * g.conjugate() + b * d.conjugate(),
            g * a.conjugate() + d * b.conjugate(),
            g * g.conjugate() + d * d.conjugate(),
        )
    # rho_ab = sum_c psi_{c a} conj(psi_{c b})
    return DensityMatrix(
        a * a.conjugate() + g * g.conjugate(),
        a * b.conjugate() + g * d.conjugate(),
        b * a.conjugate() + d * g.conjugate(),
        b * b.conjugate() + d * d.conjugate(),
    )


def concurrence_det(s: TwoQubitState) -> float:
    """Concurrence of a pure state: 2|alpha*delta - beta*gamma|."""
    return 2.0 * abs(s.alpha * s.delta - s.beta * s.gamma)


def _sqrt_clamped(radicand: float) -> float:
    if radicand < -RADICAND_TOL:
        raise NegativeRadicand(f"radicand {radicand!r} below -{RADICAND_TOL}")
    return math.sqrt(max(radicand, 0.0))


def concurrence_from_rho(rho: DensityMatrix) -> float:
    """Concurrence from a reduced density matrix: sqrt(2*(1 - Tr rho^2))."""
    return _sqrt_clamped(2.0 * (1.0 - rho.purity()))


def coherence_d(rho: DensityMatrix) -> float:
    """Scalar coherence sqrt(2*Tr rho^2 - 1); complementary to concurrence."""
    return _sqrt_clamped(2.0 * rho.purity() - 1.0)


def bloch_vector(rho: DensityMatrix) -> tuple[float, float, float]:
    """Bloch vector (rx, ry, rz) with rx = 2 Re rho10, ry = 2 Im rho10."""
    return (2.0 * rho.rho10.real, 2.0 * rho.rho10.imag,
            (rho.rho00 - rho.rho11).real)


def random_state(seed) -> TwoQubitState:
    """One Haar-uniform state: 8 standard normals, normalized.

    Accepts an int seed or a numpy Generator (for drawing sequences).
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    n = np.linalg.norm(v)
    if n < ZERO_NORM_TOL:
        raise NotNormalizable("degenerate random draw")
    v = v / n
    return TwoQubitState(*(complex(c) for c in v))
