import math
from pathlib import Path

import numpy as np
import pytest

from qubit_spheres.hopf import Assignment, sphere_set
from qubit_spheres.state import TwoQubitState, random_state

REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"
CIRCUIT_DIR = REPO_ROOT / "circuits"

POOL_SEED = 20240817
POOL_SIZE = 10_000


def entangler_60_70_state() -> TwoQubitState:
    """State after rx A 60 ; cry A B 70 from |00>, written out by hand."""
    d = math.pi / 180
    return TwoQubitState(
        complex(math.cos(30 * d)),
        0j,
        complex(0.0, -math.sin(30 * d) * math.cos(35 * d)),
        complex(0.0, -math.sin(30 * d) * math.sin(35 * d)),
    )


@pytest.fixture(scope="session")
def state_pool():
    rng = np.random.default_rng(POOL_SEED)
    return [random_state(rng) for _ in range(POOL_SIZE)]


@pytest.fixture(scope="session")
def sphere_pool(state_pool):
    """Sphere sets for the whole pool, both assignments (computed once)."""
    sets_a = [sphere_set(s, Assignment.A_BASE) for s in state_pool]
    sets_b = [sphere_set(s, Assignment.B_BASE) for s in state_pool]
    return sets_a, sets_b
