import math

import numpy as np
import pytest

from conftest import entangler_60_70_state
from qubit_spheres.gates import bloch_rotation
from qubit_spheres.hopf import (
    Assignment,
    BaseSphere,
    EntanglementSphere,
    InvalidSphereSet,
    SphereSet,
    base_and_entanglement,
    fiber,
    fiber_versor,
    quaternion_pair,
    reconstruct,
    rho_from_spheres,
    sphere_set,
)
from qubit_spheres.oracles import oracle_concurrence, oracle_reduced_density
from qubit_spheres.quatmath import Quaternion
from qubit_spheres.state import TwoQubitState, bloch_vector, reduced_density
from qubit_spheres.verify import random_product_state, random_su2

R2 = 1 / math.sqrt(2)


def amp_error(s1, s2):
    return max(abs(a - b) for a, b in zip(s1.amplitudes(), s2.amplitudes()))


def test_quaternion_pair_basis():
    q1, q2 = quaternion_pair(TwoQubitState.basis("00"), Assignment.A_BASE)
    assert q1 == Quaternion(1, 0, 0, 0)
    assert q2 == Quaternion(0, 0, 0, 0)


def test_quaternion_pair_bell():
    q1, q2 = quaternion_pair(TwoQubitState.bell("phi+"), Assignment.A_BASE)
    assert q1.components() == pytest.approx((R2, 0, 0, 0))
    assert q2.components() == pytest.approx((0, 0, R2, 0))


def test_quaternion_pair_b_base_recomposition(state_pool):
    # (alpha + gamma*j, beta + delta*j): check the packing by unpacking.
    from qubit_spheres.quatmath import split_complex_pair
    for s in state_pool[:100]:
        q1, q2 = quaternion_pair(s, Assignment.B_BASE)
        a, g = split_complex_pair(q1)
        b, d = split_complex_pair(q2)
        assert (a, b, g, d) == s.amplitudes()
        assert q1.norm_sq() + q2.norm_sq() == pytest.approx(1.0, abs=1e-12)


def test_basis_00_spheres():
    ss = sphere_set(TwoQubitState.basis("00"), Assignment.A_BASE)
    assert ss.base.theta == 0.0
    assert ss.base.phi == 0.0
    assert ss.base.x0 == pytest.approx(1.0)
    assert ss.ent.b == 0.0
    assert ss.ent.chi == 0.0
    assert ss.ent.xi == 0.0
    assert ss.ent.t == Quaternion(0, 0, 0, 1)
    assert ss.ent.c == 0.0
    assert ss.fiber.theta_f == pytest.approx(0.0, abs=1e-12)
    assert ss.fiber.zeta_f == pytest.approx(0.0, abs=1e-12)


def test_bell_phi_plus_spheres():
    ss = sphere_set(TwoQubitState.bell("phi+"), Assignment.A_BASE)
    assert (ss.base.x1, ss.base.b, ss.base.x0) == pytest.approx((0, 1, 0), abs=1e-12)
    assert ss.ent.chi == pytest.approx(math.pi / 2, abs=1e-12)
    assert ss.ent.c == pytest.approx(1.0, abs=1e-12)
    assert ss.ent.x4 == pytest.approx(0.0, abs=1e-12)
    # fiber versor is the identity quaternion
    qf = fiber_versor(ss.fiber)
    assert qf.components() == pytest.approx((1, 0, 0, 0), abs=1e-12)


def test_bell_both_assignments_same_concurrence():
    for name in ("phi+", "phi-", "psi+", "psi-"):
        s = TwoQubitState.bell(name)
        ca = sphere_set(s, Assignment.A_BASE).ent.c
        cb = sphere_set(s, Assignment.B_BASE).ent.c
        assert ca == pytest.approx(1.0, abs=1e-12)
        assert cb == pytest.approx(1.0, abs=1e-12)


def test_entangled_state_base_coordinates():
    ss = sphere_set(entangler_60_70_state(), Assignment.A_BASE)
    assert ss.base.x1 == pytest.approx(0.0, abs=1e-12)
    assert ss.base.b == pytest.approx(-math.sin(math.radians(60)), abs=1e-12)
    assert ss.base.x0 == pytest.approx(0.5, abs=1e-12)
    assert ss.ent.c == pytest.approx(0.496731764892154, abs=1e-12)
    assert ss.ent.x4 == pytest.approx(-0.709406479916222, abs=1e-12)
    assert math.degrees(ss.ent.chi) == pytest.approx(35.0, abs=1e-9)


def test_entangled_state_b_base_concurrence():
    ss = sphere_set(entangler_60_70_state(), Assignment.B_BASE)
    assert ss.ent.c == pytest.approx(0.496731764892154, abs=1e-12)


def test_base_sphere_angles_match_cartesian(sphere_pool):
    sets_a, sets_b = sphere_pool
    for ss in (sets_a[:500] + sets_b[:500]):
        st, ct = math.sin(ss.base.theta), math.cos(ss.base.theta)
        assert ss.base.x1 == pytest.approx(st * math.cos(ss.base.phi), abs=1e-12)
        assert ss.base.b == pytest.approx(st * math.sin(ss.base.phi), abs=1e-12)
        assert ss.base.x0 == pytest.approx(ct, abs=1e-12)
        sc, cc = math.sin(ss.ent.chi), math.cos(ss.ent.chi)
        assert ss.ent.t.x == pytest.approx(sc * math.cos(ss.ent.xi), abs=1e-12)
        assert ss.ent.t.y == pytest.approx(sc * math.sin(ss.ent.xi), abs=1e-12)
        assert ss.ent.t.z == pytest.approx(cc, abs=1e-12)
        assert ss.ent.x2 == pytest.approx(ss.ent.b * sc * math.cos(ss.ent.xi), abs=1e-12)
        assert ss.ent.c == pytest.approx(abs(ss.ent.b) * sc, abs=1e-12)
        assert ss.ent.x4 == pytest.approx(ss.ent.b * cc, abs=1e-12)


def test_fiber_product_state_is_fiber_qubit_bloch():
    rng = np.random.default_rng(11)
    for _ in range(200):
        va = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        vb = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        va /= np.linalg.norm(va)
        vb /= np.linalg.norm(vb)
        s = TwoQubitState(*(complex(c) for c in np.kron(va, vb)))
        ss = sphere_set(s, Assignment.A_BASE)
        # single-qubit Bloch vector of the fiber factor, straight from psi_B
        want = (2 * (vb[0].conjugate() * vb[1]).real,
                2 * (vb[0].conjugate() * vb[1]).imag,
                abs(vb[0]) ** 2 - abs(vb[1]) ** 2)
        assert ss.fiber.bloch == pytest.approx(want, abs=1e-9)
        # base sphere likewise reduces to the base qubit's Bloch vector
        want_a = (2 * (va[0].conjugate() * va[1]).real,
                  2 * (va[0].conjugate() * va[1]).imag,
                  abs(va[0]) ** 2 - abs(va[1]) ** 2)
        got_a = (ss.base.x1, ss.base.b, ss.base.x0)
        assert got_a == pytest.approx(want_a, abs=1e-9)


def test_round_trip_examples():
    for s in (TwoQubitState.basis("00"), TwoQubitState.bell("phi+"),
              entangler_60_70_state()):
        for a in Assignment:
            assert amp_error(reconstruct(sphere_set(s, a)), s) < 1e-12


def test_round_trip_random(state_pool, sphere_pool):
    sets_a, sets_b = sphere_pool
    worst = 0.0
    for s, sa, sb in zip(state_pool[:2000], sets_a[:2000], sets_b[:2000]):
        worst = max(worst, amp_error(reconstruct(sa), s),
                    amp_error(reconstruct(sb), s))
    assert worst < 1e-10


def test_s4_norm_and_b_relation(sphere_pool):
    sets_a, sets_b = sphere_pool
    for ss in (sets_a[:1000] + sets_b[:1000]):
        n = (ss.base.x0 ** 2 + ss.base.x1 ** 2 + ss.ent.x2 ** 2
             + ss.ent.x3 ** 2 + ss.ent.x4 ** 2)
        assert n == pytest.approx(1.0, abs=1e-12)
        assert ss.ent.b ** 2 == pytest.approx(ss.ent.x4 ** 2 + ss.ent.c ** 2,
                                              abs=1e-12)
        assert 0.0 <= ss.ent.chi <= math.pi / 2 + 1e-12


def test_concurrence_matches_oracle(state_pool, sphere_pool):
    sets_a, sets_b = sphere_pool
    for s, sa, sb in zip(state_pool[:1000], sets_a, sets_b):
        want = oracle_concurrence(s)
        assert abs(sa.ent.b) * math.sin(sa.ent.chi) == pytest.approx(want, abs=1e-10)
        assert abs(sb.ent.b) * math.sin(sb.ent.chi) == pytest.approx(want, abs=1e-10)


def test_fiber_versor_is_unit(sphere_pool):
    sets_a, sets_b = sphere_pool
    for ss in (sets_a[:500] + sets_b[:500]):
        assert fiber_versor(ss.fiber).norm() == pytest.approx(1.0, abs=1e-12)


def test_rho_from_spheres_examples():
    rho = rho_from_spheres(sphere_set(TwoQubitState.bell("phi+"), Assignment.A_BASE))
    assert rho.rho00 == pytest.approx(0.5, abs=1e-12)
    assert abs(rho.rho01) < 1e-12
    rho = rho_from_spheres(sphere_set(TwoQubitState.basis("00"), Assignment.A_BASE))
    assert rho.rho00 == pytest.approx(1.0, abs=1e-12)
    rho = rho_from_spheres(sphere_set(entangler_60_70_state(), Assignment.A_BASE))
    assert rho.rho00.real == pytest.approx(0.75, abs=1e-12)
    assert abs(rho.rho01.imag) == pytest.approx(0.709406479916222 / 2, abs=1e-12)


def test_rho_from_spheres_pins_x4_sign(state_pool, sphere_pool):
    # rho10 = (x1 + x4*k)/2 must reproduce the partial trace exactly.
    sets_a, sets_b = sphere_pool
    for s, sa, sb in zip(state_pool[:500], sets_a, sets_b):
        for a, ss in ((Assignment.A_BASE, sa), (Assignment.B_BASE, sb)):
            got = rho_from_spheres(ss).as_array()
            ref = oracle_reduced_density(s, a.base_qubit).as_array()
            assert np.max(np.abs(got - ref)) < 1e-12


def test_bloch_vector_consistent_with_sphere_coords(state_pool, sphere_pool):
    # (rx, ry, rz) of the reduced matrix equals (x1, x4, x0).
    sets_a, _ = sphere_pool
    for s, ss in zip(state_pool[:300], sets_a):
        r = bloch_vector(reduced_density(s, "A"))
        assert r == pytest.approx((ss.base.x1, ss.ent.x4, ss.base.x0), abs=1e-12)


def test_fiber_equivariance_su2():
    rng = np.random.default_rng(23)
    from qubit_spheres.state import random_state
    for _ in range(200):
        s = random_state(rng)
        u = random_su2(rng)
        for a in Assignment:
            before = sphere_set(s, a)
            full = (np.kron(u, np.eye(2)) if a.fiber_qubit == "A"
                    else np.kron(np.eye(2), u))
            s2 = TwoQubitState(*(complex(c) for c in full @ s.vector()))
            after = sphere_set(s2, a)
            assert after.base.x0 == pytest.approx(before.base.x0, abs=1e-12)
            assert after.base.x1 == pytest.approx(before.base.x1, abs=1e-12)
            assert after.base.b == pytest.approx(before.base.b, abs=1e-12)
            assert after.ent.x2 == pytest.approx(before.ent.x2, abs=1e-12)
            assert after.ent.x3 == pytest.approx(before.ent.x3, abs=1e-12)
            assert after.ent.x4 == pytest.approx(before.ent.x4, abs=1e-12)
            want = bloch_rotation(u) @ np.array(before.fiber.bloch)
            assert after.fiber.bloch == pytest.approx(tuple(want), abs=1e-9)


def test_base_y_rotation_equivariance():
    rng = np.random.default_rng(29)
    from qubit_spheres.gates import rotation
    from qubit_spheres.state import random_state
    for _ in range(200):
        s = random_state(rng)
        mu = float(rng.uniform(-math.pi, math.pi))
        u = rotation("y", mu)
        for a in Assignment:
            before = sphere_set(s, a)
            full = (np.kron(u, np.eye(2)) if a.base_qubit == "A"
                    else np.kron(np.eye(2), u))
            s2 = TwoQubitState(*(complex(c) for c in full @ s.vector()))
            after = sphere_set(s2, a)
            for name in ("b", "x2", "x3", "x4", "chi", "c"):
                assert getattr(after.ent, name) == pytest.approx(
                    getattr(before.ent, name), abs=1e-12)
            x1w = before.base.x0 * math.sin(mu) + before.base.x1 * math.cos(mu)
            x0w = before.base.x0 * math.cos(mu) - before.base.x1 * math.sin(mu)
            assert after.base.x1 == pytest.approx(x1w, abs=1e-10)
            assert after.base.x0 == pytest.approx(x0w, abs=1e-10)


def test_separability_conditions():
    rng = np.random.default_rng(31)
    for _ in range(300):
        s = random_product_state(rng)
        for a in Assignment:
            ss = sphere_set(s, a)
            assert ss.ent.c <= 1e-10
            assert ss.ent.chi <= 1e-8 or abs(ss.ent.b) <= 1e-10


def test_reconstruct_rejects_invalid_set():
    ss = sphere_set(TwoQubitState.bell("phi+"), Assignment.A_BASE)
    broken = SphereSet(
        assignment=ss.assignment,
        base=BaseSphere(theta=ss.base.theta, phi=ss.base.phi,
                        x1=ss.base.x1 + 1e-3, b=ss.base.b, x0=ss.base.x0),
        ent=ss.ent,
        fiber=ss.fiber,
    )
    with pytest.raises(InvalidSphereSet):
        reconstruct(broken)


def test_reconstruct_rejects_southern_chi():
    ss = sphere_set(TwoQubitState.bell("phi+"), Assignment.A_BASE)
    t = ss.ent.t
    broken = SphereSet(
        assignment=ss.assignment,
        base=ss.base,
        ent=EntanglementSphere(chi=math.pi / 2 + 0.1, xi=ss.ent.xi, b=ss.ent.b,
                               t=t, c=ss.ent.c, x2=ss.ent.x2, x3=ss.ent.x3,
                               x4=ss.ent.x4),
        fiber=ss.fiber,
    )
    with pytest.raises(InvalidSphereSet):
        reconstruct(broken)


def test_component_functions_compose():
    s = entangler_60_70_state()
    base, ent = base_and_entanglement(s, Assignment.A_BASE)
    fib = fiber(s, Assignment.A_BASE, base, ent)
    ss = sphere_set(s, Assignment.A_BASE)
    assert ss.base == base
    assert ss.ent == ent
    assert ss.fiber == fib
