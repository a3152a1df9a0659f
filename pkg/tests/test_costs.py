import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edge_mta import costs

import straightline
from conftest import make_server, make_task

REL_TOL = 1e-9

# Frozen oracle values for the worked example (server: alpha=0.01,
# theta=0.01, f=2, B=5, H=10, G=10; task: p=5, D=10; noise 0.01),
# computed with tests/straightline.py.
RATE_5_10_10 = 99.65785006009247
RATE_10_5_5 = 179.31574340092797
TCOMM_D10 = 0.10034332462490533
TCOMM_D20 = 0.20068664924981067
ECOMM_H10 = 1.0034332462490534


def test_cycles_required():
    server = make_server()
    assert costs.cycles_required(server, make_task(D=10.0)) == pytest.approx(
        0.1, rel=REL_TOL
    )
    assert costs.cycles_required(server, make_task(D=20.0)) == pytest.approx(
        0.2, rel=REL_TOL
    )
    assert costs.cycles_required(make_server(theta=1.0), make_task(D=1.0)) == 1.0


def test_compute_energy():
    assert costs.compute_energy(make_server(), make_task()) == pytest.approx(
        0.004, rel=REL_TOL
    )
    one = costs.compute_energy(make_server(alpha=1.0, theta=1.0, f=1.0), make_task(D=1.0))
    assert one == 1.0
    assert costs.compute_energy(
        make_server(f=10.0), make_task(D=20.0)
    ) == pytest.approx(0.2, rel=REL_TOL)


def test_compute_time():
    assert costs.compute_time(make_server(), make_task()) == pytest.approx(
        0.05, rel=REL_TOL
    )
    # cycles == frequency gives unit time
    assert costs.compute_time(make_server(theta=1.0, f=10.0), make_task(D=10.0)) == 1.0
    assert costs.compute_time(make_server(f=10.0), make_task(D=20.0)) == pytest.approx(
        0.02, rel=REL_TOL
    )


def test_transmission_rate():
    assert costs.transmission_rate(make_server(), 0.01) == pytest.approx(
        RATE_5_10_10, rel=REL_TOL
    )
    assert costs.transmission_rate(make_server(), 0.01) == pytest.approx(
        99.658, rel=1e-3
    )
    assert costs.transmission_rate(
        make_server(B=10.0, H=5.0, G=5.0), 0.01
    ) == pytest.approx(RATE_10_5_5, rel=REL_TOL)
    # unit SNR: H*G == noise^2 collapses the log to 1
    assert costs.transmission_rate(make_server(B=1.0, H=0.1, G=0.1), 0.1) == 1.0


def test_comm_time():
    assert costs.comm_time(make_server(), make_task(D=10.0), 0.01) == pytest.approx(
        TCOMM_D10, rel=REL_TOL
    )
    assert costs.comm_time(make_server(), make_task(D=20.0), 0.01) == pytest.approx(
        TCOMM_D20, rel=REL_TOL
    )
    # data size equal to the rate gives unit time
    server = make_server()
    rate = costs.transmission_rate(server, 0.01)
    assert costs.comm_time(server, make_task(D=rate), 0.01) == pytest.approx(
        1.0, rel=REL_TOL
    )


def test_comm_energy():
    assert costs.comm_energy(make_server(), make_task(D=10.0), 0.01) == pytest.approx(
        ECOMM_H10, rel=REL_TOL
    )
    # H=5 server with the same H*G product has the same rate; over D=20 its
    # transfer energy matches the frozen value
    h5 = make_server(H=5.0, G=20.0)
    assert costs.comm_energy(h5, make_task(D=20.0), 0.01) == pytest.approx(
        ECOMM_H10, rel=REL_TOL
    )
    unit = make_server(B=1.0, H=1.0, G=0.01)
    rate = costs.transmission_rate(unit, 0.1)
    assert costs.comm_energy(unit, make_task(D=rate), 0.1) == pytest.approx(
        1.0, rel=REL_TOL
    )


def test_matches_straightline_recomputation():
    server = make_server()
    task = make_task()
    cyc = straightline.cycles(10.0, 0.01)
    assert costs.cycles_required(server, task) == pytest.approx(cyc, rel=REL_TOL)
    assert costs.compute_energy(server, task) == pytest.approx(
        straightline.compute_energy(0.01, cyc, 2.0), rel=REL_TOL
    )
    assert costs.compute_time(server, task) == pytest.approx(
        straightline.compute_time(cyc, 2.0), rel=REL_TOL
    )
    rate = straightline.transmission_rate(5.0, 10.0, 10.0, 0.01)
    assert costs.transmission_rate(server, 0.01) == pytest.approx(rate, rel=REL_TOL)
    assert costs.comm_time(server, task, 0.01) == pytest.approx(
        straightline.comm_time(10.0, rate), rel=REL_TOL
    )
    assert costs.comm_energy(server, task, 0.01) == pytest.approx(
        straightline.comm_energy(10.0, straightline.comm_time(10.0, rate)),
        rel=REL_TOL,
    )


def test_pair_costs_bundles_scalars():
    server, task = make_server(), make_task()
    bundle = costs.pair_costs(server, task, 0.01)
    assert bundle.cycles == costs.cycles_required(server, task)
    assert bundle.e_comp == costs.compute_energy(server, task)
    assert bundle.t_comp == costs.compute_time(server, task)
    assert bundle.rate == costs.transmission_rate(server, 0.01)
    assert bundle.t_comm == costs.comm_time(server, task, 0.01)
    assert bundle.e_comm == costs.comm_energy(server, task, 0.01)
    # structural invariants
    assert bundle.t_comp * server.cpu_frequency == pytest.approx(
        bundle.cycles, rel=1e-9
    )
    assert bundle.e_comm == pytest.approx(server.tx_power * bundle.t_comm, rel=1e-9)


positive = st.floats(min_value=1e-3, max_value=1e6, allow_nan=False)
noises = st.floats(min_value=1e-3, max_value=1.0, allow_nan=False)


@settings(max_examples=80, deadline=None)
@given(
    alpha=positive, theta=positive, f=positive, B=positive,
    H=positive, G=positive, D=positive, delta=noises,
)
def test_monotone_in_data_size(alpha, theta, f, B, H, G, D, delta):
    server = make_server(alpha=alpha, theta=theta, f=f, B=B, H=H, G=G)
    small, large = make_task(D=D), make_task(D=2.0 * D)
    assert costs.cycles_required(server, small) < costs.cycles_required(server, large)
    assert costs.compute_energy(server, small) < costs.compute_energy(server, large)
    assert costs.compute_time(server, small) < costs.compute_time(server, large)
    assert costs.comm_time(server, small, delta) < costs.comm_time(server, large, delta)
    assert costs.comm_energy(server, small, delta) < costs.comm_energy(
        server, large, delta
    )


@settings(max_examples=80, deadline=None)
@given(B=positive, H=positive, G=positive, delta=noises)
def test_rate_monotonicity(B, H, G, delta):
    base = costs.transmission_rate(make_server(B=B, H=H, G=G), delta)
    assert costs.transmission_rate(make_server(B=2 * B, H=H, G=G), delta) > base
    assert costs.transmission_rate(make_server(B=B, H=2 * H, G=G), delta) > base
    assert costs.transmission_rate(make_server(B=B, H=H, G=2 * G), delta) > base
    if delta / 2 >= 1e-3:
        assert costs.transmission_rate(make_server(B=B, H=H, G=G), delta / 2) > base


@settings(max_examples=80, deadline=None)
@given(
    alpha=positive, theta=positive, f=positive, B=positive,
    H=positive, G=positive, D=positive, p=positive, delta=noises,
)
def test_all_outputs_finite_nonnegative(alpha, theta, f, B, H, G, D, p, delta):
    server = make_server(alpha=alpha, theta=theta, f=f, B=B, H=H, G=G)
    task = make_task(p=p, D=D)
    bundle = costs.pair_costs(server, task, delta)
    for value in (
        bundle.cycles, bundle.e_comp, bundle.t_comp,
        bundle.rate, bundle.t_comm, bundle.e_comm,
    ):
        assert math.isfinite(value)
        assert value >= 0.0
    assert bundle.rate > 0.0
