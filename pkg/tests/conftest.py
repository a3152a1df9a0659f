import sys
from pathlib import Path

import pytest

from edge_mta.domain import Instance, ServerSpec, TaskSpec

sys.path.insert(0, str(Path(__file__).parent))


def make_server(
    id=0, alpha=0.01, theta=0.01, f=2.0, mu=1.0, B=5.0, H=10.0, G=10.0
) -> ServerSpec:
    return ServerSpec(
        id=id,
        cpu_arch_coeff=alpha,
        cycles_per_sample=theta,
        cpu_frequency=f,
        capacity=mu,
        bandwidth=B,
        tx_power=H,
        channel_gain=G,
    )


def make_task(id=0, p=5.0, D=10.0, tau=50.0, origin=0) -> TaskSpec:
    return TaskSpec(id=id, unit_price=p, data_size=D, deadline=tau, origin_server=origin)


@pytest.fixture
def single_pair() -> Instance:
    """One server, one own task; the worked example used across modules.

    cycles = 0.1, compute energy = 0.004, compute time = 0.05,
    rate = 99.6578..., comm time = 0.10034..., comm energy = 1.00343...
    """
    return Instance(
        servers=(make_server(),),
        tasks=(make_task(),),
        intermediary_rate=0.1,
        noise=0.01,
    )


@pytest.fixture
def two_servers() -> Instance:
    """Two servers, two tasks, both submitted through server 0.

    Server 1 has the same transmission rate as server 0 (H*G matches) but
    half the transmit power; both have the worked-example compute profile.
    """
    return Instance(
        servers=(
            make_server(id=0),
            make_server(id=1, H=5.0, G=20.0),
        ),
        tasks=(
            make_task(id=0),
            make_task(id=1, D=20.0),
        ),
        intermediary_rate=0.1,
        noise=0.01,
    )
