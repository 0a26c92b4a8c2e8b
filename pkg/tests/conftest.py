import pytest
from hypothesis import HealthCheck, settings

from kgap.core.generators import cycle_graph, petersen_graph, prism_graph
from kgap.core.graph import to_graph6

settings.register_profile(
    "kgap",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("kgap")


@pytest.fixture
def prism10():
    return prism_graph(10)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def c7():
    return cycle_graph(7)


@pytest.fixture
def prism10_g6(prism10):
    return to_graph6(prism10)
