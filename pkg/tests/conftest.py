import pytest

from arcsupport import FuzzConfig, build_arc, build_profile, melkman_hull, random_simple_arc

# shared deterministic fuzz pool; generated once per session
POOL_CONFIG = FuzzConfig(trials=1000, seed=42, vertex_range=(4, 12))


@pytest.fixture
def e1():
    return build_arc([(0, 0), (1, 0), (1, 1)])


@pytest.fixture
def e2():
    return build_arc([(0, 0), (3, 0), (3, 1), (2, 1)])


@pytest.fixture
def e1_profile(e1):
    return build_profile(melkman_hull(e1))


@pytest.fixture
def e2_profile(e2):
    return build_profile(melkman_hull(e2))


@pytest.fixture(scope="session")
def fuzz_pool():
    arcs = [random_simple_arc(POOL_CONFIG, i) for i in range(POOL_CONFIG.trials)]
    profiles = [build_profile(melkman_hull(arc)) for arc in arcs]
    return list(zip(arcs, profiles))
