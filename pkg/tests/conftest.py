import pytest

from expspec import mesh_s4


@pytest.fixture(scope="session")
def mesh9():
    """Coarse mesh: 562 points, enough for exact-identity sweeps."""
    return mesh_s4(9, 8)


@pytest.fixture(scope="session")
def mesh33():
    """Mid-resolution mesh: covering radius small enough to certify the antipodal gap."""
    return mesh_s4(33, 32)
