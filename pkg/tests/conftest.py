import pytest
from hypothesis import HealthCheck, settings

from cohlength.coeffalg import CoeffAlgebra
from cohlength.exactlin import Field

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def F5():
    return Field.prime(5)


@pytest.fixture(scope="session")
def A(F5):
    return CoeffAlgebra.dual_numbers(F5)


@pytest.fixture(scope="session")
def Px(F5):
    return CoeffAlgebra.poly_ring(F5)
