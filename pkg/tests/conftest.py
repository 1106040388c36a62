from fractions import Fraction

import pytest

from servicecap import HybridSpec, SystemConfig, make_hybrid, make_mds_systematic, make_replication, make_simplex


@pytest.fixture(scope="session")
def mds42():
    return SystemConfig.build(make_mds_systematic(4, 2), Fraction(1))


@pytest.fixture(scope="session")
def mds63():
    return SystemConfig.build(make_mds_systematic(6, 3), Fraction(1))


@pytest.fixture(scope="session")
def mds62():
    return SystemConfig.build(make_mds_systematic(6, 2), Fraction(1))


@pytest.fixture(scope="session")
def mds53():
    return SystemConfig.build(make_mds_systematic(5, 3), Fraction(1))


@pytest.fixture(scope="session")
def rep42():
    return SystemConfig.build(make_replication(4, [2, 2]), Fraction(1))


@pytest.fixture(scope="session")
def hyb211():
    return SystemConfig.build(make_hybrid(HybridSpec(2, 1, 1)), Fraction(1))


@pytest.fixture(scope="session")
def simplex2():
    return SystemConfig.build(make_simplex(2), Fraction(1))


@pytest.fixture(scope="session")
def simplex3():
    return SystemConfig.build(make_simplex(3), Fraction(1))


@pytest.fixture(scope="session")
def simplex4():
    return SystemConfig.build(make_simplex(4), Fraction(1))
