"""
Shared fixtures: small rings, hand-checked modules and the packaged examples
"""
import pytest

from cli.corpus import load_example
from exactalg.ideals import Ideal
from exactalg.rings import PolyRing
from modules.quotient import QuotientModule
from parameters.system import ParameterSystem


@pytest.fixture(scope="session")
def R2():
    return PolyRing(["x", "y"])


@pytest.fixture(scope="session")
def R3():
    return PolyRing(["x", "y", "z"])


@pytest.fixture(scope="session")
def R4():
    return PolyRing(["x", "y", "z", "w"])


@pytest.fixture(scope="session")
def embedded_point(R2):
    """R/(x^2, xy): a line with an embedded point, H^0 of length 1"""
    return QuotientModule(R2, [Ideal.parse(R2, ["x^2", "x*y"])])


@pytest.fixture(scope="session")
def y_param(R2):
    return ParameterSystem.parse(R2, ["y"])


@pytest.fixture(scope="session")
def two_planes(R4):
    """R/((x,y) ∩ (z,w)): two planes meeting in a point, H^1 of length 1"""
    return QuotientModule(R4, [Ideal.parse(R4, ["x*z", "x*w", "y*z", "y*w"])])


@pytest.fixture(scope="session")
def node(R2):
    """R/(xy): Cohen-Macaulay of dimension 1"""
    return QuotientModule(R2, [Ideal.parse(R2, ["x*y"])])


@pytest.fixture(scope="session")
def crossed_planes():
    return load_example("4.7")


@pytest.fixture(scope="session")
def direct_sum():
    return load_example("5.5")


@pytest.fixture(scope="session")
def flat_ifm():
    return load_example("5.6")
