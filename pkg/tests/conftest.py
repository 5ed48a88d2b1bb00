import pytest

from skewcodes.fields import FieldEmbedding, FrobeniusAut, get_field
from skewcodes.skewpoly import SkewRing


@pytest.fixture(scope="session")
def F2():
    return get_field("F2")


@pytest.fixture(scope="session")
def F4():
    return get_field("F4")


@pytest.fixture(scope="session")
def F8():
    return get_field("F8")


@pytest.fixture(scope="session")
def F9():
    return get_field("F9")


@pytest.fixture(scope="session")
def F16():
    return get_field("F16")


@pytest.fixture(scope="session")
def F27():
    return get_field("F27")


@pytest.fixture(scope="session")
def F64():
    return get_field("F2_6")


@pytest.fixture(scope="session")
def F4096():
    return get_field("F2_12")


@pytest.fixture(scope="session")
def R2(F2):
    return SkewRing(F2, 1)


@pytest.fixture(scope="session")
def R4(F4):
    """F4[x; sigma], sigma the squaring map."""
    return SkewRing(F4, 1)


@pytest.fixture(scope="session")
def R8(F8):
    return SkewRing(F8, 1)


@pytest.fixture(scope="session")
def R9(F9):
    return SkewRing(F9, 1)


@pytest.fixture(scope="session")
def R16(F16):
    return SkewRing(F16, 1)


@pytest.fixture(scope="session")
def R27(F27):
    return SkewRing(F27, 1)


@pytest.fixture(scope="session")
def R64(F64):
    return SkewRing(F64, 1)


@pytest.fixture(scope="session")
def tower(F64, F4096):
    """The embedding F_2^6 -> F_2^12 used by the designed-distance examples."""
    return FieldEmbedding(F64, F4096)


@pytest.fixture(scope="session")
def aut4(F4):
    return FrobeniusAut(F4, 1)
