import pytest

from fuskit.families import (
    fib_extension,
    fibonacci,
    near_group,
    psu2_6,
    tambara_yamagami,
)
from fuskit.groups import cyclic, direct_product, symmetric


@pytest.fixture(scope="session")
def fib():
    return fibonacci()


@pytest.fixture(scope="session")
def psu():
    return psu2_6()


@pytest.fixture(scope="session")
def ty2():
    return tambara_yamagami(cyclic(2), name="ty_z2")


@pytest.fixture(scope="session")
def ng_z2_1():
    return near_group(cyclic(2), 1)


@pytest.fixture(scope="session")
def fib_ext_z3():
    return fib_extension(cyclic(3))


@pytest.fixture(scope="session")
def fib_ext_s3():
    return fib_extension(symmetric(3))


@pytest.fixture(scope="session")
def klein():
    return direct_product(cyclic(2), cyclic(2))
