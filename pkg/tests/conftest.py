import pytest

from src.hyperfield import RationalField
from src.parsing import parse_instance
from src.tables import five_element_hyperfield, krasner_hyperfield, sign_hyperfield


@pytest.fixture
def S():
    return sign_hyperfield()


@pytest.fixture
def K():
    return krasner_hyperfield()


@pytest.fixture
def H5():
    return five_element_hyperfield()


@pytest.fixture
def Q():
    return RationalField()


@pytest.fixture
def QxZ():
    return parse_instance('QxZ')


@pytest.fixture
def TR():
    return parse_instance('TR@Q')


