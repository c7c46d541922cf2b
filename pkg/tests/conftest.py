import pytest

from dolrep import make_system


@pytest.fixture
def system_g():
    return make_system({"0": "012", "1": "2", "2": "1"}, "0")


@pytest.fixture
def system_h():
    return make_system({"0": "0123", "1": "2", "2": "1", "3": "123"}, "0")


@pytest.fixture
def thue_morse():
    return make_system({"0": "01", "1": "10"}, "0")


@pytest.fixture
def fibonacci():
    return make_system({"0": "01", "1": "0"}, "0")


@pytest.fixture
def doubling():
    return make_system({"x": "xx"}, "x")


@pytest.fixture
def duplicate_pair():
    return make_system({"a": "ab", "b": "ab"}, "a")


@pytest.fixture
def example1_f():
    # Non-injective 4-letter morphism with a 3-letter injective simplification.
    return make_system({"a": "aca", "b": "badc", "c": "acab", "d": "adc"}, "a")


@pytest.fixture
def example1_g():
    return make_system({"x": "xxyx", "y": "yz", "z": "xzxy"}, "x")
