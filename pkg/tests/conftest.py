import pytest

from conicgroup import scalar


@pytest.fixture(autouse=True)
def _reset_epsilon():
    before = scalar.get_epsilon()
    yield
    scalar.set_epsilon(before)
