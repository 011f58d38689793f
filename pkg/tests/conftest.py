import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture
def fixtures():
    return FIXTURES


def load_fixture(name):
    from streampace import parse_spec
    return parse_spec((FIXTURES / name).read_text())
