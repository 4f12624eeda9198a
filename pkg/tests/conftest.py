from pathlib import Path

import pytest

from xel import parse_xel

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
SAMPLE_ORDER = FIXTURES / "sample-order.xel"
BROKEN_REF = FIXTURES / "broken-ref.xel"


@pytest.fixture(scope="session")
def sample_bytes() -> bytes:
    return SAMPLE_ORDER.read_bytes()


@pytest.fixture(scope="session")
def sample_log(sample_bytes):
    return parse_xel(sample_bytes)
