"""Pytest configuration and fixtures."""
import os

# Set test env BEFORE any imports that use config
os.environ["FRACSPEC_THREADS"] = "2"
os.environ["FRACSPEC_LOG_LEVEL"] = "WARNING"
os.environ["FRACSPEC_TEST_POINTS"] = "21"
os.environ["FRACSPEC_TEST_TIMES"] = "11"

import pytest
from httpx import ASGITransport, AsyncClient

from fracspec.models import BoxDomain, OrderFunction
from web.api.main import app


@pytest.fixture
def anyio_backend():
    return "asyncio"


@pytest.fixture
async def client():
    """Async HTTP client for testing the API."""
    async with AsyncClient(
        transport=ASGITransport(app=app),
        base_url="http://test",
    ) as ac:
        yield ac


@pytest.fixture
def unit_interval():
    return BoxDomain((1.0,))


@pytest.fixture
def unit_square():
    return BoxDomain((1.0, 1.0))


@pytest.fixture
def half_order():
    """Constant α = 0.5 on [0, 1]."""
    return OrderFunction.constant(0.5, 1.0)
