from __future__ import annotations

from pathlib import Path

import pytest

from singquandles import AlexanderParams, build_tables


@pytest.fixture(scope="session")
def alex543():
    return build_tables(AlexanderParams(5, 4, 3))


@pytest.fixture(scope="session")
def alex1094():
    return build_tables(AlexanderParams(10, 9, 4))


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "data"
