"""Fixtures for game-core tests."""

import pytest

from ..builders import build_notation
from ..models import Stage, WlcGame


@pytest.fixture
def cm2() -> WlcGame:
    return build_notation("CM(2)")


@pytest.fixture
def cm3() -> WlcGame:
    return build_notation("CM(3)")


@pytest.fixture
def cm5_stage() -> Stage:
    return Stage.initial(build_notation("CM(5)"))
