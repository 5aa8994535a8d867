"""Fixtures for protocol tests."""

import pytest

from ...game import WlcGame, build_notation
from ..spec import ProtocolSpec


@pytest.fixture
def cm5() -> WlcGame:
    return build_notation("CM(5)")


@pytest.fixture
def wm() -> ProtocolSpec:
    return ProtocolSpec.wm()


@pytest.fixture
def la() -> ProtocolSpec:
    return ProtocolSpec.la()
