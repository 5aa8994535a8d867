"""Fixtures for symmetry tests."""

import pytest

from ...game import WlcGame, build_notation


@pytest.fixture
def cm5() -> WlcGame:
    return build_notation("CM(5)")
