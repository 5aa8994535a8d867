"""Fixtures for census tests."""

import pytest

from ..census import CensusReport, census_report


@pytest.fixture(scope="module")
def three_choice() -> CensusReport:
    return census_report(3)


@pytest.fixture(scope="module")
def five_choice() -> CensusReport:
    return census_report(5)
