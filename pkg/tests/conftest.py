"""Shared fixtures for the test suite."""

import logging

import numpy as np
import pytest

from src.models import TriangleShape

# Configure logging for tests
logging.basicConfig(level=logging.INFO)


@pytest.fixture
def scalene():
    """The (6, 5, 4) triangle: acute, scalene, exact sides."""
    return TriangleShape.from_sides(6, 5, 4)


@pytest.fixture
def equilateral():
    return TriangleShape.from_sides(1, 1, 1)


@pytest.fixture
def right_triangle():
    """(3, 4, 5) with the right angle at C."""
    return TriangleShape.from_sides(3, 4, 5)


@pytest.fixture
def seed():
    return 7


@pytest.fixture
def rng(seed):
    return np.random.default_rng(seed)
