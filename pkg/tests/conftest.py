"""Pytest configuration and fixtures"""

import random

import pytest

from geolift.cartan import build_cartan
from geolift.models import RunConfig
from geolift.oracle import generate_crystal


@pytest.fixture
def a1():
    return build_cartan("A", 1)


@pytest.fixture
def a2():
    return build_cartan("A", 2)


@pytest.fixture
def a3():
    return build_cartan("A", 3)


@pytest.fixture
def b2():
    return build_cartan("B", 2)


@pytest.fixture
def g2():
    return build_cartan("G", 2)


@pytest.fixture
def rng():
    """Seeded RNG so sampled points are reproducible"""
    return random.Random(42)


@pytest.fixture
def crystal_a2_omega1():
    """B(varpi_1) in A2: the three one-box tableaux"""
    return generate_crystal(2, (1, 0))


@pytest.fixture
def crystal_a2_adjoint():
    """B(varpi_1 + varpi_2) in A2, eight elements"""
    return generate_crystal(2, (1, 1))


@pytest.fixture
def small_config(monkeypatch):
    """Desk-scale RunConfig independent of the caller's environment"""
    for name in ("GEOLIFT_SEED", "GEOLIFT_SAMPLES", "GEOLIFT_BOX", "GEOLIFT_CRYSTAL_BOUND"):
        monkeypatch.delenv(name, raising=False)
    return RunConfig.from_env(samples=5, box=3, max_dim=15)
