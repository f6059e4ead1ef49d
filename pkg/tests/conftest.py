"""Shared fixtures: the four rings and the expensive cached resolutions."""

from __future__ import annotations

import pytest

from curvlab import build_algebra, cyclic_module, residue_field, resolve


@pytest.fixture(scope="session")
def r1():
    return build_algebra(101, ["x"], ["x^2"])


@pytest.fixture(scope="session")
def r2():
    return build_algebra(101, ["x", "y"], ["x^2", "x*y", "y^2"])


@pytest.fixture(scope="session")
def r3():
    return build_algebra(101, ["a", "b", "c"],
                         ["a^2", "b*c", "c^2", "b^2 - a*c"])


@pytest.fixture(scope="session")
def r4():
    return build_algebra(101, ["x", "y"], ["y^2"])


@pytest.fixture(scope="session")
def res_k3_10(r3):
    """Depth-10 minimal resolution of k over R3 (the expensive one)."""
    return resolve(residue_field(r3), 10)


@pytest.fixture(scope="session")
def res_bc_10(r3):
    return resolve(cyclic_module(r3, ["b", "c"]), 10)


@pytest.fixture(scope="session")
def mod_a(r3):
    return cyclic_module(r3, ["a"])
