"""Shared fixtures: the benchmark catalog and small ground sets."""

from __future__ import annotations

import pytest

from limattn import fixtures


@pytest.fixture(scope="session")
def c1():
    return fixtures.c1()


@pytest.fixture(scope="session")
def c2():
    return fixtures.c2()


@pytest.fixture(scope="session")
def c3():
    return fixtures.c3()


@pytest.fixture(scope="session")
def c4():
    return fixtures.c4()


@pytest.fixture(scope="session")
def c5():
    return fixtures.c5()


@pytest.fixture(scope="session")
def c6():
    return fixtures.c6()


@pytest.fixture(scope="session")
def c7():
    return fixtures.c7()


@pytest.fixture(scope="session")
def ground3():
    return fixtures.ground_n(3)


@pytest.fixture(scope="session")
def ground4():
    return fixtures.ground_n(4)


@pytest.fixture(scope="session")
def ground5():
    return fixtures.ground_n(5)
