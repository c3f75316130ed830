# conftest.py

"""
Gemeinsame Fixtures der Testsuite.
"""
import pytest

from field import FieldConfig
from groebner import is_groebner


@pytest.fixture
def small_field():
    return FieldConfig(101, tag="small")


@pytest.fixture
def tiny_field():
    return FieldConfig(5, tag="tiny")


@pytest.fixture
def default_field():
    return FieldConfig()


@pytest.fixture
def assert_groebner():
    """Prüft nachträglich, dass eine Basis Gröbner-Basis ist (alle S-Polynome -> 0)."""
    def check(G):
        assert is_groebner(G), f"keine Gröbner-Basis unter {G.order}"
        return G
    return check
