"""Shared field contexts; construction builds tables, so cache them."""

import functools

import pytest

from cboomerang.gf import ctx_extension, ctx_prime
from cboomerang.upoly import find_irreducible


@functools.lru_cache(maxsize=None)
def field(p, n=1, modulus=None):
    base = ctx_prime(p)
    if n == 1:
        return base
    if modulus is None:
        modulus = tuple(find_irreducible(base, n).coeffs)
    return ctx_extension(base, modulus)


@pytest.fixture(scope="session")
def F11():
    return field(11)


@pytest.fixture(scope="session")
def F16():
    return field(2, 4, (1, 1, 0, 0, 1))
