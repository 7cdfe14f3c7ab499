"""Character groups: construction, evaluation, orders, conductors."""

from math import gcd

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from smoothlab import (
    character_group,
    conductor_of,
    evaluate,
    order_of,
    principal_character,
)
from smoothlab.errors import ModulusTooLargeError


def _phi(q):
    return sum(1 for a in range(q) if gcd(a, q) == 1) if q > 1 else 1


@pytest.mark.parametrize("q", [1, 2, 3, 4, 5, 8, 9, 12, 16, 24, 30, 45, 128])
def test_group_size_and_principal_first(q):
    chars = character_group(q)
    assert len(chars) == _phi(q)
    assert chars[0].is_principal
    assert len({c.exponents for c in chars}) == len(chars)


def test_order_multisets():
    assert sorted(c.order for c in character_group(4)) == [1, 2]
    assert sorted(c.order for c in character_group(5)) == [1, 2, 4, 4]
    assert all(c.order in (1, 2) for c in character_group(8))


@pytest.mark.parametrize("q", [3, 4, 5, 8, 12, 15])
def test_closed_under_multiplication_and_conjugation(q):
    chars = character_group(q)
    index = {c.exponents for c in chars}
    for c1 in chars:
        assert c1.conjugate().exponents in index
        for c2 in chars:
            assert (c1 * c2).exponents in index


def test_evaluate_examples():
    chi4 = character_group(4)[1]
    assert evaluate(chi4, 3) == -1  # exact, not approximate
    assert evaluate(chi4, 2) == 0
    chi_i = next(c for c in character_group(5) if abs(evaluate(c, 2) - 1j) < 1e-12)
    assert evaluate(chi_i, 4) == -1


def test_zero_off_support():
    for q in (6, 12, 45):
        for chi in character_group(q):
            for n in range(2 * q):
                if gcd(n, q) != 1:
                    assert evaluate(chi, n) == 0


@given(
    q=st.integers(min_value=1, max_value=40),
    m=st.integers(min_value=1, max_value=200),
    n=st.integers(min_value=1, max_value=200),
    pick=st.integers(min_value=0, max_value=10**6),
)
def test_total_multiplicativity(q, m, n, pick):
    chars = character_group(q)
    chi = chars[pick % len(chars)]
    assert evaluate(chi, m * n) == pytest.approx(evaluate(chi, m) * evaluate(chi, n), abs=1e-12)


@given(
    q=st.integers(min_value=1, max_value=60),
    n=st.integers(min_value=1, max_value=500),
)
def test_unit_modulus_on_units(q, n):
    if gcd(n, q) != 1:
        return
    for chi in character_group(q):
        assert abs(abs(evaluate(chi, n)) - 1.0) < 1e-12


@pytest.mark.parametrize("q", [1, 2, 3, 4, 5, 8, 9, 12, 16, 21, 40, 60, 89, 200])
def test_orthogonality_both_ways(q):
    chars = character_group(q)
    phi = len(chars)
    table = np.array([c.value_table() for c in chars])  # phi x q
    gram = table @ table.conj().T
    assert np.max(np.abs(gram - phi * np.eye(phi))) < 1e-10
    # row orthogonality over residue pairs
    cross = table.conj().T @ table  # q x q
    expected = np.zeros((q, q))
    for a in range(q):
        if q == 1 or gcd(a, q) == 1:
            expected[a, a] = phi
    assert np.max(np.abs(cross - expected)) < 1e-10


@pytest.mark.parametrize("q", [5, 8, 12, 36])
def test_power_to_order_is_principal(q):
    phi = len(character_group(q))
    for chi in character_group(q):
        assert phi % chi.order == 0
        acc = principal_character(q)
        for _ in range(chi.order):
            acc = acc * chi
        assert acc.is_principal


def test_order_of_examples():
    assert order_of(principal_character(7)) == 1
    quad = next(c for c in character_group(7) if not c.is_principal and c.order == 2)
    assert all(evaluate(quad, n).imag == pytest.approx(0.0, abs=1e-12) for n in range(1, 7))
    assert max(order_of(c) for c in character_group(5)) == 4


def _conductor_oracle(chi) -> int:
    """Smallest f | q with chi trivial on the kernel of reduction mod f."""
    q = chi.modulus
    for f in sorted(d for d in range(1, q + 1) if q % d == 0):
        if all(
            evaluate(chi, n) == pytest.approx(1.0, abs=1e-12)
            for n in range(1, q + 1)
            if n % f == 1 % f and gcd(n, q) == 1
        ):
            return f
    return q


@pytest.mark.parametrize("q", [1, 2, 3, 4, 5, 6, 8, 9, 12, 16, 24, 36, 40])
def test_conductor_matches_induction_oracle(q):
    for chi in character_group(q):
        f = conductor_of(chi)
        assert q % f == 0
        assert f == _conductor_oracle(chi)


def test_conductor_examples():
    assert conductor_of(principal_character(12)) == 1
    assert conductor_of(character_group(4)[1]) == 4  # primitive
    mod12 = character_group(12)
    assert sorted(conductor_of(c) for c in mod12) == [1, 3, 4, 12]


def test_modulus_too_large():
    with pytest.raises(ModulusTooLargeError):
        character_group(10**6 + 1)
