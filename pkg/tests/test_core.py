import pytest
from hypothesis import given
from hypothesis import strategies as st

from pisano_lab.core import (
    InvalidModulusError,
    ResidueCharacter,
    antipodal_sum,
    fib_mod,
    lucas_mod,
    pisano_period,
    residue_character,
)

from oracles import PARENT_PERIOD_10, PERIOD_MOD_8, slow_fib, slow_pisano_length


@pytest.mark.parametrize(
    "n, m, expected",
    [
        (7, 10, 3),
        (0, 10, 0),
        (-4, 10, 7),  # F(-4) = -3
        (1, 10, 1),
        (60, 10, 0),
        (61, 10, 1),
    ],
)
def test_fib_mod_examples(n, m, expected):
    assert fib_mod(n, m) == expected


@pytest.mark.parametrize("n, m, expected", [(0, 10, 2), (1, 10, 1), (4, 10, 7)])
def test_lucas_mod_examples(n, m, expected):
    assert lucas_mod(n, m) == expected


def test_fib_mod_matches_slow_iteration():
    for m in (2, 3, 5, 7, 10, 11, 60, 97):
        for n in range(-100, 101):
            assert fib_mod(n, m) == slow_fib(n) % m, (n, m)


def test_lucas_mod_matches_slow_iteration():
    for n in range(-50, 51):
        expected = (slow_fib(n - 1) + slow_fib(n + 1)) % 10
        assert lucas_mod(n, 10) == expected, n


@pytest.mark.parametrize("bad", [1, 0, -5])
def test_invalid_modulus_rejected(bad):
    with pytest.raises(InvalidModulusError):
        fib_mod(3, bad)
    with pytest.raises(InvalidModulusError):
        lucas_mod(3, bad)
    with pytest.raises(InvalidModulusError):
        pisano_period(bad)


@given(st.integers(-300, 300), st.integers(2, 80))
def test_recurrence_property(n, m):
    assert fib_mod(n + 2, m) == (fib_mod(n + 1, m) + fib_mod(n, m)) % m


@given(st.integers(0, 300), st.integers(2, 80))
def test_negative_index_reflection(n, m):
    sign = 1 if n % 2 == 1 else -1
    assert fib_mod(-n, m) == (sign * fib_mod(n, m)) % m


def test_parity_law():
    for n in range(0, 1001):
        assert (fib_mod(n, 2) == 0) == (n % 3 == 0), n


def test_five_divisibility_law():
    for n in range(0, 1001):
        assert (fib_mod(n, 5) == 0) == (n % 5 == 0), n


def test_index_addition_identity():
    for a in range(-60, 61):
        for b in range(-60, 61):
            expected = (fib_mod(a - 1, 10) * fib_mod(b, 10) + fib_mod(a, 10) * fib_mod(b + 1, 10)) % 10
            assert fib_mod(a + b, 10) == expected, (a, b)


def test_fifteen_step_multiplier():
    for n in range(0, 61):
        for j in range(0, 9):
            assert fib_mod(n + 15 * j, 10) == (pow(7, j, 10) * fib_mod(n, 10)) % 10, (n, j)


def test_pisano_period_of_10():
    result = pisano_period(10)
    assert result.length == 60
    assert result.period == PARENT_PERIOD_10


def test_pisano_period_of_8():
    result = pisano_period(8)
    assert result.length == 12
    assert result.period == PERIOD_MOD_8


def test_pisano_period_of_2():
    assert pisano_period(2).period == (0, 1, 1)


def test_pisano_lengths_match_slow_scan():
    for m in range(2, 21):
        assert pisano_period(m).length == slow_pisano_length(m), m


def test_pisano_period_contents_match_fib_mod():
    for m in range(2, 51):
        result = pisano_period(m)
        assert all(result.period[j] == fib_mod(j, m) for j in range(result.length)), m


def test_pisano_period_is_minimal():
    for m in range(2, 21):
        length = pisano_period(m).length
        for s in range(1, length):
            assert not (fib_mod(s, m) == 0 and fib_mod(s + 1, m) == 1), (m, s)


def test_pisano_period_obeys_recurrence():
    for m in range(2, 31):
        period = pisano_period(m).period
        for j in range(2, len(period)):
            assert period[j] == (period[j - 1] + period[j - 2]) % m, (m, j)


@pytest.mark.parametrize(
    "n, expected",
    [
        (15, ResidueCharacter.ZERO),
        (25, ResidueCharacter.FIVE),
        (7, ResidueCharacter.OTHER),
        (0, ResidueCharacter.ZERO),
        (-5, ResidueCharacter.FIVE),
    ],
)
def test_residue_character_examples(n, expected):
    assert residue_character(n) is expected


def test_residue_character_agrees_with_fib_mod():
    for n in range(-120, 121):
        value = fib_mod(n, 10)
        character = residue_character(n)
        if character is ResidueCharacter.ZERO:
            assert value == 0, n
        elif character is ResidueCharacter.FIVE:
            assert value == 5, n
        else:
            assert value not in (0, 5), n


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 10), (45, 0)])
def test_antipodal_sum_examples(n, expected):
    assert antipodal_sum(n) == expected


def test_antipodal_dichotomy():
    for n in range(0, 60):
        assert antipodal_sum(n) == (0 if n % 15 == 0 else 10), n
