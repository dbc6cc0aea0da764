import math

import numpy
import pytest

from bicomplex_paley_wiener.algebra import (
    E,
    E_DAGGER,
    ONE,
    ZERO,
    Bicomplex,
    Comparison,
    Hyperbolic,
    J,
    conjugate_star,
    exp_bc,
    from_idempotent,
    hyperbolic_norm,
    idempotent_arrays,
    invert,
    leq_d,
    mul,
    to_idempotent,
)
from bicomplex_paley_wiener.domains import (
    in_lower_half_plane,
    in_upper_half_plane,
)
from bicomplex_paley_wiener.exception import BicomplexError, ZeroDivisorError


def random_points(rng, count):
    return [Bicomplex(*row) for row in rng.normal(size=(count, 4))]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1 + 2i - 3j + 4k", (1.0, 2.0, -3.0, 4.0)),
        ("0,1,0,0", (0.0, 1.0, 0.0, 0.0)),
        ("1 + j", (1.0, 0.0, 1.0, 0.0)),
        ("-i", (0.0, -1.0, 0.0, 0.0)),
        ("2.5*k - 1e-3", (-1e-3, 0.0, 0.0, 2.5)),
        ("0.5 + 0.5 k", (0.5, 0.0, 0.0, 0.5)),
    ],
)
def test_parse(text, expected):
    assert Bicomplex.parse(text).coefficients == expected


@pytest.mark.parametrize("text", ["", "1 + 2x", "1,2,3", "i j"])
def test_parse_invalid(text):
    with pytest.raises(ValueError):
        Bicomplex.parse(text)


def test_unit_j_idempotent_components():
    assert to_idempotent(J) == (-1j, 1j)
    assert Bicomplex.parse("0 + 0 i + 1 j + 0 k") == J


def test_idempotent_formulas():
    z = Bicomplex(1.0, 2.0, 3.0, 4.0)
    assert z.beta1 == complex(5.0, -1.0)
    assert z.beta2 == complex(-3.0, 5.0)
    assert z.beta1 == z.z1 - 1j * z.z2
    assert z.beta2 == z.z1 + 1j * z.z2
    assert from_idempotent(z.beta1, z.beta2) == z


def test_idempotent_round_trip(rng):
    for z in random_points(rng, 200):
        restored = from_idempotent(*to_idempotent(z))
        numpy.testing.assert_allclose(
            restored.coefficients, z.coefficients, rtol=0, atol=1e-15
        )


def test_idempotent_identities_are_exact():
    assert E * E == E
    assert E_DAGGER * E_DAGGER == E_DAGGER
    assert E * E_DAGGER == ZERO
    assert E + E_DAGGER == ONE
    assert to_idempotent(E) == (1, 0)
    assert to_idempotent(E_DAGGER) == (0, 1)


def test_cartesian_and_idempotent_products_agree(rng):
    for z, w in zip(random_points(rng, 100), random_points(rng, 100)):
        numpy.testing.assert_allclose(
            (z * w).coefficients, mul(z, w).coefficients, atol=1e-13
        )


def test_division(rng):
    for z in random_points(rng, 50):
        numpy.testing.assert_allclose(
            (z / z).coefficients, ONE.coefficients, atol=1e-12
        )
    assert (1 / Bicomplex(2.0)) == Bicomplex(0.5)


@pytest.mark.parametrize("z", [ZERO, E, E_DAGGER, Bicomplex(1.0, 0, 0, 1.0)])
def test_invert_zero_divisor(z):
    with pytest.raises(ZeroDivisorError):
        invert(z)
    # also usable as the builtin error
    with pytest.raises(ZeroDivisionError):
        ONE / z
    assert issubclass(ZeroDivisorError, BicomplexError)


def test_norm_is_multiplicative(rng):
    for z, w in zip(random_points(rng, 100), random_points(rng, 100)):
        product = hyperbolic_norm(mul(z, w))
        expected = hyperbolic_norm(z) * hyperbolic_norm(w)
        assert product.s1 == pytest.approx(expected.s1, rel=1e-12)
        assert product.s2 == pytest.approx(expected.s2, rel=1e-12)


def test_hyperbolic_arithmetic():
    h = Hyperbolic.from_idempotent(2.0, 3.0)
    g = Hyperbolic.from_idempotent(4.0, 5.0)
    assert (h * g).components == (8.0, 15.0)
    assert (h + g).components == (6.0, 8.0)
    assert (g - h).components == (2.0, 2.0)
    assert (h * 2).components == (4.0, 6.0)
    assert h.exp().s1 == pytest.approx(math.exp(2.0))
    assert h.max_component() == 3.0
    assert h.as_bicomplex().coefficients == (2.5, 0.0, 0.0, -0.5)


@pytest.mark.parametrize(
    "first, second, expected",
    [
        ((1, 2), (2, 3), Comparison.TRUE),
        ((1, 2), (1, 2), Comparison.TRUE),
        ((1, 3), (2, 2), Comparison.INCOMPARABLE),
        ((3, 3), (1, 1), Comparison.FALSE),
    ],
)
def test_partial_order(first, second, expected):
    result = leq_d(
        Hyperbolic.from_idempotent(*first), Hyperbolic.from_idempotent(*second)
    )
    assert result is expected
    assert bool(result) is (expected is Comparison.TRUE)


def test_conjugate_star():
    z = Bicomplex(0.5, 2.0, 1.0, -0.25)
    conjugate = conjugate_star(z)
    assert conjugate_star(conjugate) == z
    assert conjugate.beta1 == z.beta1.conjugate()
    assert conjugate.beta2 == z.beta2.conjugate()
    assert in_upper_half_plane(z)
    assert in_lower_half_plane(conjugate)


def test_upper_half_plane_is_componentwise(rng):
    for _ in range(200):
        z = Bicomplex(*rng.uniform(-3, 3, size=4))
        both_positive = z.beta1.imag > 0 and z.beta2.imag > 0
        assert bool(in_upper_half_plane(z)) is both_positive
        both_negative = z.beta1.imag < 0 and z.beta2.imag < 0
        assert bool(in_lower_half_plane(z)) is both_negative


def test_exp_bc():
    assert exp_bc(ZERO) == ONE
    z = Bicomplex(0.1, 0.2, 0.3, 0.4)
    w = Bicomplex(-0.3, 0.0, 0.5, 0.1)
    numpy.testing.assert_allclose(
        exp_bc(z + w).coefficients,
        (exp_bc(z) * exp_bc(w)).coefficients,
        atol=1e-14,
    )


def test_str_and_csv():
    z = Bicomplex(1.0, -2.0, 0.0, 0.5)
    assert str(z) == "1.0 - 2.0 i + 0.0 j + 0.5 k"
    assert z.as_csv() == "1.0,-2.0,0.0,0.5"
    assert Bicomplex.parse(z.as_csv()) == z


def test_idempotent_arrays():
    beta1, beta2 = idempotent_arrays([J, ONE])
    numpy.testing.assert_array_equal(beta1, [-1j, 1])
    numpy.testing.assert_array_equal(beta2, [1j, 1])


def test_scalar_coercion():
    assert Bicomplex(1.0) + 1 == Bicomplex(2.0)
    assert 2 * J == Bicomplex(0.0, 0.0, 2.0)
    assert 1j * J == Bicomplex(0.0, 0.0, 0.0, 1.0)
    assert Bicomplex(1.0) - 1j == Bicomplex(1.0, -1.0)
    assert J + Hyperbolic(1.0, 2.0) == Bicomplex(1.0, 0.0, 1.0, 2.0)
