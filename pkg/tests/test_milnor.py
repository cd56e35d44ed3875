import warnings
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from mixmult import (PreconditionError, euler_characteristic_complement, jacobian_ideal,
                     milnor_number, parse_polynomial, parse_ring, sectional_milnor_numbers)


def poly(ring_text, text):
    return parse_polynomial(text, parse_ring(ring_text))


@pytest.mark.parametrize("ring,f,sectional,mu", [
    ("QQ[x,y]", "x^3 + y^3", (1, 2), 4),
    ("QQ[x,y]", "y^2 - x^3", (1, 1), 2),
    ("QQ[x,y,z]", "x^2 + y^2 + z^2", (1, 1, 1), 1),
    ("QQ[x,y,z]", "x^2*y + y^2*z + z^3", (1, 2, 4), 8),
    ("QQ[x,y,z]", "x^4 + y^4 + z^4", (1, 3, 9), 27),
])
def test_known_singularities(ring, f, sectional, mu):
    g = poly(ring, f)
    profile = sectional_milnor_numbers(g)
    assert profile.values == sectional
    assert list(profile) == list(sectional) and profile[0] == 1
    assert milnor_number(g) == mu


def test_invariant_under_linear_change_of_coordinates():
    R = parse_ring("QQ[x,y,z]")
    f = parse_polynomial("x^2*y + y^2*z + z^3", R)
    x, y, z = R.gen("x"), R.gen("y"), R.gen("z")
    g = f.substitute({"x": x + 2 * y, "y": y + z, "z": z}, R)
    assert sectional_milnor_numbers(g).values == (1, 2, 4)
    assert milnor_number(g) == 8


def test_nonisolated_critical_locus():
    f = poly("QQ[x,y,z]", "x^2 + y^2")
    with pytest.raises(PreconditionError, match="positive-dimensional"):
        milnor_number(f)


def test_jacobian_errors():
    with pytest.raises(PreconditionError):
        jacobian_ideal(poly("QQ[x,y]", "7"))
    with pytest.raises(PreconditionError), pytest.warns(UserWarning):
        jacobian_ideal(poly("GF(3)[x,y]", "x^3 + y^3 + 1"))


def test_positive_characteristic_warning():
    f = poly("GF(3)[x,y]", "x^3 + y^4")
    with pytest.warns(UserWarning, match="characteristic 3"):
        profile = sectional_milnor_numbers(f)
    assert profile.values == (1, 0)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        sectional_milnor_numbers(poly("GF(5)[x,y]", "x^3 + y^4"))


@pytest.mark.parametrize("ring,h,terms,value", [
    ("QQ[x,y,z]", "x*y*z", (1, 2, 1), 0),
    ("QQ[x,y,z]", "x^2 + y*z", (1, 1, 1), 1),
    ("QQ[x,y]", "x^2 + y^2", (1, 1), 0),
    ("QQ[x,y,z]", "x + y", (1, 0, 0), 1),
    ("QQ[x0,x1,x2]", "(x1 + x2)*(x0^2 + x1*x2)", (1, 2, 2), 1),
])
def test_euler_characteristic_of_complement(ring, h, terms, value):
    chi = euler_characteristic_complement(poly(ring, h))
    assert chi.terms == terms
    assert chi.signs == tuple((-1) ** i for i in range(len(terms)))
    assert chi.value == value
    n = len(terms) - 1
    assert chi.constant_sign_value == (-1) ** n * sum(terms)


def test_euler_characteristic_needs_a_form():
    with pytest.raises(PreconditionError):
        euler_characteristic_complement(poly("QQ[x,y]", "x^2 + y"))
    with pytest.raises(PreconditionError):
        euler_characteristic_complement(poly("QQ[x,y]", "3"))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(2, 5), min_size=2, max_size=3))
def test_brieskorn_pham(exponents):
    names = ",".join(f"x{i}" for i in range(len(exponents)))
    f = poly(f"QQ[{names}]", " + ".join(f"x{i}^{a}" for i, a in enumerate(exponents)))
    profile = sectional_milnor_numbers(f)
    assert milnor_number(f) == prod(a - 1 for a in exponents)
    assert profile[0] == 1
    assert profile[1] == min(exponents) - 1


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 4), st.integers(-2, 2), st.integers(-2, 2))
def test_homogeneous_isolated_singularity(d, s, t):
    R = parse_ring("QQ[x,y,z]")
    f = parse_polynomial(f"x^{d} + y^{d} + z^{d}", R)
    x, y, z = R.gen("x"), R.gen("y"), R.gen("z")
    g = f.substitute({"x": x + s * y + t * z, "y": y + s * z, "z": z}, R)
    assert sectional_milnor_numbers(g).values == (1, d - 1, (d - 1) ** 2)
