from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mixmult import (Ideal, PreconditionError, colength, fiber_presentation, mixed_multiplicity,
                     parse_polynomial, parse_ring, rees_algebra_multiplicity)
from mixmult.multiplicity import compositions, top_coefficient

from oracles import count_standard_monomials_total

R2 = parse_ring("QQ[x,y]")
R3 = parse_ring("QQ[x,y,z]")


def I(ring, *texts):
    return Ideal(ring, [parse_polynomial(t, ring) for t in texts])


def order(points):
    """Smallest total degree among the generators."""
    return min(sum(p) for p in points)


def test_maximal_ideal_values():
    m = Ideal.variables(R2)
    assert mixed_multiplicity([m, m], (0, 1)) == 1
    assert mixed_multiplicity([m], (1,)) == 1
    assert rees_algebra_multiplicity([Ideal.variables(R2)]) == 2
    assert rees_algebra_multiplicity([Ideal.variables(R3)]) == 3


def test_last_index_in_two_variables_is_the_order():
    m = Ideal.variables(R2)
    J = I(R2, "x^2", "y^3")
    assert mixed_multiplicity([m, J], (1, 0)) == 1
    assert mixed_multiplicity([m, J], (0, 1)) == 2


def test_fast_and_general_paths_agree():
    m = Ideal.variables(R3)
    J = I(R3, "x^2", "y^2", "x*z")
    fast = fiber_presentation([m, J], path="fiber")
    slow = fiber_presentation([m, J], path="general")
    assert fast.fast_path and not slow.fast_path
    for a in compositions(2, 2):
        assert top_coefficient(fast, a) == top_coefficient(slow, a)


def test_non_variable_primary_ideal_uses_general_path():
    m2 = I(R2, "x^2", "x*y", "y^2")
    J = I(R2, "x^2", "y^2")
    fp = fiber_presentation([m2, J])
    assert not fp.fast_path
    assert mixed_multiplicity([m2, J], (1, 0), presentation=fp) == 4
    assert mixed_multiplicity([m2, J], (0, 1), presentation=fp) == 4
    with pytest.raises(PreconditionError):
        fiber_presentation([m2, J], path="fiber")


def test_general_path_rejects_mixed_degree_generators():
    m = Ideal.variables(R2)
    with pytest.raises(PreconditionError, match="one degree"):
        fiber_presentation([m, I(R2, "x", "y^2")], path="general")


def test_index_validation():
    m = Ideal.variables(R2)
    with pytest.raises(PreconditionError):
        mixed_multiplicity([m, m], (1, 1))
    with pytest.raises(PreconditionError):
        mixed_multiplicity([m, m], (1,))
    with pytest.raises(PreconditionError):
        mixed_multiplicity([m, m], (-1, 2))
    raw = mixed_multiplicity([m, m], (0, 0), raw=True)
    assert isinstance(raw, Fraction)


def test_preconditions():
    with pytest.raises(PreconditionError):
        mixed_multiplicity([I(R2, "x"), I(R2, "y")], (0, 1))
    with pytest.raises(PreconditionError):
        mixed_multiplicity([Ideal.variables(R2), I(R2, "1")], (0, 1))


def test_colength():
    assert colength(I(R3, "x^2", "y^2", "z^2")) == 8
    assert colength(I(R2, "x^3", "y^3")) == 9
    assert colength(I(R2, "1")) == 0
    with pytest.raises(PreconditionError):
        colength(I(R2, "x"))


def test_compositions():
    assert sorted(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(compositions(3, 3))) == 10


extra_points = st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4)), max_size=3)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), extra_points)
def test_last_mixed_multiplicity_of_monomial_ideal_is_its_order(a, b, extra):
    pts = [(a, 0), (0, b)] + extra
    J = Ideal(R2, [R2.monomial(p) for p in pts])
    m = Ideal.variables(R2)
    assert mixed_multiplicity([m, J], (0, 1)) == order(pts)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4),
       st.lists(st.tuples(*[st.integers(0, 3)] * 3), max_size=3))
def test_colength_counts_standard_monomials(a, b, c, extra):
    gens = [(a, 0, 0), (0, b, 0), (0, 0, c)] + [e for e in extra if any(e)]
    J = Ideal(R3, [R3.monomial(g) for g in gens])
    expected = sum(count_standard_monomials_total(gens, 3, d) for d in range(a + b + c))
    assert colength(J) == expected
