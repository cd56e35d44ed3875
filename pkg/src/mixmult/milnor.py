"""Sectional Milnor numbers, Milnor numbers and the Euler characteristic of D(h)."""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import PreconditionError
from .ideal import Ideal, krull_dimension
from .multiplicity import colength, fiber_presentation, top_coefficient
from .polynomial import Polynomial


@dataclass(frozen=True)
class MilnorProfile:
    """``values[i] = e_i(m | J(f))`` for ``i = 0..n-1``."""

    f: Polynomial
    n: int
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class EulerCharacteristic:
    """Both sign conventions of the sum over ``e_0..e_n``."""

    terms: tuple[int, ...]
    signs: tuple[int, ...]
    value: int
    constant_sign_value: int


def _positive_characteristic_warning(f: Polynomial) -> None:
    p = f.ring.field.modulus
    if not p:
        return
    for exps in f.monomials():
        if any(e and e % p == 0 for e in exps):
            warnings.warn(f"characteristic {p} divides an exponent of {f}; "
                          "some partial derivatives lose terms", stacklevel=3)
            return


def jacobian_ideal(f: Polynomial) -> Ideal:
    """Ideal of the first partial derivatives (zero partials dropped)."""
    if f.is_constant():
        raise PreconditionError("the Jacobian ideal of a constant is zero")
    _positive_characteristic_warning(f)
    partials = [f.derivative(i) for i in range(f.ring.nvars)]
    J = Ideal(f.ring, partials)
    if J.is_zero():
        raise PreconditionError("all partial derivatives vanish")
    return J


def sectional_milnor_numbers(f: Polynomial) -> MilnorProfile:
    """``e_i(m | J(f)) = a_(n-1-i, i)`` of the fiber series of ``(m, J(f))``."""
    J = jacobian_ideal(f)
    ring = f.ring
    n = ring.nvars
    m = Ideal.variables(ring)
    fp = fiber_presentation([m, J], path="fiber")
    values = tuple(top_coefficient(fp, (n - 1 - i, i)) for i in range(n))
    return MilnorProfile(f, n, values)


def milnor_number(f: Polynomial) -> int:
    """``dim k[x] / J(f)``; a global count over every critical point."""
    J = jacobian_ideal(f)
    if krull_dimension(J) > 0:
        raise PreconditionError("the critical locus is positive-dimensional")
    return colength(J)


def euler_characteristic_complement(h: Polynomial) -> EulerCharacteristic:
    """Euler characteristic of the complement of ``V(h)`` in projective space.

    For ``h`` in ``n + 1`` variables the terms are the sectional Milnor numbers
    ``e_0..e_n``; ``value`` uses alternating signs ``(-1)^i`` and
    ``constant_sign_value`` the constant sign ``(-1)^n``.
    """
    if h.is_constant():
        raise PreconditionError("h must be nonconstant")
    if not h.is_homogeneous() or h.ring.grading_arity != 1:
        raise PreconditionError("h must be homogeneous")
    profile = sectional_milnor_numbers(h)
    n = h.ring.nvars - 1
    terms = profile.values
    signs = tuple((-1) ** i for i in range(n + 1))
    value = sum(s * e for s, e in zip(signs, terms))
    constant = (-1) ** n * sum(terms)
    return EulerCharacteristic(terms, signs, value, constant)
