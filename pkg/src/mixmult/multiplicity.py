"""Mixed multiplicities from multi-Rees presentations.

For ideals ``I_0, I_1, .., I_r`` of ``R = k[X]`` with ``I_0`` primary to the
homogeneous maximal ideal, the ring ``k[X, Y] / (Gamma + I_0)`` is graded by
X in slot 0 and the Y-block of ``I_i`` in slot ``i + 1``. Its Hilbert series has
no ``(1 - t_0)`` factor, so setting ``t_0 = 1`` yields the series of the fiber
ring graded by the Y-blocks alone. Mixed multiplicities are the top-degree
coefficients of that series' Hilbert polynomial in the binomial basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InternalInconsistency, PreconditionError, RingMismatchError
from .hilbert import (HilbertSeries, hilbert_coefficient, monomial_hilbert_series,
                      multigraded_hilbert_series, reduce_hilbert)
from .groebner import leading_term_ideal
from .ideal import Ideal, krull_dimension
from .rees import (ReesPresentation, extended_ring, rees_defining_ideal,
                   rees_defining_ideal_monomial)
from .ring import GradedRing, MonomialOrder


@dataclass
class FiberPresentation:
    ideals: list[Ideal]
    rees: ReesPresentation
    ring: GradedRing
    ideal: Ideal
    full_series: HilbertSeries
    series: HilbertSeries
    fast_path: bool

    @property
    def s(self) -> tuple[int, ...]:
        return tuple(d - 1 for d in self.series.denominator)


def _common_ring(ideals) -> GradedRing:
    if not ideals:
        raise PreconditionError("at least one ideal is required")
    base = ideals[0].ring
    for I in ideals:
        if I.ring != base:
            raise RingMismatchError("all ideals must share one ring")
        if I.is_zero():
            raise PreconditionError("ideals must be nonzero")
    return base


def is_maximal_variable_ideal(I: Ideal) -> bool:
    return I == Ideal.variables(I.ring)


def _build_rees(ideals, method: str) -> ReesPresentation:
    if method == "auto":
        method = "monomial" if all(I.is_monomial() for I in ideals) else "generic"
    if method == "monomial":
        return rees_defining_ideal_monomial(ideals)
    if method == "generic":
        return rees_defining_ideal(ideals)
    raise PreconditionError(f"unknown Rees method {method!r}")


def fiber_presentation(ideals, rees: str | ReesPresentation = "auto",
                       path: str = "auto", check_height: bool = True) -> FiberPresentation:
    """Graded presentation of ``R(I_0 | I_1, .., I_r)`` and its Hilbert series.

    ``path`` is ``"auto"``, ``"fiber"`` (requires ``I_0`` to be the variable
    ideal; the X variables are set to zero) or ``"general"``.
    """
    ideals = list(ideals)
    base = _common_ring(ideals)
    if krull_dimension(ideals[0]) != 0:
        raise PreconditionError("the first ideal must be primary to the maximal ideal")
    if check_height:
        for j, I in enumerate(ideals[1:], start=1):
            if krull_dimension(I) >= base.nvars:
                raise PreconditionError(f"ideal {j} must have positive height")
    fast = is_maximal_variable_ideal(ideals[0])
    if path == "fiber" and not fast:
        raise PreconditionError("the fiber path needs the first ideal to be the variable ideal")
    if path == "general":
        fast = False
    elif path not in ("auto", "fiber"):
        raise PreconditionError(f"unknown path {path!r}")
    P = rees if isinstance(rees, ReesPresentation) else _build_rees(ideals, rees)
    if fast:
        return _fiber_path(ideals, P)
    return _general_path(ideals, P)


def _fiber_path(ideals, P: ReesPresentation) -> FiberPresentation:
    arity = len(P.blocks)
    names, grading = [], []
    for i, block in enumerate(P.blocks):
        names += block
        grading += [tuple(1 if j == i else 0 for j in range(arity))] * len(block)
    order = P.base.order if len(P.base.order.blocks) == 1 else MonomialOrder.grevlex()
    ring = GradedRing(names, P.base.field, order, grading)
    J = Ideal(ring, [g.map_to(ring) for g in P.gamma.generators])
    full = reduce_hilbert(multigraded_hilbert_series(J))
    return FiberPresentation(ideals, P, ring, J, full, full, True)


def _equigenerated(I: Ideal) -> bool:
    degrees = {sum(e) for g in I.generators for e in g.monomials()}
    return len(degrees) <= 1


def _general_path(ideals, P: ReesPresentation) -> FiberPresentation:
    # X carries the first slot, so the relations are multihomogeneous only when
    # each ideal is generated by forms of a single degree
    for j, I in enumerate(ideals):
        if not _equigenerated(I):
            raise PreconditionError(
                f"the general path needs ideal {j} to be generated by forms of one degree")
    ring = P.ring
    gens = list(P.gamma.generators) + [f.map_to(ring) for f in ideals[0].generators]
    J = Ideal(ring, gens)
    full = reduce_hilbert(multigraded_hilbert_series(J))
    if full.denominator[0] != 0:
        raise InternalInconsistency(
            f"series keeps a (1 - t0)^{full.denominator[0]} factor although R/I0 is Artinian")
    return FiberPresentation(ideals, P, ring, J, full, full.specialize(0, 1), False)


def mixed_multiplicity(ideals, a, raw: bool = False, rees="auto", path: str = "auto",
                       presentation: FiberPresentation | None = None):
    """``e_a(I_0 | I_1, .., I_r)`` for ``|a| = dim R - 1``.

    With ``raw=True`` any in-range index is accepted and the coefficient is
    returned as an exact rational.
    """
    ideals = list(ideals)
    a = tuple(int(x) for x in a)
    if len(a) != len(ideals):
        raise PreconditionError(f"index {a} needs one entry per ideal ({len(ideals)})")
    if any(x < 0 for x in a):
        raise PreconditionError("index entries must be non-negative")
    base = _common_ring(ideals)
    d = base.nvars
    if not raw and sum(a) != d - 1:
        raise PreconditionError(
            f"|a| = {sum(a)} but a mixed multiplicity needs |a| = dim R - 1 = {d - 1}")
    fp = presentation or fiber_presentation(ideals, rees=rees, path=path)
    value = hilbert_coefficient(fp.series, a)
    if raw:
        return value
    return _as_natural(value, a)


def _as_natural(value: Fraction, a) -> int:
    if value.denominator != 1 or value < 0:
        raise InternalInconsistency(f"coefficient for {a} is {value}, not a natural number")
    return int(value)


def top_coefficient(fp: FiberPresentation, a) -> int:
    """Like :func:`mixed_multiplicity` on a built presentation, with out-of-range slots as 0."""
    if any(ai > si for ai, si in zip(a, fp.s)):
        return 0
    return _as_natural(hilbert_coefficient(fp.series, a), a)


def compositions(total: int, parts: int):
    """All tuples of ``parts`` naturals summing to ``total`` (lexicographic descending)."""
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars + (total + parts - 1,):
            out.append(b - prev - 1)
            prev = b
        yield tuple(out)


def rees_algebra_multiplicity(ideals, rees="auto") -> int:
    """Multiplicity of the multi-Rees algebra as a sum of mixed multiplicities."""
    ideals = list(ideals)
    base = _common_ring(ideals)
    full = [Ideal.variables(base)] + ideals
    fp = fiber_presentation(full, rees=rees)
    d = base.nvars
    return sum(top_coefficient(fp, a) for a in compositions(d - 1, len(full)))


def colength(I: Ideal) -> int:
    """Vector-space dimension of ``ring / I`` for a zero-dimensional ideal."""
    dim = krull_dimension(I)
    if dim == -1:
        return 0
    if dim != 0:
        raise PreconditionError(f"ideal is {dim}-dimensional, colength is infinite")
    ring = I.ring.with_grading([(1,)] * I.ring.nvars)
    H = reduce_hilbert(monomial_hilbert_series(ring, leading_term_ideal(I.gb())))
    if any(H.denominator):
        raise InternalInconsistency("zero-dimensional quotient has an infinite series")
    return sum(H.numerator.values())
