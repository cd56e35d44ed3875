"""Lattice polytopes, their monomial ideals, and mixed volumes.

A polytope is given by a finite point set (its convex hull is implied, no
hull is ever computed). The mixed volume of ``Q_1..Q_n`` in ``R^n`` is the
mixed multiplicity ``e_(0,1,..,1)(m | I_1, .., I_n)`` where ``I_j`` is the
homogenized monomial ideal of ``Q_j`` in ``k[X_1..X_{n+1}]``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .field import GF, Field
from .hilbert import HilbertSeries, hilbert_coefficient
from .ideal import Ideal
from .multiplicity import _as_natural, fiber_presentation
from .polynomial import Polynomial
from .ring import GradedRing

MIXED_VOLUME_FIELD = GF(2)


@dataclass(frozen=True)
class LatticePolytope:
    dim: int
    points: tuple[tuple[int, ...], ...]

    @classmethod
    def from_points(cls, points) -> LatticePolytope:
        """Deduplicate (keeping first-seen order) and shift negative coordinates to zero."""
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise PreconditionError("a polytope needs at least one point")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise PreconditionError("points have different dimensions")
        dim = dims.pop()
        if dim == 0:
            raise PreconditionError("points must have at least one coordinate")
        low = [min(0, min(p[i] for p in pts)) for i in range(dim)]
        seen = []
        for p in pts:
            q = tuple(x - lo for x, lo in zip(p, low))
            if q not in seen:
                seen.append(q)
        return cls(dim, tuple(seen))

    def translate(self, v) -> LatticePolytope:
        return LatticePolytope.from_points([tuple(a + b for a, b in zip(p, v)) for p in self.points])

    def __len__(self) -> int:
        return len(self.points)


def polytope_ring(dim: int, field: Field = MIXED_VOLUME_FIELD) -> GradedRing:
    return GradedRing([f"X_{i}" for i in range(1, dim + 2)], field)


def polytope_to_ideal(P: LatticePolytope, field: Field = MIXED_VOLUME_FIELD,
                      ring: GradedRing | None = None) -> Ideal:
    """Monomials of the points, homogenized with the last variable to the top degree."""
    ring = ring or polytope_ring(P.dim, field)
    if ring.nvars != P.dim + 1:
        raise PreconditionError(f"ring needs {P.dim + 1} variables")
    top = max(sum(p) for p in P.points)
    gens = [ring.monomial(p + (top - sum(p),)) for p in P.points]
    return Ideal(ring, gens)


def _check_family(polytopes) -> int:
    polytopes = list(polytopes)
    if not polytopes:
        raise PreconditionError("at least one polytope is required")
    n = polytopes[0].dim
    if any(Q.dim != n for Q in polytopes):
        raise PreconditionError("polytopes live in different dimensions")
    if len(polytopes) != n:
        raise PreconditionError(f"mixed volume in dimension {n} needs {n} polytopes, got {len(polytopes)}")
    return n


def mixed_volume_series(polytopes, field: Field = MIXED_VOLUME_FIELD) -> HilbertSeries:
    """Reduced Hilbert series of the fiber ring of ``(m, I_1, .., I_n)``."""
    n = _check_family(polytopes)
    ring = polytope_ring(n, field)
    ideals = [Ideal.variables(ring)] + [polytope_to_ideal(Q, ring=ring) for Q in polytopes]
    fp = fiber_presentation(ideals, rees="monomial", path="fiber", check_height=False)
    return fp.series


def mixed_volume_from_series(H: HilbertSeries) -> int:
    """The ``(0, 1, .., 1)`` coefficient of a fiber series."""
    u = (0,) + (1,) * (H.arity - 1)
    # a lower-dimensional summand leaves some slot without growth
    if any(ui > d - 1 for ui, d in zip(u, H.denominator)):
        return 0
    return _as_natural(hilbert_coefficient(H, u), u)


def mixed_volume(polytopes, field: Field = MIXED_VOLUME_FIELD) -> int:
    return mixed_volume_from_series(mixed_volume_series(polytopes, field))


def newton_polytope(f) -> LatticePolytope:
    """Support of ``f`` translated into the non-negative orthant.

    ``f`` is a :class:`Polynomial`, a dict ``{exponents: coeff}`` or a list of
    ``(exponents, coeff)`` pairs; exponents may be negative.
    """
    if isinstance(f, Polynomial):
        items = f.items()
    elif isinstance(f, dict):
        items = list(f.items())
    else:
        items = list(f)
    support = [tuple(e) for e, c in items if c != 0]
    if not support:
        raise PreconditionError("the Newton polytope of zero is empty")
    dim = len(support[0])
    low = [min(p[i] for p in support) for i in range(dim)]
    return LatticePolytope.from_points([tuple(x - lo for x, lo in zip(p, low)) for p in support])


def bernstein_bound(system) -> int:
    """Mixed volume of the Newton polytopes of a square Laurent system."""
    polys = list(system)
    tops = [newton_polytope(f) for f in polys]
    n = tops[0].dim
    if len(polys) != n:
        raise PreconditionError(f"{len(polys)} equations in {n} variables is not a square system")
    return mixed_volume(tops)


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.dim != Q.dim:
        raise PreconditionError("Minkowski sum of polytopes in different dimensions")
    return LatticePolytope.from_points([tuple(a + b for a, b in zip(p, q))
                                        for p in P.points for q in Q.points])
