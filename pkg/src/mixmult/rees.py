"""Defining ideals of multi-Rees algebras.

For ideals ``I_1..I_s`` of ``R = k[X]`` with generators ``f_ij``, the ring
``k[X, Y]`` gets one new variable ``Y_ij`` per generator (named ``K_1..K_m``
in reading order). The defining ideal is the ideal of 2x2 minors
``Y_ij f_ij' - Y_ij' f_ij`` saturated by a product of chosen generators.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import prod

from .errors import PreconditionError, RingMismatchError
from .ideal import Ideal, kernel_of_map, saturation
from .polynomial import Polynomial
from .ring import GradedRing


@dataclass
class ReesPresentation:
    base: GradedRing
    ideals: list[Ideal]
    ring: GradedRing
    blocks: list[list[str]]
    h: Polynomial
    gamma: Ideal
    counts: list[int] = dc_field(default_factory=list)

    @property
    def generators(self) -> list[Polynomial]:
        return self.gamma.generators

    def minimal_generators(self) -> list[Polynomial]:
        """Greedy trim of the basis: keep an element only if the earlier kept ones miss it."""
        kept: list[Polynomial] = []
        current = Ideal(self.ring, [])
        for g in self.gamma.generators:
            if kept and current.contains(g):
                continue
            kept.append(g)
            current = Ideal(self.ring, kept)
        return kept

    def y_vars(self) -> list[str]:
        return [n for b in self.blocks for n in b]

    def block_degree(self, p: Polynomial) -> tuple[int, ...] | None:
        """Y-block multidegree of ``p``; ``None`` when terms disagree."""
        owner = {}
        for i, b in enumerate(self.blocks):
            for n in b:
                owner[self.ring.index[n]] = i
        degs = set()
        for exps in p.monomials():
            d = [0] * len(self.blocks)
            for j, e in enumerate(exps):
                if e and j in owner:
                    d[owner[j]] += e
            degs.add(tuple(d))
        return degs.pop() if len(degs) == 1 else None


def _y_names(base: GradedRing, total: int) -> list[str]:
    prefix = "K"
    while any(f"{prefix}_{j}" in base.index for j in range(1, total + 1)):
        prefix += "K"
    return [f"{prefix}_{j}" for j in range(1, total + 1)]


def extended_ring(base: GradedRing, counts: list[int]) -> tuple[GradedRing, list[list[str]]]:
    """``k[X, Y]`` graded with X in slot 0 and Y-block ``i`` in slot ``i + 1``."""
    names = _y_names(base, sum(counts))
    blocks = []
    start = 0
    for c in counts:
        blocks.append(names[start:start + c])
        start += c
    arity = len(counts) + 1
    grading = [tuple(1 if j == 0 else 0 for j in range(arity))] * base.nvars
    for i, b in enumerate(blocks):
        grading += [tuple(1 if j == i + 1 else 0 for j in range(arity))] * len(b)
    ring = GradedRing(base.names + tuple(names), base.field, base.order, grading)
    return ring, blocks


def _check_ideals(ideals) -> GradedRing:
    ideals = list(ideals)
    if not ideals:
        raise PreconditionError("at least one ideal is required")
    base = ideals[0].ring
    for I in ideals:
        if I.ring != base:
            raise RingMismatchError("all ideals must share one ring")
        if I.is_zero():
            raise PreconditionError("zero ideal has no Rees presentation")
    return base


def minors_ideal(ring: GradedRing, ideals, blocks) -> list[Polynomial]:
    gens = []
    for I, block in zip(ideals, blocks):
        fs = [f.map_to(ring) for f in I.generators]
        ys = [ring.gen(n) for n in block]
        for a in range(len(fs)):
            for b in range(a + 1, len(fs)):
                m = ys[a] * fs[b] - ys[b] * fs[a]
                if m:
                    gens.append(m)
    return gens


def _sorted_gamma(gamma: Ideal) -> Ideal:
    gens = sorted(gamma.generators, key=lambda p: (p.total_degree(), p.terms[0][0]))
    return Ideal(gamma.ring, gens, gb=gamma._gb)


def rees_defining_ideal(ideals, generator_choice=None, method: str = "auto") -> ReesPresentation:
    """Defining ideal of the multi-Rees algebra of ``ideals``.

    ``generator_choice[i]`` selects which generator of ideal ``i`` enters the
    saturating product (default: the first). ``method`` is passed to
    :func:`saturation`.
    """
    ideals = list(ideals)
    base = _check_ideals(ideals)
    if generator_choice is None:
        generator_choice = [0] * len(ideals)
    if len(generator_choice) != len(ideals):
        raise PreconditionError("one generator choice per ideal required")
    for I, j in zip(ideals, generator_choice):
        if not 0 <= j < len(I.generators):
            raise PreconditionError(f"generator index {j} out of range")
    counts = [len(I.generators) for I in ideals]
    ring, blocks = extended_ring(base, counts)
    chosen = [I.generators[j].map_to(ring) for I, j in zip(ideals, generator_choice)]
    h = prod(chosen, start=ring.one)
    L = Ideal(ring, minors_ideal(ring, ideals, blocks))
    gamma = _sorted_gamma(saturation(L, h, method, factors=chosen))
    return ReesPresentation(base, ideals, ring, blocks, h, gamma, counts)


def rees_defining_ideal_monomial(ideals, method: str = "auto") -> ReesPresentation:
    """Monomial-ideal variant: saturate by the product of the ring variables."""
    ideals = list(ideals)
    base = _check_ideals(ideals)
    for I in ideals:
        if not I.is_monomial():
            raise PreconditionError("every generator must be a monomial")
    counts = [len(I.generators) for I in ideals]
    ring, blocks = extended_ring(base, counts)
    variables = [ring.gen(n) for n in base.names]
    h = prod(variables, start=ring.one)
    L = Ideal(ring, minors_ideal(ring, ideals, blocks))
    gamma = _sorted_gamma(saturation(L, h, method, factors=variables))
    return ReesPresentation(base, ideals, ring, blocks, h, gamma, counts)


def _t_ring(P: ReesPresentation) -> GradedRing:
    names = []
    i = 0
    while len(names) < len(P.blocks):
        n = f"T_{i}"
        i += 1
        if n not in P.ring.index:
            names.append(n)
    return GradedRing(P.base.names + tuple(names), P.base.field, P.base.order)


def _phi_images(P: ReesPresentation) -> tuple[GradedRing, dict]:
    target = _t_ring(P)
    tnames = target.names[P.base.nvars:]
    images = {n: target.gen(n) for n in P.base.names}
    for I, block, t in zip(P.ideals, P.blocks, tnames):
        tv = target.gen(t)
        for f, y in zip(I.generators, block):
            images[y] = f.map_to(target) * tv
    return target, images


def verify_rees_generators(P: ReesPresentation) -> bool:
    """True iff every generator of the presentation maps to zero under ``Y_ij -> f_ij T_i``."""
    if not P.gamma.generators:
        return True
    target, images = _phi_images(P)
    return all(not g.substitute(images, target) for g in P.gamma.generators)


def rees_ideal_as_kernel(ideals) -> Ideal:
    """The same defining ideal, computed as the kernel of ``Y_ij -> f_ij T_i``."""
    ideals = list(ideals)
    base = _check_ideals(ideals)
    ring, blocks = extended_ring(base, [len(I.generators) for I in ideals])
    P = ReesPresentation(base, ideals, ring, blocks, ring.one, Ideal(ring))
    target, images = _phi_images(P)
    aligned = [None if n in base.index else images[n] for n in ring.names]
    return kernel_of_map(ring, aligned)
