"""Ideals and the ideal-level operations built on Groebner bases."""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from math import gcd, lcm

from .errors import PreconditionError, RingMismatchError
from .groebner import GroebnerBasis, buchberger, leading_term_ideal
from .polynomial import Polynomial
from .ring import GradedRing, MonomialOrder


class Ideal:
    """Finite generating set in a ring, with a lazily computed Groebner basis."""

    def __init__(self, ring: GradedRing, generators=(), gb: GroebnerBasis | None = None):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            elif g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in {ring!r}")
            if g.terms:
                gens.append(g)
        self.ring = ring
        self.generators = gens
        self._gb = gb

    @classmethod
    def of(cls, *generators: Polynomial) -> Ideal:
        if not generators:
            raise PreconditionError("Ideal.of needs at least one generator")
        return cls(generators[0].ring, generators)

    @classmethod
    def variables(cls, ring: GradedRing) -> Ideal:
        return cls(ring, ring.gens())

    def __repr__(self) -> str:
        return f"Ideal({', '.join(str(g) for g in self.generators) or '0'})"

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self.generators, ring=self.ring)
        return self._gb

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def contains(self, p: Polynomial) -> bool:
        return self.gb().contains(p)

    def issubset(self, other: Ideal) -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.gb().generators == other.gb().generators

    def __hash__(self):
        return hash(tuple(self.gb().generators))

    def __add__(self, other: Ideal) -> Ideal:
        return ideal_combine(self, other, "sum")

    def __mul__(self, other: Ideal) -> Ideal:
        return ideal_combine(self, other, "product")

    def __pow__(self, e: int) -> Ideal:
        return ideal_power(self, e)

    def map_to(self, target: GradedRing, var_map: dict | None = None) -> Ideal:
        return Ideal(target, [g.map_to(target, var_map) for g in self.generators])


def ideal_combine(A: Ideal, B: Ideal, op: str) -> Ideal:
    A.ring.check_same(B.ring)
    if op == "sum":
        return Ideal(A.ring, A.generators + B.generators)
    if op == "product":
        return Ideal(A.ring, [a * b for a in A.generators for b in B.generators])
    raise PreconditionError(f"unknown ideal operation {op!r}")


def ideal_power(A: Ideal, e: int) -> Ideal:
    if e < 0:
        raise PreconditionError("negative ideal power")
    result = Ideal(A.ring, [A.ring.one])
    for _ in range(e):
        result = ideal_combine(result, A, "product")
    return result


def _fresh_name(ring: GradedRing, base: str) -> str:
    name = base
    i = 0
    while name in ring.index:
        i += 1
        name = f"{base}{i}"
    return name


def divide_exact(g: Polynomial, h: Polynomial) -> Polynomial:
    """Quotient ``g / h`` when ``h`` divides ``g`` exactly."""
    ring = g.ring
    if not h.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    hl_key, hl_c = h.terms[0]
    hl_exps = ring.decode(hl_key)
    inv = ring.field.inv(hl_c)
    quotient = ring.zero
    rem = g
    while rem.terms:
        k, c = rem.terms[0]
        exps = ring.decode(k)
        if any(a < b for a, b in zip(exps, hl_exps)):
            raise PreconditionError("polynomial division is not exact")
        shift = tuple(a - b for a, b in zip(exps, hl_exps))
        q = ring.monomial(shift, c * inv)
        quotient = quotient + q
        rem = rem - q * h
    return quotient


def eliminate(I: Ideal, variables) -> Ideal:
    """``I`` intersected with the subring on the remaining variables.

    The result lives in the ring of the remaining variables (original
    relative order, field and grading).
    """
    ring = I.ring
    elim = [v if isinstance(v, str) else ring.names[v] for v in variables]
    for v in elim:
        if v not in ring.index:
            raise PreconditionError(f"unknown variable {v!r}")
    elim = [n for n in ring.names if n in set(elim)]
    keep = [n for n in ring.names if n not in set(elim)]
    sub = GradedRing(keep, ring.field, _restrict_order(ring.order, len(keep)),
                     [ring.grading[ring.index[n]] for n in keep])
    if not elim:
        return Ideal(sub, [g.map_to(sub) for g in I.generators])
    big = GradedRing(elim + keep, ring.field,
                     MonomialOrder.elimination(len(elim), sub.order),
                     [ring.grading[ring.index[n]] for n in elim + keep])
    G = buchberger([g.map_to(big) for g in I.generators], ring=big)
    return _restrict_gb(G, len(elim), sub)


def _restrict_order(order: MonomialOrder, nvars: int) -> MonomialOrder:
    if len(order.blocks) == 1:
        return order
    return MonomialOrder.grevlex()


def _restrict_gb(G: GroebnerBasis, nelim: int, sub: GradedRing) -> Ideal:
    """Elements of an elimination basis free of the first ``nelim`` variables."""
    kept = []
    for g in G.generators:
        if all(not any(e[:nelim]) for e in g.monomials()):
            kept.append(g.map_to(sub))
    return Ideal(sub, kept, gb=GroebnerBasis(sub, sorted(kept, key=lambda p: p.terms[0][0])))


def _intersection_basis(A: Ideal, B: Ideal) -> Ideal:
    ring = A.ring
    t = _fresh_name(ring, "t")
    big = GradedRing((t,) + ring.names, ring.field,
                     MonomialOrder.elimination(1, ring.order),
                     ((0,) * ring.grading_arity,) + ring.grading)
    tv = big.gen(t)
    gens = [tv * g.map_to(big) for g in A.generators]
    gens += [(big.one - tv) * g.map_to(big) for g in B.generators]
    return _restrict_gb(buchberger(gens, ring=big), 1, ring)


def ideal_intersection(A: Ideal, B: Ideal) -> Ideal:
    """``A`` intersected with ``B``, by eliminating ``t`` from ``t*A + (1 - t)*B``."""
    A.ring.check_same(B.ring)
    if A.is_zero() or B.is_zero():
        return Ideal(A.ring, [])
    return _intersection_basis(A, B)


def ideal_quotient(I: Ideal, h: Polynomial) -> Ideal:
    """``(I : h)`` via ``I intersect (h)`` and exact division by ``h``."""
    ring = I.ring
    if h.ring != ring:
        raise RingMismatchError("quotient element lives in another ring")
    if not h.terms:
        raise PreconditionError("quotient by the zero polynomial")
    if h.is_constant():
        return Ideal(ring, I.generators)
    if I.is_zero():
        return Ideal(ring, [])
    inter = _intersection_basis(I, Ideal(ring, [h]))
    return Ideal(ring, [divide_exact(g, h) for g in inter.generators])


def saturation(I: Ideal, h: Polynomial, method: str = "inverse", factors=None) -> Ideal:
    """``(I : h^infinity)``.

    ``method="inverse"`` computes one basis of ``I + (1 - w*h)`` eliminating
    ``w``. ``method="graded"`` needs positive weights making ``I`` and ``h``
    homogeneous (see :func:`positive_grading`); it saturates by the factors
    of ``h`` one at a time (``factors`` if given, monomials split into their
    variables), which is much cheaper. ``"auto"`` picks it when such weights
    exist.
    """
    ring = I.ring
    if h.ring != ring:
        raise RingMismatchError("saturating element lives in another ring")
    if not h.terms:
        raise PreconditionError("saturation by the zero polynomial")
    if h.is_constant() or not I.generators:
        return Ideal(ring, I.generators, gb=I._gb)
    if method in ("auto", "graded"):
        factors = _split_factors(list(factors) if factors else [h])
        weights = positive_grading(I.generators + factors, ring.nvars)
        if weights is not None:
            current = I
            for f in factors:
                if f.is_monomial():
                    var = next(iter(f.variables()))
                    current = variable_saturation(current, var, weights)
                else:
                    current = graded_saturation(current, f, weights)
            return current
        if method == "graded":
            raise PreconditionError("no positive grading makes the input homogeneous")
    elif method != "inverse":
        raise PreconditionError(f"unknown saturation method {method!r}")
    w = _fresh_name(ring, "w")
    big = GradedRing((w,) + ring.names, ring.field,
                     MonomialOrder.elimination(1, ring.order),
                     ((0,) * ring.grading_arity,) + ring.grading)
    gens = [g.map_to(big) for g in I.generators]
    gens.append(big.one - big.gen(w) * h.map_to(big))
    G = buchberger(gens, ring=big)
    return _restrict_gb(G, 1, ring)


def graded_saturation(I: Ideal, h: Polynomial, weights) -> Ideal:
    """Saturation for inputs homogeneous under positive ``weights``.

    With a new variable ``u`` standing for ``h`` and placed last in a weighted
    reverse-lex order, ``u`` divides the leading term of a homogeneous basis
    element only if it divides the whole element. Dividing the basis of
    ``I + (u - h)`` by those powers of ``u`` saturates by ``u``; substituting
    ``u = h`` back gives generators of ``I : h^infinity``.
    """
    ring = I.ring
    u = _fresh_name(ring, "u")
    wh = _weighted_degree(h, weights)
    big = GradedRing(ring.names + (u,), ring.field,
                     MonomialOrder.weighted(tuple(weights) + (wh,)))
    gens = [g.map_to(big) for g in I.generators]
    gens.append(big.gen(u) - h.map_to(big))
    G = buchberger(gens, ring=big)
    back = {n: ring.gen(n) for n in ring.names}
    back[u] = h
    out = []
    ui = big.nvars - 1
    for g in G.generators:
        k = min(e[ui] for e in g.monomials())
        if k:
            g = _divide_var_power(g, ui, k)
        out.append(g.substitute(back, ring))
    out = sorted({p.monic() for p in out if p.terms}, key=lambda p: p.terms[0][0])
    return Ideal(ring, out)


def _split_factors(factors) -> list[Polynomial]:
    """Distinct non-constant factors, monomials replaced by their variables."""
    out: list[Polynomial] = []
    for f in factors:
        if f.is_constant():
            continue
        if f.is_monomial():
            parts = [f.ring.gen(i) for i in sorted(f.variables())]
        else:
            parts = [f.monic()]
        for p in parts:
            if p not in out:
                out.append(p)
    return out


def variable_saturation(I: Ideal, var: int, weights) -> Ideal:
    """``I : x^infinity`` for a variable ``x`` and ``I`` homogeneous under ``weights``.

    With ``x`` last in a weighted reverse-lex order, dividing each basis
    element by its largest power of ``x`` gives a basis of the saturation.
    """
    ring = I.ring
    perm = [i for i in range(ring.nvars) if i != var] + [var]
    names = tuple(ring.names[i] for i in perm)
    big = GradedRing(names, ring.field, MonomialOrder.weighted([weights[i] for i in perm]))
    G = buchberger([g.map_to(big) for g in I.generators], ring=big)
    last = big.nvars - 1
    out = []
    for g in G.generators:
        k = min(e[last] for e in g.monomials())
        if k:
            g = _divide_var_power(g, last, k)
        out.append(g.map_to(ring))
    return Ideal(ring, sorted(set(out), key=lambda p: p.terms[0][0]))


def _divide_var_power(g: Polynomial, i: int, k: int) -> Polynomial:
    ring = g.ring
    return ring.from_dict({e[:i] + (e[i] - k,) + e[i + 1:]: c for e, c in g.items()})


def _weighted_degree(p: Polynomial, weights) -> int:
    degs = {sum(a * b for a, b in zip(e, weights)) for e in p.monomials()}
    if len(degs) != 1:
        raise PreconditionError(f"{p} is not homogeneous for weights {tuple(weights)}")
    return degs.pop()


def positive_grading(polys, nvars: int, search: int = 4):
    """Positive integer weights making every polynomial homogeneous, or ``None``.

    The standard grading is tried first; otherwise small positive combinations
    of a nullspace basis of the homogeneity constraints are searched.
    """
    rows = []
    for p in polys:
        mons = p.monomials()
        for a, b in zip(mons, mons[1:]):
            rows.append([x - y for x, y in zip(a, b)])
    if all(sum(r) == 0 for r in rows):
        return (1,) * nvars
    basis = _nullspace(rows, nvars)
    if not basis:
        return None
    for coeffs in cartesian(range(search + 1), repeat=len(basis)):
        if not any(coeffs):
            continue
        v = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(nvars)]
        if all(x > 0 for x in v):
            scale = lcm(*(Fraction(x).denominator for x in v))
            ints = [int(x * scale) for x in v]
            g = gcd(*ints)
            return tuple(x // g for x in ints)
    return None


def _nullspace(rows, n: int) -> list[list[Fraction]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def saturation_by_colon(I: Ideal, h: Polynomial, max_steps: int = 64) -> Ideal:
    """Iterate ``I : h`` until it stabilises (independent check of :func:`saturation`)."""
    current = I
    for _ in range(max_steps):
        nxt = ideal_quotient(current, h)
        if nxt == current:
            return nxt
        current = nxt
    raise PreconditionError(f"colon iteration did not stabilise in {max_steps} steps")


def kernel_of_map(source: GradedRing, images) -> Ideal:
    """Kernel of the algebra map sending source variable ``i`` to ``images[i]``.

    ``images`` is a list aligned with the source variables (or a mapping by
    name). Entries may be ``None`` for variables shared with the target ring,
    which map to themselves.
    """
    if isinstance(images, dict):
        images = [images.get(n) for n in source.names]
    images = list(images)
    if len(images) != source.nvars:
        raise PreconditionError("one image per source variable required")
    target = next((img.ring for img in images if img is not None), None)
    if target is None:
        return Ideal(source, [])
    for img in images:
        if img is not None and img.ring != target:
            raise RingMismatchError("images live in different rings")
    shared = [n for n in source.names if n in target.index]
    only_target = [n for n in target.names if n not in source.index]
    for n, img in zip(source.names, images):
        if img is None and n not in target.index:
            raise PreconditionError(f"variable {n} has no image")
    union_names = only_target + list(source.names)
    arity = source.grading_arity
    union = GradedRing(union_names, source.field,
                       MonomialOrder.elimination(len(only_target), source.order),
                       [(0,) * arity] * len(only_target) + list(source.grading))
    gens = []
    for n, img in zip(source.names, images):
        if img is None or (n in shared and img == target.gen(n)):
            continue
        gens.append(union.gen(n) - img.map_to(union))
    if not gens:
        return Ideal(source, [])
    G = buchberger(gens, ring=union)
    return _restrict_gb(G, len(only_target), source)


def krull_dimension(I: Ideal) -> int:
    """Dimension of ``ring / I``; ``-1`` for the unit ideal."""
    G = I.gb()
    if G.is_unit():
        return -1
    lead = leading_term_ideal(G)
    return monomial_ideal_dimension(lead, I.ring.nvars)


def monomial_ideal_dimension(monos, nvars: int) -> int:
    """``nvars`` minus the minimum size of a variable set meeting every support."""
    supports = sorted({frozenset(i for i, e in enumerate(m) if e) for m in monos}, key=len)
    if any(not s for s in supports):
        return -1
    best = [nvars]

    def search(chosen: frozenset, remaining: list):
        if len(chosen) >= best[0]:
            return
        rest = [s for s in remaining if not (s & chosen)]
        if not rest:
            best[0] = len(chosen)
            return
        smallest = min(rest, key=len)
        for v in sorted(smallest):
            search(chosen | {v}, rest)

    search(frozenset(), supports)
    return nvars - best[0]
