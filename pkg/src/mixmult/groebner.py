"""Buchberger's algorithm with Gebauer-Moeller pair elimination.

Pairs are selected by the sugar flavour of the normal strategy (smallest
sugar degree, then smallest lcm) for degree compatible orders and by the
plain normal strategy otherwise. Basis elements are kept monic; over QQ the
coefficients are ``gmpy2.mpq`` so the monic arithmetic stays cheap. The
returned basis is the unique reduced Groebner basis, sorted by leading
monomial.
"""
from __future__ import annotations

from heapq import heapify, heappop, heappush

from .errors import PreconditionError, ResourceError, RingMismatchError
from .polynomial import Polynomial
from .ring import DEGREE_LIMIT, GradedRing, MonomialOrder


class _Elem:
    """Monic basis element in key form."""

    __slots__ = ("terms", "lead", "exps", "pack", "sugar", "tail")

    def __init__(self, terms, exps, pack, sugar):
        self.terms = terms
        self.lead = terms[0][0]
        self.tail = terms[1:]
        self.exps = exps
        self.pack = pack
        self.sugar = sugar


class _Reducer:
    """Shared state for reductions in one ring: field modulus and pack cache."""

    def __init__(self, ring: GradedRing):
        self.ring = ring
        self.mod = ring.field.modulus
        self.guard = ring.guard_mask
        self._packs: dict[int, int] = {}
        self._decode = ring.decode
        self._pack = ring.pack

    def pack_of(self, key: int) -> int:
        p = self._packs.get(key)
        if p is None:
            p = self._pack(self._decode(key))
            self._packs[key] = p
        return p

    def monic(self, terms):
        lc = terms[0][1]
        if lc == 1:
            return terms
        mod = self.mod
        if mod:
            inv = pow(lc, -1, mod)
            return [(k, c * inv % mod) for k, c in terms]
        inv = 1 / lc
        return [(k, c * inv) for k, c in terms]

    def reduce(self, acc: dict, basis, full: bool = True):
        """Reduce the polynomial held in ``acc`` (``{key: coeff}``) by ``basis``.

        Returns the remainder as a descending term list. With ``full=False``
        only the leading term is reduced and the remainder is returned as soon
        as its leading term is irreducible.
        """
        mod = self.mod
        guard = self.guard
        pack_of = self.pack_of
        heap = [-k for k in acc]
        heapify(heap)
        out = []
        while heap:
            k = -heappop(heap)
            c = acc.pop(k, None)
            if c is None:
                continue
            pk = pack_of(k)
            for g in basis:
                if not (pk - g.pack) & guard:
                    break
            else:
                out.append((k, c))
                if not full:
                    rest = sorted(acc.items(), reverse=True, key=_first)
                    return out + rest
                continue
            shift = k - g.lead
            get = acc.get
            if mod:
                for kg, cg in g.tail:
                    kk = kg + shift
                    old = get(kk)
                    if old is None:
                        acc[kk] = -c * cg % mod
                        heappush(heap, -kk)
                    else:
                        new = (old - c * cg) % mod
                        if new:
                            acc[kk] = new
                        else:
                            del acc[kk]
            else:
                for kg, cg in g.tail:
                    kk = kg + shift
                    old = get(kk)
                    if old is None:
                        acc[kk] = -c * cg
                        heappush(heap, -kk)
                    else:
                        new = old - c * cg
                        if new:
                            acc[kk] = new
                        else:
                            del acc[kk]
        return out


def _first(item):
    return item[0]


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class GroebnerBasis:
    """Reduced Groebner basis of an ideal for the order of ``ring``."""

    def __init__(self, ring: GradedRing, generators: list[Polynomial]):
        self.ring = ring
        self.generators = list(generators)
        self._elems = None

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.generators == other.generators)

    def __repr__(self) -> str:
        return f"GroebnerBasis({[str(g) for g in self.generators]})"

    def is_unit(self) -> bool:
        return any(g.is_constant() and g for g in self.generators)

    def _basis_elems(self):
        if self._elems is None:
            ring = self.ring
            self._elems = [
                _Elem(list(g.terms), g.leading_monomial, ring.pack(g.leading_monomial), 0)
                for g in self.generators
            ]
        return self._elems

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return ideal_membership(p, self)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return leading_term_ideal(self)


def _check_ring(p: Polynomial, G: GroebnerBasis) -> None:
    if p.ring != G.ring:
        raise RingMismatchError(
            f"polynomial ring {p.ring!r} (order {p.ring.order}) does not match "
            f"basis ring {G.ring!r} (order {G.ring.order})")


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``p`` modulo ``G``."""
    _check_ring(p, G)
    if not p.terms:
        return p
    reducer = _Reducer(G.ring)
    out = reducer.reduce(dict(p.terms), G._basis_elems())
    return Polynomial(G.ring, out)


def ideal_membership(p: Polynomial, G: GroebnerBasis) -> bool:
    _check_ring(p, G)
    if not p.terms:
        return True
    reducer = _Reducer(G.ring)
    return not reducer.reduce(dict(p.terms), G._basis_elems(), full=False)


def leading_term_ideal(G: GroebnerBasis) -> list[tuple[int, ...]]:
    """Minimal monomial generators of the leading-term ideal."""
    return minimalize_monomials(g.leading_monomial for g in G.generators)


def minimalize_monomials(monos) -> list[tuple[int, ...]]:
    """Drop monomials divisible by another; result sorted for determinism."""
    uniq = sorted(set(tuple(m) for m in monos), key=lambda m: (sum(m), m))
    kept: list[tuple[int, ...]] = []
    for m in uniq:
        if not any(all(a <= b for a, b in zip(k, m)) for k in kept):
            kept.append(m)
    return kept


def _degree_compatible(order: MonomialOrder) -> bool:
    return len(order.blocks) == 1 and order.blocks[0][0] in ("grevlex", "wgrevlex")


def buchberger(generators, order: MonomialOrder | None = None, ring: GradedRing | None = None,
               max_pairs: int | None = None, strategy: str = "auto") -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    If ``order`` differs from the generators' ring order the computation
    happens in a copy of the ring with that order. ``strategy`` is ``"sugar"``,
    ``"normal"`` (smallest lcm first) or ``"auto"``: sugar for degree
    compatible orders, normal for lex and block orders, where sugar
    selection lets coefficients blow up on inhomogeneous input.
    """
    if strategy not in ("auto", "sugar", "normal"):
        raise PreconditionError(f"unknown selection strategy {strategy!r}")
    generators = list(generators)
    if ring is None:
        if not generators:
            raise PreconditionError("buchberger needs a ring when given no generators")
        ring = generators[0].ring
    for g in generators:
        if g.ring.names != ring.names or g.ring.field != ring.field:
            raise RingMismatchError("generators live in different rings")
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
    gens = [g if g.ring == ring else g.map_to(ring) for g in generators]
    gens = [g for g in gens if g.terms]
    if not gens:
        return GroebnerBasis(ring, [])

    use_sugar = strategy == "sugar" or (strategy == "auto" and _degree_compatible(ring.order))
    reducer = _Reducer(ring)
    decode, pack = ring.decode, ring.pack
    sdeg = ring.sugar_degree
    elems: list[_Elem] = []
    active: list[int] = []
    pairs: list[tuple] = []
    counter = 0

    def make_elem(terms, sugar):
        exps = decode(terms[0][0])
        return _Elem(terms, exps, pack(exps), sugar)

    def update(ih: int):
        nonlocal pairs, active, counter
        h = elems[ih]
        mh = h.exps
        ph = h.pack
        guard = reducer.guard
        cands = []
        for ig in active:
            g = elems[ig]
            lcm = _lcm(mh, g.exps)
            cands.append((ig, lcm, pack(lcm), sum(x + y for x, y in zip(mh, g.exps)) == sum(lcm)))
        # chain criterion among new pairs, coprime pairs kept for now
        kept = []
        for idx, (ig, lcm, plcm, coprime) in enumerate(cands):
            if coprime:
                kept.append((ig, lcm, plcm, coprime))
                continue
            redundant = False
            for jdx, (jg, _, qlcm, _) in enumerate(cands):
                if jdx == idx:
                    continue
                if not (plcm - qlcm) & guard:
                    # other lcm divides this lcm; break ties by index
                    if qlcm != plcm or jdx < idx:
                        redundant = True
                        break
            if not redundant:
                kept.append((ig, lcm, plcm, coprime))
        # product criterion
        new_pairs = []
        for ig, lcm, plcm, coprime in kept:
            if coprime:
                continue
            g = elems[ig]
            if sum(lcm) >= DEGREE_LIMIT:
                raise OverflowError("S-polynomial degree exceeds the exponent limit")
            deg = sdeg(lcm)
            sugar = max(h.sugar + deg - sdeg(mh), g.sugar + deg - sdeg(g.exps))
            counter += 1
            new_pairs.append((sugar if use_sugar else 0, ring.encode(lcm), counter, ig, ih, plcm))
        # filter old pairs (Buchberger triangle criterion)
        old = []
        for pr in pairs:
            _, _, _, i1, i2, plcm = pr
            if (plcm - ph) & guard:
                old.append(pr)
                continue
            e1, e2 = elems[i1].exps, elems[i2].exps
            if pack(_lcm(e1, mh)) == plcm or pack(_lcm(e2, mh)) == plcm:
                old.append(pr)
        pairs = old + new_pairs
        heapify(pairs)
        active = [ig for ig in active if (elems[ig].pack - ph) & guard] + [ih]

    # seed: inter-reduce inputs in increasing order of leading monomial
    seeds = []
    for g in gens:
        terms = reducer.monic(list(g.terms))
        seeds.append((terms, max(sdeg(e) for e in g.monomials())))
    seeds.sort(key=lambda t: t[0][0][0])
    for terms, sugar in seeds:
        basis = [elems[i] for i in active]
        rem = reducer.reduce(dict(terms), basis)
        if not rem:
            continue
        rem = reducer.monic(rem)
        elems.append(make_elem(rem, sugar))
        update(len(elems) - 1)

    processed = 0
    while pairs:
        sugar, _, _, i, j, _ = heappop(pairs)
        processed += 1
        if max_pairs is not None and processed > max_pairs:
            raise ResourceError(f"Groebner basis exceeded {max_pairs} pair reductions")
        fi, fj = elems[i], elems[j]
        lcm_key = ring.encode(_lcm(fi.exps, fj.exps))
        si, sj = lcm_key - fi.lead, lcm_key - fj.lead
        acc = {k + si: c for k, c in fi.tail}
        mod = reducer.mod
        for k, c in fj.tail:
            kk = k + sj
            v = acc.get(kk, 0) - c
            if mod:
                v %= mod
            if v:
                acc[kk] = v
            else:
                acc.pop(kk, None)
        if not acc:
            continue
        basis = [elems[a] for a in active]
        rem = reducer.reduce(acc, basis)
        if not rem:
            continue
        rem = reducer.monic(rem)
        elems.append(make_elem(rem, sugar))
        update(len(elems) - 1)
        if rem[0][0] == 0:
            break  # unit ideal

    basis = [elems[a] for a in active]
    if any(e.lead == 0 for e in basis):
        return GroebnerBasis(ring, [ring.one])
    final = []
    for e in basis:
        others = [b for b in basis if b is not e]
        tail = reducer.reduce(dict(e.tail), others) if e.tail else []
        final.append(Polynomial(ring, [e.terms[0]] + tail))
    final.sort(key=lambda p: p.terms[0][0])
    return GroebnerBasis(ring, final)


def is_groebner_basis(G) -> bool:
    """Check that every S-polynomial of ``G`` (a basis or a list of polynomials) reduces to zero."""
    if not isinstance(G, GroebnerBasis):
        polys = [p for p in G if p]
        if not polys:
            return True
        G = GroebnerBasis(polys[0].ring, polys)
    gens = G.generators
    ring = G.ring
    elems = G._basis_elems()
    reducer = _Reducer(ring)
    mod = reducer.mod
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            fi, fj = elems[a], elems[b]
            lcm_key = ring.encode(_lcm(fi.exps, fj.exps))
            si, sj = lcm_key - fi.lead, lcm_key - fj.lead
            ci, cj = gens[a].leading_coefficient, gens[b].leading_coefficient
            acc: dict = {}
            for k, c in fi.terms:
                acc[k + si] = c * cj
            for k, c in fj.terms:
                kk = k + sj
                v = acc.get(kk, 0) - c * ci
                if mod:
                    v %= mod
                if v:
                    acc[kk] = v
                else:
                    acc.pop(kk, None)
            if acc and reducer.reduce(acc, elems):
                return False
    return True
