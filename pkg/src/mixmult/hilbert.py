"""Multigraded Hilbert series of quotients by homogeneous ideals.

Every variable of the ring must be graded by a standard unit vector, so the
series of ``ring / I`` is ``N(t) / prod (1 - t_i)^{d_i}`` where ``d_i`` counts
the variables of degree ``e_i``. The numerator (the K-polynomial) is computed
on the lead-term ideal by pivot recursion.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from math import comb, factorial, prod

from .errors import PreconditionError, ResourceError
from .groebner import leading_term_ideal

BRUTEFORCE_LIMIT = 10**7


class HilbertSeries:
    """``numerator / prod (1 - t_i)^{denominator[i]}`` with integer numerator.

    ``numerator`` maps exponent tuples (length ``arity``) to nonzero ints.
    """

    __slots__ = ("arity", "numerator", "denominator")

    def __init__(self, numerator: dict, denominator):
        denominator = tuple(int(d) for d in denominator)
        if any(d < 0 for d in denominator):
            raise PreconditionError("negative denominator exponent")
        self.arity = len(denominator)
        self.numerator = {tuple(e): int(c) for e, c in numerator.items() if c}
        for e in self.numerator:
            if len(e) != self.arity:
                raise PreconditionError("numerator exponent has the wrong length")
        self.denominator = denominator

    def __eq__(self, other) -> bool:
        """Equality of rational functions (cross-multiplied)."""
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        if self.arity != other.arity:
            return False
        top = tuple(max(a, b) for a, b in zip(self.denominator, other.denominator))
        lhs = self.numerator
        for i, (a, t) in enumerate(zip(self.denominator, top)):
            lhs = _times_one_minus(lhs, i, t - a)
        rhs = other.numerator
        for i, (b, t) in enumerate(zip(other.denominator, top)):
            rhs = _times_one_minus(rhs, i, t - b)
        return lhs == rhs

    def __hash__(self):
        r = reduce_hilbert(self)
        return hash((frozenset(r.numerator.items()), r.denominator))

    def __repr__(self) -> str:
        return f"HilbertSeries({self.format()})"

    def numerator_degree(self, i: int) -> int:
        return max((e[i] for e in self.numerator), default=0)

    def format(self, names=None) -> str:
        names = names or [f"T{i}" for i in range(self.arity)]
        num = format_numerator(self.numerator, names)
        den = "*".join(f"(1 - {n})^{d}" if d > 1 else f"(1 - {n})"
                       for n, d in zip(names, self.denominator) if d)
        return f"({num}) / ({den})" if den else num

    def coefficient(self, m) -> int:
        """Coefficient of ``t^m`` in the power-series expansion."""
        m = tuple(m)
        total = 0
        for e, c in self.numerator.items():
            term = c
            for mi, ei, d in zip(m, e, self.denominator):
                k = mi - ei
                if k < 0:
                    term = 0
                    break
                term *= comb(k + d - 1, d - 1) if d else (1 if k == 0 else 0)
                if not term:
                    break
            total += term
        return total

    def specialize(self, slot: int, value: int = 1) -> HilbertSeries:
        """Set ``t_slot = value`` in the numerator and drop the slot.

        Only valid when the slot has no denominator factor.
        """
        if self.denominator[slot]:
            raise PreconditionError(f"slot {slot} still has a denominator factor")
        acc: dict = {}
        for e, c in self.numerator.items():
            k = e[:slot] + e[slot + 1:]
            acc[k] = acc.get(k, 0) + c * value ** e[slot]
        return HilbertSeries(acc, self.denominator[:slot] + self.denominator[slot + 1:])


def format_numerator(numerator: dict, names) -> str:
    if not numerator:
        return "0"
    items = sorted(numerator.items(), key=lambda kv: (sum(kv[0]), [-x for x in kv[0]]))
    out = []
    for e, c in items:
        mono = "".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag}{mono}" if mono else str(mag))
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def _times_one_minus(num: dict, i: int, power: int) -> dict:
    for _ in range(power):
        acc = dict(num)
        for e, c in num.items():
            k = e[:i] + (e[i] + 1,) + e[i + 1:]
            acc[k] = acc.get(k, 0) - c
        num = {e: c for e, c in acc.items() if c}
    return num


def _divide_one_minus(num: dict, i: int):
    """``num / (1 - t_i)`` if exact, else ``None``."""
    groups: dict = {}
    for e, c in num.items():
        rest = e[:i] + e[i + 1:]
        groups.setdefault(rest, {})[e[i]] = c
    out = {}
    for rest, coeffs in groups.items():
        top = max(coeffs)
        run = 0
        for j in range(top + 1):
            run += coeffs.get(j, 0)
            if j == top:
                if run:
                    return None
            elif run:
                out[rest[:i] + (j,) + rest[i:]] = run
    return out


def reduce_hilbert(H: HilbertSeries) -> HilbertSeries:
    """Cancel common ``(1 - t_i)`` factors between numerator and denominator."""
    num = H.numerator
    den = list(H.denominator)
    for i in range(H.arity):
        while den[i] and num:
            q = _divide_one_minus(num, i)
            if q is None:
                break
            num = q
            den[i] -= 1
    return HilbertSeries(num, den)


# -- monomial ideal K-polynomials ---------------------------------------------

def _unit_slots(ring) -> list[int]:
    slots = []
    for name, g in zip(ring.names, ring.grading):
        if sum(g) != 1 or any(x not in (0, 1) for x in g):
            raise PreconditionError(
                f"variable {name} has grading {g}; only unit-vector gradings are supported")
        slots.append(g.index(1))
    return slots


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=sum)
    kept: list[tuple] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(k, g)) for k in kept):
            kept.append(g)
    return kept


class _KPoly:
    def __init__(self, slots: list[int], arity: int):
        self.slots = slots
        self.arity = arity

    def deg(self, m) -> tuple:
        d = [0] * self.arity
        for e, s in zip(m, self.slots):
            if e:
                d[s] += e
        return tuple(d)

    def __call__(self, gens: list[tuple]) -> dict:
        zero = (0,) * self.arity
        if not gens:
            return {zero: 1}
        if len(gens) == 1:
            return _poly_sub({zero: 1}, {self.deg(gens[0]): 1})
        # pairwise coprime generators: product of (1 - t^deg)
        support_seen: set = set()
        coprime = True
        for g in gens:
            s = {i for i, e in enumerate(g) if e}
            if s & support_seen:
                coprime = False
                break
            support_seen |= s
        if coprime:
            out = {zero: 1}
            for g in gens:
                out = _poly_mul(out, _poly_sub({zero: 1}, {self.deg(g): 1}))
            return out
        # pivot on the variable occurring in most generators, with the median
        # exponent taken over non-pure-power generators so the pivot is not in M
        nvars = len(gens[0])
        counts = [0] * nvars
        mixed_vars = set()
        for g in gens:
            support = [i for i, e in enumerate(g) if e]
            for i in support:
                counts[i] += 1
            if len(support) > 1:
                mixed_vars.update(support)
        var = max(sorted(mixed_vars), key=lambda i: counts[i])
        exps = sorted(g[var] for g in gens
                      if g[var] and sum(1 for x in g if x) > 1)
        e = exps[len(exps) // 2]
        pivot = tuple(e if i == var else 0 for i in range(len(gens[0])))
        with_pivot = _minimalize([g for g in gens if g[var] < e] + [pivot])
        colon = _minimalize([g[:var] + (max(g[var] - e, 0),) + g[var + 1:] for g in gens])
        left = self(with_pivot)
        right = self(colon)
        return _poly_add(left, _poly_shift(right, self.deg(pivot)))


def _poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _poly_sub(a: dict, b: dict) -> dict:
    return _poly_add(a, {k: -c for k, c in b.items()})


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _poly_shift(a: dict, d: tuple) -> dict:
    return {tuple(x + y for x, y in zip(k, d)): c for k, c in a.items()}


def monomial_hilbert_series(ring, monomials) -> HilbertSeries:
    """Unreduced series of ``ring / (monomials)``."""
    slots = _unit_slots(ring)
    arity = ring.grading_arity
    gens = _minimalize([tuple(m) for m in monomials])
    num = _KPoly(slots, arity)(gens)
    den = [0] * arity
    for s in slots:
        den[s] += 1
    return HilbertSeries(num, den)


def multigraded_hilbert_series(I) -> HilbertSeries:
    """Unreduced multigraded Hilbert series of ``I.ring / I``."""
    ring = I.ring
    _unit_slots(ring)
    for g in I.generators:
        if g.multidegree() is None:
            raise PreconditionError(f"generator {g} is not homogeneous for the grading")
    G = I.gb()
    return monomial_hilbert_series(ring, leading_term_ideal(G))


def hilbert_coefficient(H: HilbertSeries, u) -> Fraction:
    """Coefficient ``a_u`` of the Hilbert polynomial in the binomial basis.

    ``P(m) = sum_u a_u * prod binom(m_i + u_i, u_i)`` with ``0 <= u_i <= s_i``
    where ``s_i`` is the denominator exponent minus one.
    """
    u = tuple(u)
    if len(u) != H.arity:
        raise PreconditionError(f"index {u} has the wrong length for a {H.arity}-graded series")
    s = [d - 1 for d in H.denominator]
    for ui, si in zip(u, s):
        if ui < 0 or ui > si:
            raise PreconditionError(f"index {u} out of range for s = {tuple(s)}")
    orders = [si - ui for si, ui in zip(s, u)]
    total = 0
    for e, c in H.numerator.items():
        term = c
        for ei, k in zip(e, orders):
            if ei < k:
                term = 0
                break
            term *= factorial(ei) // factorial(ei - k)
        total += term
    sign = -1 if sum(orders) % 2 else 1
    return Fraction(sign * total, prod(factorial(k) for k in orders))


def hilbert_polynomial_value(H: HilbertSeries, m) -> Fraction:
    """``P(m)`` assembled from every ``a_u``."""
    s = [d - 1 for d in H.denominator]
    if any(si < 0 for si in s):
        return Fraction(0)
    total = Fraction(0)
    for u in cartesian(*(range(si + 1) for si in s)):
        a = hilbert_coefficient(H, u)
        if a:
            total += a * prod(comb(mi + ui, ui) for mi, ui in zip(m, u))
    return total


def series_coefficient_bruteforce(I, m) -> int:
    """Count standard monomials of multidegree ``m`` by enumeration."""
    ring = I.ring
    slots = _unit_slots(ring)
    m = tuple(m)
    if len(m) != ring.grading_arity:
        raise PreconditionError("multidegree has the wrong length")
    groups = [[v for v, s in enumerate(slots) if s == j] for j in range(len(m))]
    sizes = [comb(mj + len(g) - 1, len(g) - 1) if g else (1 if mj == 0 else 0)
             for mj, g in zip(m, groups)]
    if prod(sizes) > BRUTEFORCE_LIMIT:
        raise ResourceError(f"enumeration of {prod(sizes)} monomials exceeds the limit")
    if not prod(sizes):
        return 0
    lead = leading_term_ideal(I.gb()) if I.generators else []
    pieces = [list(_compositions(mj, len(g))) for mj, g in zip(m, groups)]
    count = 0
    for choice in cartesian(*pieces):
        exps = [0] * ring.nvars
        for g, comp in zip(groups, choice):
            for v, e in zip(g, comp):
                exps[v] = e
        if not any(all(a <= b for a, b in zip(L, exps)) for L in lead):
            count += 1
    return count


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
