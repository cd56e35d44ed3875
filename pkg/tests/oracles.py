"""Independent reference computations used only by the tests."""
from fractions import Fraction
from itertools import product

import sympy


def compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def count_standard_monomials(gens, groups, degree):
    """Monomials of the given multidegree divisible by no generator.

    ``groups`` lists the variable range ``(lo, hi)`` of each grading slot.
    """
    nvars = len(gens[0])
    pieces = [list(compositions(d, hi - lo)) for d, (lo, hi) in zip(degree, groups)]
    count = 0
    for choice in product(*pieces):
        exps = [0] * nvars
        for (lo, _), comp in zip(groups, choice):
            exps[lo:lo + len(comp)] = comp
        if not any(all(g[i] <= exps[i] for i in range(nvars)) for g in gens):
            count += 1
    return count


def count_standard_monomials_total(gens, nvars, degree):
    return count_standard_monomials(gens, [(0, nvars)], (degree,))


def s_polynomial(f, g):
    ring = f.ring
    a, b = f.leading_monomial, g.leading_monomial
    lcm = tuple(max(x, y) for x, y in zip(a, b))
    fa = ring.monomial(tuple(l - x for l, x in zip(lcm, a)), ring.field.inv(f.leading_coefficient))
    gb = ring.monomial(tuple(l - x for l, x in zip(lcm, b)), ring.field.inv(g.leading_coefficient))
    return fa * f - gb * g


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def reduce_to_zero(p, basis):
    """Textbook multivariate division; True when the remainder vanishes."""
    ring = p.ring
    while p:
        lm, lc = p.leading_monomial, p.leading_coefficient
        for g in basis:
            gm = g.leading_monomial
            if _divides(gm, lm):
                shift = tuple(x - y for x, y in zip(lm, gm))
                p = p - ring.monomial(shift, lc * ring.field.inv(g.leading_coefficient)) * g
                break
        else:
            return False
    return True


def sympy_reduced_basis(polys, ring):
    """The reduced grevlex basis from sympy, converted back into ``ring``."""
    syms = sympy.symbols(list(ring.names))
    exprs = []
    for p in polys:
        exprs.append(sum(sympy.Rational(int(c.numerator), int(c.denominator)) * sympy.Mul(*[s ** e for s, e in zip(syms, exps)])
                         for exps, c in p.items()))
    G = sympy.groebner(exprs, *syms, order="grevlex", domain="QQ")
    out = []
    for g in G.exprs:
        poly = sympy.Poly(g, *syms, domain="QQ")
        out.append(sum((ring.monomial(m, Fraction(int(c.p), int(c.q))) for m, c in poly.terms()), ring.zero))
    return out
