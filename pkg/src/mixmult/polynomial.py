"""Sparse polynomials over an exact field.

A :class:`Polynomial` is immutable. Its ``terms`` are ``(key, coeff)`` pairs
sorted strictly descending by monomial key (i.e. by the ring's monomial
order) with no zero coefficients. See :mod:`mixmult.ring` for the key
encoding.
"""
from __future__ import annotations

from .errors import PreconditionError, RingMismatchError
from .ring import DEGREE_LIMIT, GradedRing


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: GradedRing, terms):
        self.ring = ring
        self.terms = tuple(terms)
        self._hash = None

    @classmethod
    def from_key_dict(cls, ring: GradedRing, acc: dict) -> Polynomial:
        mod = ring.field.modulus
        if mod:
            items = [(k, c % mod) for k, c in acc.items() if c % mod]
        else:
            items = [(k, c) for k, c in acc.items() if c]
        items.sort(reverse=True, key=_first)
        return cls(ring, items)

    # -- inspection ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomials(self) -> list[tuple[int, ...]]:
        decode = self.ring.decode
        return [decode(k) for k, _ in self.terms]

    def coefficients(self) -> list:
        return [c for _, c in self.terms]

    def items(self):
        """``(exponent tuple, coefficient)`` pairs in descending order."""
        decode = self.ring.decode
        return [(decode(k), c) for k, c in self.terms]

    def as_dict(self) -> dict:
        return dict(self.items())

    @property
    def leading_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading monomial")
        return self.ring.decode(self.terms[0][0])

    @property
    def leading_coefficient(self):
        if not self.terms:
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.monomials())

    def variables(self) -> set[int]:
        """Indices of variables that occur in some term."""
        used: set[int] = set()
        for e in self.monomials():
            used.update(i for i, x in enumerate(e) if x)
        return used

    def multidegree(self) -> tuple[int, ...] | None:
        """Common grading-weighted degree of all terms, ``None`` if inhomogeneous."""
        if not self.terms:
            raise PreconditionError("multidegree of the zero polynomial")
        wdeg = self.ring.weighted_degree
        degs = {wdeg(e) for e in self.monomials()}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self.terms or self.multidegree() is not None

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: Polynomial) -> None:
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) + c
        return Polynomial.from_key_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        mod = self.ring.field.modulus
        if mod:
            return Polynomial(self.ring, [(k, -c % mod) for k, c in self.terms])
        return Polynomial(self.ring, [(k, -c) for k, c in self.terms])

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) - c
        return Polynomial.from_key_dict(self.ring, acc)

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        if self.total_degree() + other.total_degree() >= DEGREE_LIMIT:
            raise OverflowError("product degree exceeds the exponent limit")
        acc: dict = {}
        get = acc.get
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                k = k1 + k2
                acc[k] = get(k, 0) + c1 * c2
        return Polynomial.from_key_dict(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise PreconditionError("negative exponent")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        c = self.ring.field.convert(c)
        if c == 0:
            return self.ring.zero
        mod = self.ring.field.modulus
        if mod:
            return Polynomial(self.ring, [(k, x * c % mod) for k, x in self.terms])
        return Polynomial(self.ring, [(k, x * c) for k, x in self.terms])

    def mul_term(self, exps, c=1) -> Polynomial:
        shift = self.ring.encode(exps)
        c = self.ring.field.convert(c)
        if c == 0 or not self.terms:
            return self.ring.zero
        mod = self.ring.field.modulus
        if mod:
            return Polynomial(self.ring, [(k + shift, x * c % mod) for k, x in self.terms])
        return Polynomial(self.ring, [(k + shift, x * c) for k, x in self.terms])

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.terms[0][1]))

    def derivative(self, var) -> Polynomial:
        ring = self.ring
        i = ring.index[var] if isinstance(var, str) else var
        acc: dict = {}
        for exps, c in self.items():
            e = exps[i]
            if e:
                shifted = exps[:i] + (e - 1,) + exps[i + 1:]
                acc[ring.encode(shifted)] = c * e
        return Polynomial.from_key_dict(ring, acc)

    def substitute(self, assignment: dict, target: GradedRing | None = None) -> Polynomial:
        """Ring homomorphism sending each variable to the given polynomial.

        ``assignment`` maps variable names (or indices) to polynomials in one
        common target ring, or to field constants when ``target`` is given.
        """
        ring = self.ring
        images: list = [None] * ring.nvars
        for var, img in assignment.items():
            i = ring.index[var] if isinstance(var, str) else var
            images[i] = img
        for img in images:
            if isinstance(img, Polynomial):
                target = target or img.ring
                if img.ring != target:
                    raise RingMismatchError("substitution images live in different rings")
        if target is None:
            target = ring
        images = [img if img is None or isinstance(img, Polynomial) else target.constant(img)
                  for img in images]
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        acc: dict = {}
        for exps, c in self.items():
            term = target.constant(c)
            for i, e in enumerate(exps):
                if e:
                    if images[i] is None:
                        raise PreconditionError(f"variable {ring.names[i]} has no image")
                    term = term * power(i, e)
                    if not term:
                        break
            for k, x in term.terms:
                acc[k] = acc.get(k, 0) + x
        return Polynomial.from_key_dict(target, acc)

    def evaluate_at(self, point: dict) -> Polynomial:
        """Substitute field constants for some variables, keeping the ring."""
        assignment = {name: self.ring.gen(name) for name in self.ring.names}
        for var, val in point.items():
            name = var if isinstance(var, str) else self.ring.names[var]
            assignment[name] = self.ring.constant(val)
        return self.substitute(assignment)

    def map_to(self, target: GradedRing, var_map: dict | None = None) -> Polynomial:
        """Move into ``target``, matching variables by name (or ``var_map``).

        Variables of this ring absent from the target map to zero.
        """
        var_map = var_map or {}
        conv = target.field.convert
        index = [target.index.get(var_map.get(n, n)) for n in self.ring.names]
        acc: dict = {}
        nt = target.nvars
        for exps, c in self.items():
            new = [0] * nt
            dead = False
            for e, j in zip(exps, index):
                if e:
                    if j is None:
                        dead = True
                        break
                    new[j] += e
            if dead:
                continue
            k = target.encode(new)
            acc[k] = acc.get(k, 0) + conv(c)
        return Polynomial.from_key_dict(target, acc)

    # -- protocol ------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) or other is None:
            return other is not None and self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __str__(self) -> str:
        from .parser import format_polynomial
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _first(item):
    return item[0]
