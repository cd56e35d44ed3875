"""Monomial orders and graded polynomial rings.

Monomials are exponent tuples at the API boundary. Internally a ring encodes
each monomial as a single non-negative ``int`` key built from the rows of the
order's weight matrix (each row a non-negative linear form packed into a 32-bit
field). The encoding is additive, so multiplying monomials is adding keys,
dividing is subtracting keys, and comparing monomials in the ring's order is
comparing ints.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import PreconditionError, RingMismatchError
from .field import QQ, Field

FIELD_BITS = 32
FIELD_MASK = (1 << FIELD_BITS) - 1
# Row values (and hence total degrees) must stay below this bound so packed
# fields never carry into each other and the guard bit of the divisibility
# test stays clear.
DEGREE_LIMIT = 1 << (FIELD_BITS - 1)

ORDER_KINDS = ("lex", "grevlex", "wgrevlex")


@dataclass(frozen=True)
class MonomialOrder:
    """A product of lex / grevlex blocks on consecutive variable ranges.

    A block size of ``None`` means "all remaining variables" and may only be
    used for the last block. ``wgrevlex`` blocks compare weighted prefix sums
    using ``weights`` (one positive int per variable of the whole ring).
    """

    blocks: tuple[tuple[str, int | None], ...]
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if not self.blocks:
            raise PreconditionError("monomial order needs at least one block")
        if self.weights is not None and any(w <= 0 for w in self.weights):
            raise PreconditionError("order weights must be positive")
        if any(k == "wgrevlex" for k, _ in self.blocks) and self.weights is None:
            raise PreconditionError("a wgrevlex block needs weights")
        for i, (kind, size) in enumerate(self.blocks):
            if kind not in ORDER_KINDS:
                raise PreconditionError(f"unknown order kind {kind!r}")
            if size is None and i != len(self.blocks) - 1:
                raise PreconditionError("only the last block may be open-ended")
            if size is not None and size < 0:
                raise PreconditionError("negative block size")

    @classmethod
    def lex(cls) -> MonomialOrder:
        return cls((("lex", None),))

    @classmethod
    def grevlex(cls) -> MonomialOrder:
        return cls((("grevlex", None),))

    @classmethod
    def weighted(cls, weights) -> MonomialOrder:
        """Weighted degree, ties broken reverse-lexicographically."""
        return cls((("wgrevlex", None),), tuple(int(w) for w in weights))

    @classmethod
    def block(cls, *blocks: tuple[str, int | None]) -> MonomialOrder:
        return cls(tuple(blocks))

    @classmethod
    def elimination(cls, k: int, rest: MonomialOrder | None = None) -> MonomialOrder:
        """Order eliminating the first ``k`` variables (leading grevlex block)."""
        rest = rest or cls.grevlex()
        blocks = [b for b in rest.blocks if b[1] != 0]
        return cls((("grevlex", k),) + tuple(blocks)) if k else rest

    def spans(self, nvars: int) -> list[tuple[str, int, int]]:
        if self.weights is not None and len(self.weights) != nvars:
            raise PreconditionError(f"order has {len(self.weights)} weights for {nvars} variables")
        out = []
        start = 0
        for kind, size in self.blocks:
            stop = nvars if size is None else start + size
            if stop > nvars:
                raise PreconditionError(f"order {self} needs more than {nvars} variables")
            if stop > start:
                out.append((kind, start, stop))
            start = stop
        if start != nvars:
            raise PreconditionError(f"order {self} covers {start} of {nvars} variables")
        return out

    def __str__(self) -> str:
        if self.weights is not None:
            return f"wgrevlex{self.weights}"
        if len(self.blocks) == 1 and self.blocks[0][1] is None:
            return self.blocks[0][0]
        parts = ", ".join(f"{k}:{'*' if s is None else s}" for k, s in self.blocks)
        return f"block({parts})"


GREVLEX = MonomialOrder.grevlex()
LEX = MonomialOrder.lex()


class GradedRing:
    """Polynomial ring: variable names, coefficient field, order and grading.

    ``grading[i]`` is the degree vector of variable ``i``; all vectors share
    the same length (the grading arity). The default is the standard
    single grading.
    """

    def __init__(self, names, field: Field = QQ, order: MonomialOrder = GREVLEX,
                 grading=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise PreconditionError(f"duplicate variable names in {names}")
        if grading is None:
            grading = tuple((1,) for _ in names)
        grading = tuple(tuple(int(x) for x in g) for g in grading)
        if len(grading) != len(names):
            raise PreconditionError("one grading vector per variable required")
        if grading and len({len(g) for g in grading}) != 1:
            raise PreconditionError("grading vectors must share one length")
        if any(x < 0 for g in grading for x in g):
            raise PreconditionError("grading vectors must be non-negative")
        self.names = names
        self.field = field
        self.order = order
        self.grading = grading
        self.nvars = len(names)
        self.index = {name: i for i, name in enumerate(names)}
        self._spans = order.spans(self.nvars)
        self._build_codec()

    # -- encoding -----------------------------------------------------------
    def _build_codec(self):
        ow = self.order.weights or (1,) * self.nvars
        self._order_weights = tuple(ow)
        rows: list[list[int]] = []
        for kind, start, stop in self._spans:
            if kind == "lex":
                rows.extend([i] for i in range(start, stop))
            else:
                rows.extend(list(range(start, k)) for k in range(stop, start, -1))
        nrows = len(rows)
        self._nrows = nrows
        self._shifts = [FIELD_BITS * (nrows - 1 - r) for r in range(nrows)]
        wkinds = [kind == "wgrevlex" for kind, start, stop in self._spans
                  for _ in range(start, stop)]
        weights = [0] * self.nvars
        for r, row in enumerate(rows):
            for i in row:
                weights[i] += (ow[i] if wkinds[i] else 1) << self._shifts[r]
        self._weights = tuple(weights)
        self._div_shifts = tuple(FIELD_BITS * i for i in range(self.nvars))
        self.guard_mask = sum(1 << (s + FIELD_BITS - 1) for s in self._div_shifts)

    def encode(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self._weights) if e)

    def decode(self, key: int) -> tuple[int, ...]:
        vals = [(key >> s) & FIELD_MASK for s in self._shifts]
        exps = [0] * self.nvars
        r = 0
        for kind, start, stop in self._spans:
            width = stop - start
            block = vals[r:r + width]
            r += width
            if kind == "lex":
                exps[start:stop] = block
            else:
                # block holds (weighted) prefix sums P_width, ..., P_1
                prefix = block[::-1]
                for j in range(width):
                    exps[start + j] = prefix[j] - (prefix[j - 1] if j else 0)
                if kind == "wgrevlex":
                    ow = self._order_weights
                    for j in range(start, stop):
                        exps[j] //= ow[j]
        return tuple(exps)

    def pack(self, exps) -> int:
        """Exponent-packed int used for the guard-bit divisibility test."""
        return sum(e << s for e, s in zip(exps, self._div_shifts) if e)

    def sugar_degree(self, exps) -> int:
        """Degree used by the sugar strategy (weighted for weighted orders)."""
        return sum(e * w for e, w in zip(exps, self._order_weights))

    def var_key(self, i: int) -> int:
        return self._weights[i]

    # -- structure -----------------------------------------------------------
    @property
    def grading_arity(self) -> int:
        return len(self.grading[0]) if self.grading else 0

    def _signature(self):
        return (self.names, self.field, self.order, self.grading)

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, GradedRing)
                                 and self._signature() == other._signature())

    def __hash__(self) -> int:
        return hash(self._signature())

    def __repr__(self) -> str:
        return f"{self.field}[{','.join(self.names)}]"

    def check_same(self, other: GradedRing) -> None:
        if self != other:
            raise RingMismatchError(f"ring mismatch: {self!r} vs {other!r}")

    def with_order(self, order: MonomialOrder) -> GradedRing:
        return GradedRing(self.names, self.field, order, self.grading)

    def with_field(self, field: Field) -> GradedRing:
        return GradedRing(self.names, field, self.order, self.grading)

    def with_grading(self, grading) -> GradedRing:
        return GradedRing(self.names, self.field, self.order, grading)

    # -- elements ------------------------------------------------------------
    @cached_property
    def zero(self):
        from .polynomial import Polynomial
        return Polynomial(self, ())

    @cached_property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        from .polynomial import Polynomial
        c = self.field.convert(c)
        return Polynomial(self, ((0, c),) if c != 0 else ())

    def gen(self, name_or_index):
        from .polynomial import Polynomial
        i = self.index[name_or_index] if isinstance(name_or_index, str) else name_or_index
        return Polynomial(self, ((self._weights[i], self.field.one),))

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        from .polynomial import Polynomial
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise PreconditionError(f"exponent vector {exps} has wrong length for {self!r}")
        if any(e < 0 for e in exps):
            raise PreconditionError("negative exponent")
        if sum(exps) >= DEGREE_LIMIT:
            raise OverflowError("monomial degree exceeds the exponent limit")
        c = self.field.convert(coeff)
        return Polynomial(self, ((self.encode(exps), c),) if c != 0 else ())

    def from_dict(self, terms: dict):
        """Polynomial from ``{exponent tuple: coefficient}``."""
        from .polynomial import Polynomial
        conv = self.field.convert
        acc: dict[int, object] = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise PreconditionError(f"bad exponent vector {exps}")
            if sum(exps) >= DEGREE_LIMIT:
                raise OverflowError("monomial degree exceeds the exponent limit")
            k = self.encode(exps)
            acc[k] = acc.get(k, 0) + conv(c)
        return Polynomial.from_key_dict(self, acc)

    def weighted_degree(self, exps) -> tuple[int, ...]:
        k = self.grading_arity
        out = [0] * k
        for e, g in zip(exps, self.grading):
            if e:
                for j in range(k):
                    out[j] += e * g[j]
        return tuple(out)
