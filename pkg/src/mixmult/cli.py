"""Command line front end: ``mm <subcommand> [session] [flags]``.

Results go to stdout, diagnostics to stderr. Every failure prints a single
``error: <category>: <message>`` line and exits with status 1.
"""
from __future__ import annotations

import argparse
import sys
import time
import warnings
from fractions import Fraction

from .errors import MixMultError, PreconditionError
from .field import field_from_name
from .hilbert import format_numerator, multigraded_hilbert_series, reduce_hilbert
from .ideal import Ideal
from .milnor import euler_characteristic_complement, milnor_number, sectional_milnor_numbers
from .multiplicity import colength, fiber_presentation, mixed_multiplicity
from .parser import format_polynomial, parse_polynomial, parse_ring, parse_session
from .polytope import MIXED_VOLUME_FIELD, bernstein_bound, mixed_volume
from .rees import rees_defining_ideal, rees_defining_ideal_monomial
from .ring import GradedRing, MonomialOrder

COMMANDS = ("rees", "mixed-mult", "mixed-volume", "milnor", "hilbert", "colength", "bernstein")

# mixed volumes in dimension 4 and up run for many minutes
SLOW_DIMENSION = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise PreconditionError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mm", description="Rees algebras, mixed multiplicities and mixed volumes.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("session", nargs="?", help="session file with ring/ideal/poly/polytope declarations")
    p.add_argument("--ideals", help="comma separated ideal names (m is the variable ideal if undeclared)")
    p.add_argument("--polytopes", help="comma separated polytope names")
    p.add_argument("--ring", help='inline ring such as "QQ[x,y,z]"')
    p.add_argument("--poly", action="append", default=[],
                   help="polynomial (inline with --ring, or a poly name in the session); repeatable")
    p.add_argument("--field", help="QQ or GF(p): coefficient field override")
    p.add_argument("--order", choices=("lex", "grevlex"), help="monomial order override")
    p.add_argument("--index", help="comma separated index vector a for mixed-mult")
    p.add_argument("--param", default=None,
                   help="value for the family parameter t (default 1), or NAME=VALUE")
    p.add_argument("--slow", action="store_true", help="allow computations known to take many minutes")
    p.add_argument("--raw-coefficient", action="store_true",
                   help="mixed-mult: accept any index and print the exact series coefficient")
    p.add_argument("--euler", action="store_true",
                   help="milnor: also print the Euler characteristic of the complement")
    p.add_argument("--quotient", action="store_true",
                   help="hilbert: series of R/I with the standard grading instead of the fiber ring")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--timing", action="store_true", help="print wall-clock seconds to stderr")
    return p


# -- input resolution ----------------------------------------------------------

def _read_session(path):
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_session(fh.read())
    except OSError as exc:
        raise PreconditionError(f"cannot read {path}: {exc.strerror}") from None


def _names(text, flag):
    if not text:
        raise PreconditionError(f"{flag} is required")
    names = [s.strip() for s in text.split(",")]
    if any(not s for s in names):
        raise PreconditionError(f"empty name in {flag}")
    return names


def _target_ring(ring: GradedRing, args) -> GradedRing:
    if args.field:
        ring = ring.with_field(field_from_name(args.field))
    if args.order:
        ring = ring.with_order(MonomialOrder.lex() if args.order == "lex" else MonomialOrder.grevlex())
    return ring


def _retarget(I: Ideal, ring: GradedRing) -> Ideal:
    if I.ring == ring:
        return I
    try:
        return Ideal(ring, [g.map_to(ring) for g in I.generators])
    except ZeroDivisionError:
        raise PreconditionError(f"a coefficient denominator vanishes in {ring.field}") from None


def _ideals(doc, args) -> list[Ideal]:
    if doc is None:
        raise PreconditionError("a session file is required for --ideals")
    names = _names(args.ideals, "--ideals")
    for n in names:
        if n != "m":
            doc.ideal(n)
    declared = [doc.ideal(n) for n in names if n in doc.ideals]
    if not declared:
        raise PreconditionError("at least one declared ideal is required")
    ring = _target_ring(declared[0].ring, args)
    out = []
    for n in names:
        if n in doc.ideals:
            out.append(_retarget(doc.ideal(n), ring))
        else:
            out.append(Ideal.variables(ring))
    return out


def _param(args) -> tuple[str, str]:
    if args.param is None:
        return "t", "1"
    name, sep, value = args.param.partition("=")
    return (name.strip(), value.strip()) if sep else ("t", name.strip())


def _polys(doc, args) -> list:
    if not args.poly:
        raise PreconditionError("--poly is required")
    if args.ring:
        ring = _target_ring(parse_ring(args.ring), args)
        pname, pvalue = _param(args)
        if pname in ring.index:
            return [parse_polynomial(text, ring) for text in args.poly]
        try:
            value = Fraction(pvalue)
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(f"--param value {pvalue!r} is not a rational number") from None
        wide = GradedRing(ring.names + (pname,), ring.field, ring.order)
        images = {n: wide.gen(n) for n in ring.names}
        images[pname] = wide.constant(value)
        return [parse_polynomial(text, wide).substitute(images, wide).map_to(ring)
                for text in args.poly]
    if doc is None:
        raise PreconditionError("either --ring or a session file is required")
    out = []
    for name in args.poly:
        f = doc.poly(name)
        out.append(f.map_to(_target_ring(f.ring, args)))
    return out


# -- subcommands ---------------------------------------------------------------

def _cmd_rees(doc, args):
    ideals = _ideals(doc, args)
    if all(I.is_monomial() for I in ideals):
        P = rees_defining_ideal_monomial(ideals)
    else:
        P = rees_defining_ideal(ideals)
    gens = P.minimal_generators()
    yield "variables", ", ".join(P.y_vars())
    yield "generators", len(gens)
    for i, g in enumerate(gens, start=1):
        yield f"generator_{i}", format_polynomial(g)


def _index(args, length):
    if not args.index:
        raise PreconditionError("--index is required")
    try:
        a = tuple(int(x) for x in args.index.split(","))
    except ValueError:
        raise PreconditionError(f"malformed index {args.index!r}") from None
    if len(a) != length:
        raise PreconditionError(f"index has {len(a)} entries but {length} ideals were given")
    return a


def _cmd_mixed_mult(doc, args):
    ideals = _ideals(doc, args)
    a = _index(args, len(ideals))
    value = mixed_multiplicity(ideals, a, raw=args.raw_coefficient)
    yield "index", ",".join(map(str, a))
    yield "mixed_multiplicity", value


def _cmd_mixed_volume(doc, args):
    if doc is None:
        raise PreconditionError("a session file is required for --polytopes")
    polys = [doc.polytope(n) for n in _names(args.polytopes, "--polytopes")]
    if polys[0].dim >= SLOW_DIMENSION and not args.slow:
        raise PreconditionError(f"mixed volumes in dimension {polys[0].dim} are slow; pass --slow")
    field = field_from_name(args.field) if args.field else MIXED_VOLUME_FIELD
    yield "mixed_volume", mixed_volume(polys, field)


def _cmd_milnor(doc, args):
    polys = _polys(doc, args)
    if len(polys) != 1:
        raise PreconditionError("milnor takes exactly one --poly")
    f = polys[0]
    profile = sectional_milnor_numbers(f)
    for i, e in enumerate(profile.values):
        yield f"e_{i}", e
    try:
        yield "milnor_number", milnor_number(f)
    except PreconditionError:
        yield "milnor_number", "infinite"
    if args.euler:
        chi = euler_characteristic_complement(f)
        yield "euler_terms", ",".join(map(str, chi.terms))
        yield "euler_signs", ",".join(f"{s:+d}" for s in chi.signs)
        yield "euler_characteristic", chi.value
        yield "euler_characteristic_constant_sign", chi.constant_sign_value


def _cmd_hilbert(doc, args):
    ideals = _ideals(doc, args)
    if args.quotient:
        if len(ideals) != 1:
            raise PreconditionError("--quotient takes exactly one ideal")
        I = ideals[0]
        ring = I.ring.with_grading([(1,)] * I.ring.nvars)
        H = reduce_hilbert(multigraded_hilbert_series(_retarget(I, ring)))
        names = ["T"]
    else:
        H = fiber_presentation(ideals).series
        names = [f"T{i}" for i in range(H.arity)]
    yield "numerator", format_numerator(H.numerator, names)
    yield "denominator_exponents", ",".join(map(str, H.denominator))
    yield "series", H.format(names)


def _cmd_colength(doc, args):
    ideals = _ideals(doc, args)
    if len(ideals) != 1:
        raise PreconditionError("colength takes exactly one ideal")
    yield "colength", colength(ideals[0])


def _cmd_bernstein(doc, args):
    yield "bernstein_bound", bernstein_bound(_polys(doc, args))


HANDLERS = {
    "rees": _cmd_rees,
    "mixed-mult": _cmd_mixed_mult,
    "mixed-volume": _cmd_mixed_volume,
    "milnor": _cmd_milnor,
    "hilbert": _cmd_hilbert,
    "colength": _cmd_colength,
    "bernstein": _cmd_bernstein,
}


def _emit(records, fmt, out):
    for key, value in records:
        if fmt == "records":
            print(f"{key} = {value}", file=out)
        else:
            print(f"{key.replace('_', ' ')}: {value}", file=out)


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        doc = _read_session(args.session)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            records = list(HANDLERS[args.command](doc, args))
        for message in dict.fromkeys(str(w.message) for w in caught):
            print(f"warning: {message}", file=err)
    except MixMultError as exc:
        print(f"error: {exc.category}: {exc}", file=err)
        return 1
    except RecursionError:
        print("error: resource: recursion limit exceeded", file=err)
        return 1
    except MemoryError:
        print("error: resource: out of memory", file=err)
        return 1
    _emit(records, args.format, out)
    if args.timing:
        print(f"timing = {time.perf_counter() - start:.3f}", file=err)
    return 0


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
