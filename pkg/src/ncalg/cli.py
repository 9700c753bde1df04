"""Command-line front end.  Every subcommand prints one JSON document.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .cache import ReportCache, cache_key, default_cache_dir
from .centralizer import centralizer, centralizer_auto, nc_root
from .errors import NcalgError
from .expr import parse_expr, max_generator, lower
from .fields import GF, MERSENNE31, PrimeField, parse_field
from .genmat import ConcreteMatrix, charpoly, minpoly, pi_map, pi_test, spectral_probe, ut_eval
from .words import OmegaClass, bergman_projection, inf_cmp
from .freealg import word_text


class UsageError(NcalgError):
    pass


def _poly(text, field, s):
    e = parse_expr(text, s)
    if s is None:
        s = max(2, max_generator(e) + 1)
    return lower(e, field, s)


def parse_word(text: str) -> tuple:
    """``z0 z1 z0``, ``xyx`` (x, y, z aliases) or letters ``aba`` (a = 0)."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    if re.fullmatch(r"(z\d+\s*)+", text):
        return tuple(int(t) for t in re.findall(r"z(\d+)", text))
    compact = text.replace(" ", "")
    if set(compact) <= set("xyz"):
        return tuple("xyz".index(ch) for ch in compact)
    if re.fullmatch(r"[a-w]+", compact):
        return tuple(ord(ch) - ord("a") for ch in compact)
    raise UsageError(f"cannot read word {text!r}")


def _prime_q(args, default):
    if args.q is not None:
        return args.q
    if args.field is not None:
        F = parse_field(args.field)
        if not isinstance(F, PrimeField):
            raise UsageError("this command needs a prime field")
        return F.p
    return default


def _matrix(text, field):
    rows = json.loads(text)
    return ConcreteMatrix(field, [[Fraction(str(x)) if isinstance(x, str) else x for x in r]
                                  for r in rows])


def cmd_centralizer(args):
    F = parse_field(args.field or f"p:{MERSENNE31}")
    f = _poly(args.f, F, args.s)
    mode = f"auto:{args.max_degree}" if args.auto_degree else ""
    key = cache_key(f"{f.to_text()}|s={f.nvars}", F.name, args.degree, mode)
    cache = None if args.no_cache else ReportCache(args.cache_dir or default_cache_dir())
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit, 1 if "counterexample" in json.loads(hit) else 0
    if args.auto_degree:
        rep = centralizer_auto(f, args.degree, args.max_degree)
    else:
        rep = centralizer(f, args.degree)
    data = rep.to_json()
    data["s"] = f.nvars
    text = json.dumps(data)
    if cache is not None:
        cache.put(key, text)
    return text, 1 if rep.counterexample is not None else 0


def cmd_pitest(args):
    q = _prime_q(args, MERSENNE31)
    f = _poly(args.f, GF(q), args.s)
    return pi_test(f, args.n, args.samples, args.seed, q).to_json(), 0


def cmd_charpoly(args):
    if args.matrix is not None:
        F = parse_field(args.field or "p:7")
        M = _matrix(args.matrix, F)
        cp = charpoly(M)
        return {"n": M.n, "field": F.name, "coeffs": cp.to_json(), "text": cp.to_text()}, 0
    if args.f is None:
        raise UsageError("give -f with -n, or --matrix")
    F = parse_field(args.field or f"p:{MERSENNE31}")
    f = _poly(args.f, F, args.s)
    cp = charpoly(pi_map(f, args.n))
    return {"n": args.n, "field": F.name, "f": f.to_text(), "coeffs": cp.to_json(),
            "text": cp.to_text()}, 0


def cmd_minpoly(args):
    F = parse_field(args.field or "p:7")
    M = _matrix(args.matrix, F)
    mp = minpoly(M)
    return {"n": M.n, "field": F.name, "coeffs": mp.to_json(), "text": mp.to_text()}, 0


def cmd_spectral(args):
    q = _prime_q(args, 65537)
    f = _poly(args.f, GF(q), args.s)
    return spectral_probe(f, args.n, args.trials, args.seed, q).to_json(), 0


def _order(args):
    return None if args.order is None else parse_word(args.order)


def cmd_wordcmp(args):
    u, v = parse_word(args.u), parse_word(args.v)
    order = _order(args)
    c = inf_cmp(u, v, order)
    return {"cmp": c.name, "u": word_text(u), "v": word_text(v),
            "u_class": OmegaClass.of(u).to_text(), "v_class": OmegaClass.of(v).to_text()}, 0


def cmd_bergman(args):
    F = parse_field(args.field or f"p:{MERSENNE31}")
    exprs = [parse_expr(t, args.s) for t in args.f]
    s = args.s or max([2] + [max_generator(e) + 1 for e in exprs])
    G = [lower(e, F, s) for e in exprs]
    z, images = bergman_projection(G, _order(args))
    nonconst = any(im.degree >= 1 for im in images)
    return {"z": z.to_text(), "images": [im.to_json() for im in images],
            "generators": [g.to_text() for g in G], "nonconstant": nonconst}, 0 if nonconst else 1


def cmd_ncroot(args):
    F = parse_field(args.field or f"p:{MERSENNE31}")
    h = _poly(args.f, F, args.s)
    g = nc_root(h, args.k)
    return {"h": h.to_text(), "k": args.k, "root": None if g is None else g.to_text()}, 0


def cmd_uttrace(args):
    q = _prime_q(args, MERSENNE31)
    f = _poly(args.f, GF(q), args.s)
    img = ut_eval(f, args.n, args.seed, q)
    return {"f": f.to_text(), "n": args.n, "seed": args.seed, "q": q, "trace": img.trace(),
            "strictly_upper": img.is_strictly_upper(), "zero": img.is_zero(),
            "matrix": img.to_json()}, 0


def cmd_verify_all(args):
    from .acceptance import run_all

    results = run_all()
    for r in results:
        print(r.line(), file=sys.stderr)
    ok = all(r.passed for r in results)
    return {"passed": ok, "criteria": [r.to_json() for r in results]}, 0 if ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="'q' for the rationals or 'p:<prime>'")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="accepted for compatibility; output is always JSON")
    common.add_argument("--cache-dir", help="cache directory (default $NCALG_CACHE or ~/.cache/ncalg)")
    common.add_argument("-s", type=int, default=None, help="alphabet size (default: inferred, at least 2)")

    p = argparse.ArgumentParser(prog="ncalg", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("centralizer", parents=[common])
    c.add_argument("-f", required=True)
    c.add_argument("-d", "--degree", type=int, default=6)
    c.add_argument("--auto-degree", action="store_true")
    c.add_argument("--max-degree", type=int, default=12)
    c.add_argument("--no-cache", action="store_true")
    c.set_defaults(func=cmd_centralizer)

    c = sub.add_parser("pitest", parents=[common])
    c.add_argument("-f", required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--samples", type=int, default=50)
    c.add_argument("--q", type=int)
    c.set_defaults(func=cmd_pitest)

    c = sub.add_parser("charpoly", parents=[common])
    c.add_argument("-f")
    c.add_argument("-n", type=int, default=2)
    c.add_argument("--matrix", help="JSON row-major matrix")
    c.set_defaults(func=cmd_charpoly)

    c = sub.add_parser("minpoly", parents=[common])
    c.add_argument("--matrix", required=True)
    c.set_defaults(func=cmd_minpoly)

    c = sub.add_parser("spectral", parents=[common])
    c.add_argument("-f", required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--trials", type=int, default=200)
    c.add_argument("--q", type=int)
    c.set_defaults(func=cmd_spectral)

    c = sub.add_parser("wordcmp", parents=[common])
    c.add_argument("u")
    c.add_argument("v")
    c.add_argument("--order", help="generators from smallest to largest, e.g. 'ba'")
    c.set_defaults(func=cmd_wordcmp)

    c = sub.add_parser("bergman", parents=[common])
    c.add_argument("-f", action="append", required=True, help="generator; repeat for a set")
    c.add_argument("--order")
    c.set_defaults(func=cmd_bergman)

    c = sub.add_parser("ncroot", parents=[common])
    c.add_argument("-f", required=True)
    c.add_argument("-k", type=int, required=True)
    c.set_defaults(func=cmd_ncroot)

    c = sub.add_parser("uttrace", parents=[common])
    c.add_argument("-f", required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--q", type=int)
    c.set_defaults(func=cmd_uttrace)

    c = sub.add_parser("verify-all", parents=[common])
    c.set_defaults(func=cmd_verify_all)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        payload, code = args.func(args)
    except NcalgError as exc:
        out.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2
    out.write((payload if isinstance(payload, str) else json.dumps(payload)) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
