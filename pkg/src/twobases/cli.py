"""Batch command line for the library: every operation behind one entry
point, with deterministic output suitable for scripting.

Numbers are printed from certified brackets only, so a digit never claims
more than the interval supports.  Rational inputs are p/q strings; floats
are never parsed.  Output goes to stdout; notes and errors to stderr.

Exit codes: 0 success, 2 domain error, 3 nothing found within the stated
bounds, 64 malformed usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .bases import AlgBase, alpha_digits, base_from_alpha
from .b2core import certify_b2, f_sign, prop62_pair, solve_qcd, witness_for_V_base
from .classify import classify_base, count_expansions, BaseTag
from .dimension import b2_local_bound, dim_U, entropy
from .enum_b2 import enum_B2, min_derived, qn_ladder
from .errors import DomainError, NotFoundWithinBoundsError
from .words import ComponentSpec, check_generator, parse_epseq

__all__ = ["RunConfig", "run", "main"]


@dataclass
class RunConfig:
    command: str
    precision: int = 30
    jmax: int = 6
    nmax: int = 6
    depth: int = 64
    format: str | None = None  # None = per-command default


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(64)


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a rational: {text!r}")


def _parse_base(spec: str) -> AlgBase:
    """poly:[c0,..,1]@[lo,hi] with ascending integer coefficients, or
    alpha:SEQ with SEQ in pre(per) text form, or a bare rational."""
    if spec.startswith("poly:"):
        body = spec[len("poly:"):]
        if "@" not in body:
            raise DomainError("poly base-spec needs @[lo,hi]")
        ctext, btext = body.split("@", 1)
        for part in (ctext, btext):
            if not (part.startswith("[") and part.endswith("]")):
                raise DomainError(f"malformed base-spec list {part!r}")
        coeffs = [int(t) for t in ctext[1:-1].split(",") if t.strip()]
        lo, hi = (_rat(t) for t in btext[1:-1].split(","))
        return AlgBase.from_poly(coeffs, lo, hi)
    if spec.startswith("alpha:"):
        return base_from_alpha(parse_epseq(spec[len("alpha:"):]))
    return AlgBase.from_rational(_rat(spec))


def _parse_point(text: str):
    """A point to expand: a 0/1 sequence in EPSeq text form (left to the
    counter to evaluate in its base), or a rational p/q."""
    if any(ch in text for ch in "()*") or (text and set(text) <= {"0", "1"}):
        return text
    return _rat(text)


def _dec_floor(x: Fraction, digits: int) -> str:
    scale = 10 ** digits
    n = (x.numerator * scale) // x.denominator
    sign, n = ("-", -n) if n < 0 else ("", n)
    return f"{sign}{n // scale}.{n % scale:0{digits}d}"


def _dec_ceil(x: Fraction, digits: int) -> str:
    scale = 10 ** digits
    n = -((-x.numerator * scale) // x.denominator)
    sign, n = ("-", -n) if n < 0 else ("", n)
    return f"{sign}{n // scale}.{n % scale:0{digits}d}"


def _enclosure(lo: Fraction, hi: Fraction, digits: int) -> dict:
    return {
        "dec": [_dec_floor(lo, digits), _dec_ceil(hi, digits)],
        "exact": [str(lo), str(hi)],
    }


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _emit_csv(header, rows) -> None:
    import csv

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def _component(gen: str) -> ComponentSpec:
    if not check_generator(gen):
        raise DomainError(f"{gen!r} does not generate a component")
    return ComponentSpec(gen)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_alpha(cfg: RunConfig, args) -> int:
    q = _parse_base(args.base)
    digits = alpha_digits(q, args.digits)
    if (cfg.format or "plain") == "json":
        _emit_json({"base": q.to_json(cfg.precision), "alpha_digits": digits})
    else:
        print(digits)
    return 0


def _cmd_classify(cfg: RunConfig, args) -> int:
    q = _parse_base(args.base)
    if args.probable_depth:
        out = _probable_classify(q, args.probable_depth)
    else:
        out = classify_base(q, max_steps=max(cfg.depth, 64) * 64).to_json()
    out["base"] = q.to_json(cfg.precision)
    if (cfg.format or "json") == "plain":
        print(out["class"])
    else:
        _emit_json(out)
    return 0


def _probable_classify(q: AlgBase, depth: int) -> dict:
    """Depth-bounded verdict from a finite alpha prefix; never certified.
    Window ties count against the strict conditions only."""
    w = alpha_digits(q, depth)
    rw = w.translate(str.maketrans("01", "10"))
    strict_up = weak_up = strict_lo = weak_lo = None
    for n in range(1, len(w)):
        a = w[n:]
        b = w[: len(w) - n]
        if strict_up is None and a >= b:
            strict_up = n
        if weak_up is None and a > b:
            weak_up = n
        r = rw[: len(a)]
        if strict_lo is None and r >= a:
            strict_lo = n
        if weak_lo is None and r > a:
            weak_lo = n
    if strict_up is None and strict_lo is None:
        tag = BaseTag.IN_U
    elif weak_up is None and strict_lo is None:
        tag = BaseTag.UBAR_MINUS_U
    elif weak_up is None and weak_lo is None:
        tag = BaseTag.V_MINUS_UBAR
    else:
        tag = BaseTag.NOT_V
    return {"class": tag.value, "probable": True, "depth": depth,
            "note": "finite-prefix verdict, not certified"}


def _cmd_omega(cfg: RunConfig, args) -> int:
    comp = _component(args.gen)
    w = comp.omega(args.n)
    if (cfg.format or "plain") == "json":
        _emit_json({"gen": args.gen, "n": args.n, "omega": w})
    else:
        print(w)
    return 0


def _cmd_ladder(cfg: RunConfig, args) -> int:
    comp = _component(args.gen)
    entries = qn_ladder(comp, args.N)
    fmt = cfg.format or "csv"
    if fmt == "json":
        _emit_json([
            {"n": e.n, "root": e.base.decimal(cfg.precision),
             "minpoly": list(e.base.minpoly()), "alpha": str(e.alpha),
             "beta_word": e.beta_word}
            for e in entries
        ])
    else:
        _emit_csv(["n", "root", "alpha", "beta_word", "minpoly"],
                  [[e.n, e.base.decimal(cfg.precision), str(e.alpha),
                    e.beta_word, " ".join(map(str, e.base.minpoly()))]
                   for e in entries])
    return 0


def _cmd_solve(cfg: RunConfig, args) -> int:
    c, d = parse_epseq(args.c), parse_epseq(args.d)
    root = solve_qcd(c, d, _rat(args.lo), _rat(args.hi))
    if root is None:
        raise NotFoundWithinBoundsError(
            "no defect-function root in the given interval")
    out = {"c": args.c, "d": args.d, "root": root.decimal(cfg.precision),
           "minpoly": list(root.minpoly())}
    if (cfg.format or "json") == "plain":
        print(out["root"])
    else:
        _emit_json(out)
    return 0


def _cmd_enum_b2(cfg: RunConfig, args) -> int:
    jmax = args.jmax_sub if args.jmax_sub is not None else cfg.jmax
    witnesses = enum_B2(args.n, jmax)
    note = (f"complete only for representation vectors with every "
            f"j <= {jmax}; larger j values exist")
    fmt = cfg.format or "csv"
    if fmt == "json":
        _emit_json({"n": args.n, "jmax": jmax, "jmax_bound_note": note,
                    "witnesses": [w.to_json(cfg.precision) for w in witnesses]})
    else:
        print(f"note: {note}", file=sys.stderr)
        _emit_csv(["root", "c", "d", "minpoly", "admissible"],
                  [[w.root.decimal(cfg.precision), str(w.c), str(w.d),
                    " ".join(map(str, w.minpoly)), int(w.admissible)]
                   for w in witnesses])
    return 0


def _cmd_derived(cfg: RunConfig, args) -> int:
    root = min_derived(args.min, cfg.jmax, cfg.nmax)
    out = {"j": args.min, "jmax": cfg.jmax, "nmax": cfg.nmax,
           "root": root.decimal(cfg.precision), "minpoly": list(root.minpoly())}
    if (cfg.format or "json") == "plain":
        print(out["root"])
    else:
        _emit_json(out)
    return 0


def _cmd_entropy(cfg: RunConfig, args) -> int:
    q = _parse_base(args.base)
    ent = entropy(q, nmax=max(cfg.nmax, 4))
    lo, hi = dim_U(q, nmax=max(cfg.nmax, 4))
    out = ent.to_json()
    out["base"] = q.to_json(cfg.precision)
    out["entropy_log_dec"] = [_dec_floor(ent.lower, cfg.precision),
                              _dec_ceil(ent.upper, cfg.precision)]
    out["dim"] = [str(lo), str(hi)]
    out["dim_dec"] = [_dec_floor(lo, cfg.precision), _dec_ceil(hi, cfg.precision)]
    if (cfg.format or "json") == "plain":
        print(*out["entropy_log_dec"])
    else:
        _emit_json(out)
    return 0


def _cmd_dim_bound(cfg: RunConfig, args) -> int:
    q = _parse_base(args.base)
    delta = _rat(args.delta)
    lo, hi = b2_local_bound(q, delta, nmax=max(cfg.nmax, 4))
    certified = bool(hi < 1)
    out = {"base": q.to_json(cfg.precision), "delta": str(delta),
           "bound": _enclosure(lo, hi, cfg.precision),
           "certified_below_one": certified}
    if (cfg.format or "json") == "plain":
        print(*out["bound"]["dec"], "below-one" if certified else "inconclusive")
    else:
        _emit_json(out)
    return 0


def _cmd_count(cfg: RunConfig, args) -> int:
    q = _parse_base(args.base)
    x = _parse_point(args.x)
    res = count_expansions(x, q, cap=args.cap)
    out = {"x": args.x, "base": q.to_json(cfg.precision), "cap": args.cap,
           "count": res.value, "exact": res.exact, "display": repr(res)}
    if (cfg.format or "json") == "plain":
        print(repr(res))
    else:
        _emit_json(out)
    return 0


def _cmd_witness(cfg: RunConfig, args) -> int:
    comp = _component(args.gen)
    if args.prop62 is not None:
        n = args.prop62
        c, d = prop62_pair(comp, n)
        ladder = qn_ladder(comp, n + 1)
        qn, qn1 = ladder[n - 1].base, ladder[n].base
        lo = qn.bracket(Fraction(1, 10 ** 12))[1]
        hi = qn1.bracket(Fraction(1, 10 ** 12))[1]
        w = certify_b2(c, d, lo, hi)
        out = {"gen": args.gen, "n": n, "c": str(c), "d": str(d),
               "sign_at_qn": f_sign(c, d, qn), "sign_at_qn1": f_sign(c, d, qn1)}
        if w is not None:
            out["root"] = w.root.decimal(cfg.precision)
            out["minpoly"] = list(w.minpoly)
            out["admissible"] = w.admissible
        if (cfg.format or "json") == "plain" and "root" in out:
            print(out["root"])
        else:
            _emit_json(out)
        return 0
    w = witness_for_V_base(args.gen)
    if (cfg.format or "json") == "plain":
        print(w.root.decimal(cfg.precision))
    else:
        _emit_json(w.to_json(cfg.precision))
    return 0


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> _Parser:
    p = _Parser(prog="twobases", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--precision", type=int, default=30,
                   help="decimal digits for printed roots (default 30)")
    p.add_argument("--jmax", type=int, default=6,
                   help="bound on representation-vector j entries (default 6)")
    p.add_argument("--nmax", type=int, default=6,
                   help="interval/word-length horizon (default 6)")
    p.add_argument("--depth", type=int, default=64,
                   help="exploration depth for iterative searches (default 64)")
    p.add_argument("--format", choices=["json", "csv", "plain"], default=None,
                   help="output format (default depends on the subcommand)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("alpha", help="quasi-greedy expansion digits of 1")
    s.add_argument("base")
    s.add_argument("--digits", type=int, default=16)
    s.set_defaults(fn=_cmd_alpha)

    s = sub.add_parser("classify", help="place a base among U, closure(U), V")
    s.add_argument("base")
    s.add_argument("--probable-depth", type=int, default=0,
                   help="depth-bounded verdict when alpha never cycles")
    s.set_defaults(fn=_cmd_classify)

    s = sub.add_parser("omega", help="generator ladder word")
    s.add_argument("--gen", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=_cmd_omega)

    s = sub.add_parser("ladder", help="accumulation ladder bases of a component")
    s.add_argument("--gen", required=True)
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(fn=_cmd_ladder)

    s = sub.add_parser("solve", help="root of the defect function of (c, d)")
    s.add_argument("--c", required=True)
    s.add_argument("--d", required=True)
    s.add_argument("--lo", required=True)
    s.add_argument("--hi", required=True)
    s.set_defaults(fn=_cmd_solve)

    s = sub.add_parser("enum-b2", help="two-expansion bases in ladder interval n")
    s.add_argument("--n", type=int, required=True)
    # distinct dest: a subparser default would clobber the global --jmax
    s.add_argument("--jmax", type=int, default=None, dest="jmax_sub")
    s.set_defaults(fn=_cmd_enum_b2)

    s = sub.add_parser("derived", help="least base of derived-set order >= j")
    s.add_argument("--min", type=int, required=True)
    s.set_defaults(fn=_cmd_derived)

    s = sub.add_parser("entropy", help="unique-expansion entropy and dimension")
    s.add_argument("base")
    s.set_defaults(fn=_cmd_entropy)

    s = sub.add_parser("dim-bound", help="local dimension bound for the spectrum")
    s.add_argument("base")
    s.add_argument("--delta", required=True)
    s.set_defaults(fn=_cmd_dim_bound)

    s = sub.add_parser("count", help="number of expansions of a point")
    s.add_argument("--x", required=True)
    s.add_argument("--base", required=True)
    s.add_argument("--cap", type=int, default=3)
    s.set_defaults(fn=_cmd_count)

    s = sub.add_parser("witness", help="certified two-expansion witnesses")
    s.add_argument("--gen", required=True)
    s.add_argument("--prop62", type=int, default=None)
    s.set_defaults(fn=_cmd_witness)
    return p


def run(argv) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    cfg = RunConfig(command=ns.command, precision=ns.precision, jmax=ns.jmax,
                    nmax=ns.nmax, depth=ns.depth, format=ns.format)
    if cfg.precision < 8 or cfg.jmax < 1 or cfg.nmax < 1 or cfg.depth < 1:
        print("error: precision >= 8, jmax/nmax/depth >= 1 required",
              file=sys.stderr)
        return 64
    try:
        return ns.fn(cfg, ns)
    except NotFoundWithinBoundsError as e:
        print(f"not found: {e}", file=sys.stderr)
        return 3
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
