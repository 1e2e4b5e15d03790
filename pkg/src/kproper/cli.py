"""kproper command line.

Reads graph6 records (one per line, '#' comments skipped) and writes
JSON lines, or short text lines with ``--format text``. Exit status:
0 success, 1 invalid certificate or failed check, 2 usage error,
3 size-cap refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .certificate import SCHEMA_VERSION, certificate_to_dict, check_certificate, dumps
from .characterize import SURVEY_CAP, classify, survey
from .coloring import verify_k_proper
from .graph import GraphError, SizeCapError, encode_graph6, parse_graph6, require_connected
from .solver import bounds, solve_px, solve_rx

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_k(text: str, n: int) -> list[int]:
    """'3' -> [3]; '3..n' or '3..5' -> a range, clipped to n."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo = int(lo)
            hi = n if hi.strip() == "n" else int(hi)
            ks = list(range(lo, min(hi, n) + 1))
        else:
            ks = [n if text == "n" else int(text)]
    except ValueError:
        raise UsageError(f"bad --k value {text!r}") from None
    if not ks or any(not 2 <= k <= n for k in ks):
        raise UsageError(f"--k {text} is outside 2..{n}")
    return ks


def _graphs(args):
    stream = sys.stdin if args.input == "-" else open(args.input)
    try:
        for lineno, line in enumerate(stream, 1):
            rec = line.strip()
            if not rec or rec.startswith("#"):
                continue
            try:
                g = parse_graph6(rec)
            except GraphError as exc:
                raise UsageError(f"line {lineno}: {exc}") from None
            yield g
    finally:
        if stream is not sys.stdin:
            stream.close()


class _Out:
    def __init__(self, args):
        self.fmt = args.format
        self.fh = sys.stdout if args.output in (None, "-") else open(args.output, "w")

    def emit(self, obj, text=None):
        if self.fmt == "text" and text is not None:
            self.fh.write(text + "\n")
        else:
            self.fh.write(dumps({"schema_version": SCHEMA_VERSION, **obj}) + "\n")

    def close(self):
        if self.fh is not sys.stdout:
            self.fh.close()


def cmd_compute(args, out, rainbow=False):
    solver = solve_rx if rainbow else solve_px
    for g in _graphs(args):
        require_connected(g)
        for k in parse_k(args.k, g.n):
            try:
                cert = solver(g, k)
            except SizeCapError:
                if not args.force_heuristic_bounds or rainbow:
                    raise
                rep = bounds(g, k)
                out.emit({"graph6": encode_graph6(g), "heuristic": True, **rep.to_dict()},
                         f"{encode_graph6(g)} k={k} bounds [{rep.best_lower}, {rep.best_upper}]")
                continue
            data = certificate_to_dict(cert)
            name = "rx" if rainbow else "px"
            out.emit(data, f"{data['graph6']} k={k} {name}={cert.value}")
    return EXIT_OK


def cmd_bounds(args, out):
    for g in _graphs(args):
        require_connected(g)
        for k in parse_k(args.k, g.n):
            rep = bounds(g, k)
            g6 = encode_graph6(g)
            out.emit({"graph6": g6, **rep.to_dict()},
                     f"{g6} k={k} lower={rep.best_lower} upper={rep.best_upper}")
    return EXIT_OK


STRATEGIES = {
    "traceable": lambda g: (cons.color_traceable(g), 2),
    "tree": lambda g: (cons.color_tree(g), max(g.degrees())),
    "unicyclic": cons.color_unicyclic,
    "snpp": lambda g: (cons.color_snpp(g), g.n - 3),
}


def cmd_color(args, out):
    status = EXIT_OK
    for g in _graphs(args):
        require_connected(g)
        try:
            col, claimed = STRATEGIES[args.strategy](g)
        except GraphError as exc:
            raise UsageError(f"strategy {args.strategy}: {exc}") from None
        verdicts = {}
        for k in parse_k(args.k, g.n):
            res = verify_k_proper(g, col, k, witnesses=False)
            verdicts[str(k)] = res.valid if res.valid else list(res.failing)
            if not res.valid:
                status = EXIT_INVALID
        g6 = encode_graph6(g)
        out.emit({"graph6": g6, "edges": [list(e) for e in g.edges], "colors": list(col.colors),
                  "palette": col.palette, "claimed": claimed, "verified": verdicts},
                 f"{g6} {args.strategy} palette={col.palette} verified={verdicts}")
    return status


def cmd_verify(args, out):
    fh = sys.stdin if args.certificate == "-" else open(args.certificate)
    status = EXIT_OK
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise UsageError(f"certificate line {lineno}: {exc}") from None
            res = check_certificate(data, recheck_exhaustion=not args.skip_exhaustion)
            rec = {"line": lineno, "valid": res.valid}
            if not res.valid:
                status = EXIT_INVALID
                rec["reason"] = res.reason
                if res.failing is not None:
                    rec["failing"] = list(res.failing)
                    print(f"line {lineno}: invalid, S={list(res.failing)}: {res.reason}",
                          file=sys.stderr)
                else:
                    print(f"line {lineno}: invalid: {res.reason}", file=sys.stderr)
            out.emit(rec, f"line {lineno}: {'valid' if res.valid else 'INVALID ' + res.reason}")
    return status


def cmd_classify(args, out):
    for g in _graphs(args):
        for k in parse_k(args.k, g.n):
            c = classify(g, k)
            g6 = encode_graph6(g)
            out.emit({"graph6": g6, "k": k, "verdict": c.verdict, "px": c.px,
                      "upper": c.upper, "basis": c.basis},
                     f"{g6} k={k} {c.verdict} px={c.px if c.px is not None else '<=' + str(c.upper)}")
    return EXIT_OK


def cmd_construct(args, out):
    spec = cons.FamilySpec(args.family, args.n, args.variant, args.a, args.b)
    try:
        g = cons.build(spec)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    out.fh.write(encode_graph6(g) + "\n")
    return EXIT_OK


def cmd_survey(args, out):
    fh = sys.stdin if args.input == "-" else open(args.input)
    ks = None
    if args.k is not None:
        # clipped per graph to 2..n
        ks = parse_k(args.k.replace("..n", f"..{SURVEY_CAP}"), SURVEY_CAP)
    status = EXIT_OK
    with fh:
        for rec in survey(fh, ks, rainbow=args.rainbow, workers=args.workers):
            if "summary" in rec:
                if rec["summary"]["failed"]:
                    status = EXIT_INVALID
                text = f"# graphs={rec['summary']['graphs']} failed={rec['summary']['failed']} " \
                       f"errors={rec['summary']['errors']}"
            elif "error" in rec:
                print(f"line {rec['line']}: {rec['error']}", file=sys.stderr)
                text = f"# line {rec['line']}: error"
            else:
                text = f"{rec['graph6']} px={rec['px']} ok={rec['ok']}"
            out.emit(rec, text)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kproper", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, k_default="3"):
        sp.add_argument("--input", "-i", default="-", help="graph6 file, '-' for stdin")
        sp.add_argument("--output", "-o", default="-")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--k", default=k_default, help="k, or a range such as 3..n")
        sp.add_argument("--workers", type=int, default=1)
        return sp

    for name, help_ in (("compute", "exact px_k with certificate"),
                        ("rainbow", "exact rx_k with certificate")):
        sp = common(sub.add_parser(name, help=help_))
        sp.add_argument("--force-heuristic-bounds", action="store_true",
                        help="emit bounds instead of refusing graphs beyond the search cap")
    common(sub.add_parser("bounds", help="lower and upper bounds on px_k"))
    sp = common(sub.add_parser("color", help="constructive coloring plus verifier verdict"),
                k_default="3..n")
    sp.add_argument("--strategy", choices=sorted(STRATEGIES), required=True)
    sp = sub.add_parser("verify", help="re-check certificates (JSON lines)")
    sp.add_argument("--certificate", "-c", default="-")
    sp.add_argument("--skip-exhaustion", action="store_true",
                    help="do not re-run the palette search behind exhaustion records")
    sp.add_argument("--output", "-o", default="-")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    common(sub.add_parser("classify", help="closed-form classification at px = n-1, n-2"))
    sp = sub.add_parser("construct", help="emit a named family member as graph6")
    sp.add_argument("--family", choices=cons.FAMILIES, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--variant")
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--output", "-o", default="-")
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp = common(sub.add_parser("survey", help="check every known identity and bound on a graph6 corpus"), k_default=None)
    sp.add_argument("--rainbow", action="store_true", help="also solve rx_k")
    return p


COMMANDS = {
    "compute": cmd_compute,
    "rainbow": lambda a, o: cmd_compute(a, o, rainbow=True),
    "bounds": cmd_bounds,
    "color": cmd_color,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "construct": cmd_construct,
    "survey": cmd_survey,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args)
    try:
        return COMMANDS[args.command](args, out)
    except SizeCapError as exc:
        print(f"kproper: size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, GraphError, OSError) as exc:
        print(f"kproper: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
