"""Command-line frontend.

Subcommands: `lyndon` (graded listing), `product` (stuffle / shuffle /
concatenation of two words), `basis` (pi / sigma / chi / xi up to a weight
bound, with oracle / recursive / both methods for sigma) and `verify`
(invariant suites with a nonzero exit code on any failure).  Output is
deterministic: terms are sorted and fractions canonical.
"""

import argparse
import json
import sys

from ._version import __version__
from . import bases, ops
from .coeff import rat_from_str
from .lyndon import lyndon_of_weight
from .ncpoly import NCPoly, word_poly
from .words import all_words_up_to, word_from_str, word_to_str


def _add_common(p):
    p.add_argument("--max-weight", type=int, default=6, metavar="N",
                   help="weight bound (default 6)")
    p.add_argument("--q", default=None, metavar="P/Q",
                   help="specialize q at an exact rational (default symbolic)")
    p.add_argument("--format", choices=("text", "latex", "json"),
                   default="text")
    p.add_argument("--out", default=None, metavar="FILE",
                   help="write output to FILE instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qstuffle",
        description="Exact computations in the q-stuffle Hopf algebra.")
    parser.add_argument("--version", action="version",
                        version="qstuffle %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lyndon", help="list Lyndon words by weight")
    _add_common(p)

    p = sub.add_parser("product", help="product of two words")
    p.add_argument("kind", choices=("stuffle", "shuffle", "conc"))
    p.add_argument("u", help="first word, e.g. \"2,1\" (\"e\" = empty)")
    p.add_argument("v", help="second word")
    _add_common(p)

    p = sub.add_parser("basis", help="emit a graded basis")
    p.add_argument("kind", choices=("pi", "sigma", "chi", "xi"))
    p.add_argument("--sigma-method", choices=("oracle", "recursive", "both"),
                   default="both")
    _add_common(p)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", choices=("duality", "primitivity",
                                     "factorization", "axioms", "all"))
    _add_common(p)
    return parser


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _render_poly(p, fmt, q_value):
    if q_value is not None:
        p = p.subs_q(q_value)
    if fmt == "text":
        return p.text()
    if fmt == "latex":
        return p.latex()
    return json.dumps(p.to_json())


def _cmd_lyndon(args):
    if args.format == "json":
        data = {str(n): [word_to_str(w) for w in lyndon_of_weight(n)]
                for n in range(1, args.max_weight + 1)}
        _emit(json.dumps(data, indent=2), args.out)
        return 0
    lines = []
    for n in range(1, args.max_weight + 1):
        ws = " ".join(word_to_str(w) for w in lyndon_of_weight(n))
        lines.append("weight %d: %s" % (n, ws))
    _emit("\n".join(lines), args.out)
    return 0


def _cmd_product(args, q_value):
    u = word_from_str(args.u)
    v = word_from_str(args.v)
    if args.kind == "stuffle":
        p = ops.stuffle(u, v)
    elif args.kind == "shuffle":
        p = ops.shuffle(u, v)
    else:
        p = word_poly(u + v)
    _emit(_render_poly(p, args.format, q_value), args.out)
    return 0


def _cmd_basis(args, q_value):
    n = args.max_weight
    if args.kind == "sigma" and args.sigma_method == "both":
        oracle = bases.dual_pbw_oracle(n)
        for w in all_words_up_to(n, include_empty=True):
            recursive = bases.dual_pbw_element(w)
            if recursive != oracle.entry(w):
                sys.stderr.write(
                    "sigma method mismatch at %s:\n  oracle:    %s\n"
                    "  recursive: %s\n"
                    % (word_to_str(w), oracle.entry(w).text(),
                       recursive.text()))
                return 1
        basis = oracle
    else:
        method = args.sigma_method if args.kind == "sigma" else "oracle"
        basis = bases.basis_by_kind(args.kind, n, sigma_method=method)

    if args.format == "json":
        data = basis.to_json()
        if q_value is not None:
            data["q"] = str(q_value)
            data["entries"] = {
                k: NCPoly.from_json(v).subs_q(q_value).to_json()
                for k, v in data["entries"].items()}
        _emit(json.dumps(data, indent=2), args.out)
        return 0
    if args.format == "latex":
        _emit("\n".join(basis.latex_rows()), args.out)
        return 0
    label = {"pi": "Pi", "sigma": "Sigma", "chi": "Chi", "xi": "Xi"}[basis.kind]
    lines = []
    for w in basis.words():
        if not w:
            continue
        lines.append("%s[%s] = %s"
                     % (label, word_to_str(w),
                        _render_poly(basis.entry(w), "text", q_value)))
    _emit("\n".join(lines), args.out)
    return 0


def _cmd_verify(args):
    n = args.max_weight
    suites = {
        "duality": lambda: bases.verify_duality(n),
        "primitivity": lambda: bases.verify_primitivity(n),
        "factorization": lambda: bases.verify_factorization(n),
        "axioms": lambda: ops.verify_axioms(n),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    reports = [suites[name]() for name in names]
    if args.format == "json":
        _emit(json.dumps([r.to_json() for r in reports], indent=2), args.out)
    else:
        lines = []
        for r in reports:
            lines.extend(r.lines())
        _emit("\n".join(lines), args.out)
    return 0 if all(r.ok for r in reports) else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        q_value = rat_from_str(args.q) if getattr(args, "q", None) else None
    except (ValueError, ZeroDivisionError):
        sys.stderr.write("malformed rational for --q: %r\n" % args.q)
        return 2
    try:
        if args.command == "lyndon":
            return _cmd_lyndon(args)
        if args.command == "product":
            return _cmd_product(args, q_value)
        if args.command == "basis":
            return _cmd_basis(args, q_value)
        if args.command == "verify":
            return _cmd_verify(args)
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    parser.error("unknown command")


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
