"""Command-line entry point.

Exit status: 0 success / derivable / valid; 1 not derivable / refuted;
2 parse errors (with position diagnostics); 3 internal check failures.
Batch mode reads one sequent per line from stdin and emits JSON lines.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebras, corpus, interpolation, search, syntax, translations
from .search import normalize_calculus
from .syntax import ParseError
from .terms import CL, DM, SDM, sequent as mk_sequent

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


def _parse_sequent(text: str, calculus: str):
    return syntax.parse_sequent(text, normalize_calculus(calculus))


def _cmd_decide(args) -> int:
    calc = normalize_calculus(args.calculus)
    if args.batch:
        return _batch(calc, render_proof=False, fmt=args.format)
    goal = _parse_sequent(args.sequent, calc)
    if search.derivable(calc, goal):
        print("derivable")
        return EXIT_OK
    print("not derivable")
    return EXIT_NEGATIVE


def _cmd_prove(args) -> int:
    calc = normalize_calculus(args.calculus)
    if args.batch:
        return _batch(calc, render_proof=True, fmt=args.format)
    goal = _parse_sequent(args.sequent, calc)
    if args.height is not None:
        d = search.default_engine().derive_within_height(calc, goal, args.height)
    else:
        d = search.derive(calc, goal)
    if d is None:
        print("NOT DERIVABLE")
        return EXIT_NEGATIVE
    if not search.check_derivation(calc, d):
        print("internal error: produced derivation failed checking", file=sys.stderr)
        return EXIT_INTERNAL
    print(search.render(d, args.format))
    return EXIT_OK


def _batch(calc: str, render_proof: bool, fmt: str) -> int:
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        out = {"input": line}
        try:
            goal = syntax.parse_sequent(line, calc)
            d = search.derive(calc, goal)
            out["derivable"] = d is not None
            if render_proof and d is not None:
                out["proof"] = search.proof_to_obj(d)
        except ParseError as e:
            out["error"] = str(e)
        print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def _cmd_interpolate(args) -> int:
    calc = normalize_calculus(args.calculus)
    if calc not in (SDM, DM):
        print("interpolation runs on g3sdm or g3dm goals", file=sys.stderr)
        return EXIT_PARSE
    left, right, succ = syntax.parse_partition(args.partition, calc)
    goal = mk_sequent(calc, list(left) + list(right), succ)
    d = search.derive(calc, goal)
    if d is None:
        print("NOT DERIVABLE")
        return EXIT_NEGATIVE
    part = interpolation.Partition.of(left, right)
    result = interpolation.interpolate(calc, d, part)
    if not interpolation.verify_interpolant(calc, goal, part, result.interpolant):
        print("internal error: interpolant failed verification", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps({
            "interpolant": syntax.member_to_obj(result.interpolant),
            "left_obligation": search.proof_to_obj(result.left_derivation),
            "right_obligation": search.proof_to_obj(result.right_derivation),
        }, sort_keys=True, indent=2))
    else:
        print("interpolant:", syntax.print_structure(result.interpolant))
        print("left obligation:")
        print(search.render(result.left_derivation, args.format))
        print("right obligation:")
        print(search.render(result.right_derivation, args.format))
    return EXIT_OK


def _nn_sequent(s):
    return mk_sequent(SDM, translations.double_negate(s.antecedent),
                      translations.double_negate(s.succedent))


def _cmd_translate(args) -> int:
    text = args.input
    reg = translations.ClassRegistry()
    if "=>" in text:
        source = {"t": SDM, "f": DM, "nn": DM, "k": SDM, "h": DM, "g": CL}[args.map]
        s = syntax.parse_sequent(text, source)
        image = {
            "t": translations.t_sequent,
            "f": translations.f_sequent,
            "nn": _nn_sequent,
            "k": lambda x: translations.k_sequent(x, reg),
            "h": translations.h_sequent,
            "g": translations.g_sequent,
        }[args.map](s)
        print(syntax.print_sequent(image))
    elif args.map == "t":
        print(syntax.print_term(translations.t_flatten(syntax.parse_structure(text))))
    else:
        lang = syntax.SDM_DM if args.map in ("f", "nn", "k", "h") else syntax.INT_CL
        t = syntax.parse_term(text, lang)
        out = {
            "f": translations.f_godel_gentzen,
            "nn": translations.double_negate,
            "k": lambda x: translations.k_to_int(x, reg),
            "h": translations.h_to_cl,
            "g": translations.g_glivenko,
        }[args.map](t)
        print(syntax.print_term(out))
    if args.map == "k" and args.registry:
        with open(args.registry, "w") as fh:
            json.dump(reg.as_obj(), fh, indent=2, sort_keys=True)
    return EXIT_OK


def _cmd_check_embedding(args) -> int:
    kind = args.kind
    source = {
        "dm-to-sdm-f": DM, "dm-glivenko-sdm": DM, "sdm-to-int-k": SDM,
        "dm-to-cl-h": DM, "cl-to-int-g": CL, "diagram": DM,
    }[kind]
    if args.input:
        with open(args.input) as fh:
            seqs = [syntax.parse_sequent(line.strip(), source)
                    for line in fh if line.strip()]
    else:
        cfg = corpus.CorpusConfig(seed=args.seed, max_depth=args.max_depth)
        seqs = corpus.generate_sequents(source, args.count, cfg,
                                        max_weight=args.max_weight)
    report = translations.check_embedding(kind, seqs)
    print(f"kind: {kind}")
    print(f"sequents: {report.total}")
    print(f"agreement: {report.agreements}/{report.total} "
          f"({100 * report.agreement_rate:.2f}%)")
    if kind == "dm-glivenko-sdm":
        print(f"single-negation succedent variant agreement: "
              f"{report.variant_agreements}/{report.variant_total} "
              f"({100 * report.variant_rate:.2f}%)")
    for text, src, tgt in report.counterexamples:
        print(f"counterexample: {text}  source={src} target={tgt}")
    return EXIT_OK if report.agreements == report.total else EXIT_NEGATIVE


def _cmd_validity(args) -> int:
    variety = args.variety
    calc = SDM if variety == "sdm" else DM
    s = _parse_sequent(args.sequent, calc)
    witness = algebras.refute(s, variety, args.max_size)
    if witness is None:
        print(f"valid in every enumerated {variety} algebra of size <= {args.max_size}")
        return EXIT_OK
    alg, assignment = witness
    print("refuted")
    print(json.dumps({"algebra": alg.to_obj(), "assignment": assignment},
                     sort_keys=True))
    return EXIT_NEGATIVE


def _cmd_algebra(args) -> int:
    if args.action == "dm4":
        print(json.dumps(algebras.dm4().to_obj(), sort_keys=True))
        return EXIT_OK
    for alg in algebras.enumerate_algebras(args.variety, args.max_size):
        print(json.dumps(alg.to_obj(), sort_keys=True))
    return EXIT_OK


def _cmd_render(args) -> int:
    data = sys.stdin.read() if args.input == "-" else open(args.input).read()
    d = search.proof_from_obj(json.loads(data))
    print(search.render(d, args.format))
    return EXIT_OK


def _cmd_corpus(args) -> int:
    calc = normalize_calculus(args.calculus)
    cfg = corpus.CorpusConfig(seed=args.seed, max_depth=args.max_depth)
    if args.derivable:
        seqs = corpus.derivable_corpus(calc, args.count, cfg, args.max_weight)
    else:
        seqs = corpus.generate_sequents(calc, args.count, cfg, args.max_weight)
    for s in seqs:
        print(syntax.print_sequent(s))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="morgankit",
        description="sequent calculi for De Morgan and semi-De Morgan algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_calculus(p):
        p.add_argument("--calculus", default="g3sdm",
                       choices=["g3sdm", "g3dm", "g3ip", "g3cp"])

    p = sub.add_parser("decide", help="exit 0 iff the sequent is derivable")
    add_calculus(p)
    p.add_argument("sequent", nargs="?")
    p.add_argument("--batch", action="store_true")
    p.add_argument("--format", default="ascii", choices=["ascii", "latex", "json"])
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("prove", help="print a derivation or NOT DERIVABLE")
    add_calculus(p)
    p.add_argument("sequent", nargs="?")
    p.add_argument("--batch", action="store_true")
    p.add_argument("--height", type=int, default=None)
    p.add_argument("--format", default="ascii", choices=["ascii", "latex", "json"])
    p.set_defaults(func=_cmd_prove)

    p = sub.add_parser("interpolate", help='partition syntax: "G1 ; G2 => b"')
    add_calculus(p)
    p.add_argument("partition")
    p.add_argument("--format", default="ascii", choices=["ascii", "latex", "json"])
    p.set_defaults(func=_cmd_interpolate)

    p = sub.add_parser("translate", help="apply one of the translations")
    p.add_argument("--map", required=True, choices=["t", "f", "nn", "k", "h", "g"])
    p.add_argument("input")
    p.add_argument("--registry", default=None,
                   help="sidecar JSON path for k's class-variable registry")
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("check-embedding", help="embedding agreement report")
    p.add_argument("--kind", required=True, choices=list(translations.EMBEDDING_KINDS))
    p.add_argument("--input", default=None, help="file of sequents, one per line")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--max-weight", type=int, default=20)
    p.set_defaults(func=_cmd_check_embedding)

    p = sub.add_parser("validity", help="semantic check over enumerated algebras")
    p.add_argument("--variety", required=True, choices=["sdm", "dm"])
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("sequent")
    p.set_defaults(func=_cmd_validity)

    p = sub.add_parser("algebra", help="algebra tooling")
    p.add_argument("action", choices=["enumerate", "dm4"])
    p.add_argument("--variety", default="dm", choices=["sdm", "dm"])
    p.add_argument("--max-size", type=int, default=4)
    p.set_defaults(func=_cmd_algebra)

    p = sub.add_parser("render", help="re-render a proof JSON object")
    p.add_argument("--format", default="ascii", choices=["ascii", "latex", "json"])
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("corpus", help="seeded random sequent corpus")
    add_calculus(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--derivable", action="store_true")
    p.set_defaults(func=_cmd_corpus)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (search.InvalidDerivationError, AssertionError) as e:
        print(f"check failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
