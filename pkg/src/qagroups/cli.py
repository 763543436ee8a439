"""Command-line entry point.

Exit status is 0 when every check passes, 1 when a check fails and 2 for
unreadable input or bad usage.  ``STRUCTURE`` is a file path, or
``builtin:NAME`` for one of the bundled structures.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automata as fa
from .builtins import BUILTINS, builtin
from .departure import departure_function, verify_departure, verify_length_ratio
from .fileformat import FormatError, dumps, load
from .geometry import check_lipschitz_hausdorff, check_weak_lipschitz, weak_implies_hausdorff_check
from .pipeline import prove
from .pruning import PruningError, prune_structure, verify_factor_property
from .report import FAIL, PASS, Report
from .structure import restrict_to, validate


def _load(target: str):
    if target.startswith("builtin:"):
        return builtin(target.split(":", 1)[1])
    return load(target)


def _emit(args, reports, extra=None):
    if args.json:
        payload = {"reports": [r.to_dict() for r in reports]}
        if extra:
            payload.update(extra)
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        if extra:
            for k, v in extra.items():
                print(f"{k}: {v}")
        for r in reports:
            print(r.render())
    return 0 if all(r.ok for r in reports) else 1


def cmd_validate(args):
    return _emit(args, [validate(_load(args.structure), args.max_len)])


def cmd_prove(args):
    rep = prove(_load(args.structure), args.max_len, args.ball, args.word_cap, args.depth_cap)
    print(rep.to_json() if args.json else rep.render())
    return 0 if rep.ok else 1


def cmd_prune(args):
    s = _load(args.structure)
    res = prune_structure(s)
    ok = verify_factor_property(res)
    words = [fa.format_word(w) for w in fa.enumerate_words(res.K, args.word_cap)]
    report = Report("prune", PASS if ok else FAIL,
                    {"k": res.k, "K_states": fa.trim(fa.minimize(res.K)).n_states,
                     "debris": res.debris_sizes(), "factor_property": ok,
                     f"K_words_upto_{args.word_cap}": " ".join(words)})
    return _emit(args, [report])


def cmd_departure(args):
    s = _load(args.structure)
    res = prune_structure(s)
    table = departure_function(res, s.oracle, args.ball, args.depth_cap)
    reports = [verify_length_ratio(res, table.ell, 2 * args.word_cap), table.report()]
    for n in range(args.ball + 1):
        r = verify_departure(res.K, s.oracle, table, n, args.word_cap)
        r.name = f"verify_departure[n={n}]"
        reports.append(r)
    return _emit(args, reports)


def cmd_geometry(args):
    s = _load(args.structure)
    if not args.unpruned:
        s = restrict_to(s, prune_structure(s).K, coverage_check=None)
    _, lh = check_lipschitz_hausdorff(s, args.max_len)
    wl = check_weak_lipschitz(s, args.k, args.max_len)
    wh = weak_implies_hausdorff_check(s, wl.details["k"], args.max_len)
    return _emit(args, [lh, wl, wh])


def cmd_demo(args):
    text = dumps(builtin(args.name))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qagroups",
                                description="Prune quasi-automatic group dictionaries and check "
                                            "the hypotheses of asynchronous automaticity.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *flags):
        sp.add_argument("structure", help="structure file, or builtin:NAME")
        sp.add_argument("--json", action="store_true", help="emit the machine-readable report")
        if "max_len" in flags:
            sp.add_argument("--max-len", type=int, default=5)
        if "ball" in flags:
            sp.add_argument("--ball", type=int, default=3)
        if "word_cap" in flags:
            sp.add_argument("--word-cap", type=int, default=8)
        if "depth_cap" in flags:
            sp.add_argument("--depth-cap", type=int, default=12)
        return sp

    common(sub.add_parser("validate", help="check the relations against the group oracle"),
           "max_len").set_defaults(func=cmd_validate)
    common(sub.add_parser("prove", help="run the full pipeline"),
           "max_len", "ball", "word_cap", "depth_cap").set_defaults(func=cmd_prove)
    common(sub.add_parser("prune", help="prune the dictionary and report K"),
           "word_cap").set_defaults(func=cmd_prune)
    common(sub.add_parser("departure", help="departure table and its checks"),
           "ball", "word_cap", "depth_cap").set_defaults(func=cmd_departure)
    g = common(sub.add_parser("geometry", help="Lipschitz Hausdorff / weakly Lipschitz checks"),
               "max_len")
    g.add_argument("--k", type=int, default=None, help="weak Lipschitz bound (default: minimal)")
    g.add_argument("--unpruned", action="store_true", help="check the input dictionary itself")
    g.set_defaults(func=cmd_geometry)
    d = sub.add_parser("demo", help="write a bundled structure in the file format")
    d.add_argument("name", help=", ".join(BUILTINS))
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_demo)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, PruningError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
