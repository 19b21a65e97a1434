"""
Command-line front end.

    gtorsion classify MANIFEST [--json]
    gtorsion rgroup MANIFEST [--json]
    gtorsion pairs --klein --max N [--json]
    gtorsion oracle PRESENTATION --max-g N --max-c N [--budget N] [--no-prefilter]
                    [--max-rules N] [--max-rule-len N] [--max-iterations N] [--json]
    gtorsion presentation MANIFEST --piece I [--json]
    gtorsion homology PRESENTATION [--json]
    gtorsion horizontal-bases [--json]

Exit codes: 0 ok, 1 bad input, 2 an internal limit was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .backends import RewritingBackend, UndecidableError
from .homology import abelianization
from .klein import k_enumerate_gt_pairs
from .manifest import load_manifest
from .manifold import admits_gt_order2, is_r_group, is_rbar_group
from .oracle import SearchBounds, search_gt_order2
from .rewriting import DEFAULT_LIMITS, NotConfluentError
from .seifert import Verdict, horizontal_base_solutions
from .sfs import seifert_presentation
from .words import InputError, parse_presentation

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2


class ResourceLimit(RuntimeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(args, report: dict, lines: list[str]):
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)


def verdict_report(v: Verdict) -> dict:
    out = {"verdict": v.status.value, "reason": v.reason}
    if v.witness is not None:
        w = v.witness
        out.update(case=w.case.value, g=w.g_text(), c=w.c_text(), backend=w.backend)
    return out


def verdict_line(v: Verdict) -> str:
    if v.witness is not None:
        w = v.witness
        return f"verdict: {v.status.value}  case: {w.case.value}  g: {w.g_text()}  c: {w.c_text()}"
    return f"verdict: {v.status.value}  reason: {v.reason}"


def cmd_classify(args):
    v = admits_gt_order2(load_manifest(args.manifest))
    _emit(args, verdict_report(v), [verdict_line(v)])


def cmd_rgroup(args):
    m = load_manifest(args.manifest)
    r, rbar = is_r_group(m).value, is_rbar_group(m).value
    _emit(args, {"R": r, "Rbar": rbar}, [f"R: {r}  Rbar: {rbar}"])


def cmd_pairs(args):
    if not args.klein:
        raise InputError("only the Klein bottle group is supported; pass --klein")
    pairs = sorted(k_enumerate_gt_pairs(args.max), key=lambda p: (p.g, p.c))
    rows = [{"g": str(p.g), "c": str(p.c)} for p in pairs]
    lines = [f"g: {r['g']}  c: {r['c']}" for r in rows] + [f"count: {len(rows)}"]
    _emit(args, {"pairs": rows, "count": len(rows)}, lines)


def _read_presentation(path):
    return parse_presentation(Path(path).read_text(encoding="utf-8"))


def cmd_oracle(args):
    pres = _read_presentation(args.presentation)
    limits = {k: getattr(args, k) for k in DEFAULT_LIMITS if getattr(args, k) is not None}
    backend = RewritingBackend(pres, **limits)
    if not backend.exact:
        raise ResourceLimit(f"no exact word-problem solution: {backend.rws.reason}")
    bounds = SearchBounds(args.max_g, args.max_c, args.budget)
    res = search_gt_order2(backend, bounds, prefilter=not args.no_prefilter)
    report = {"found": res.found, "max_g": bounds.max_g_len, "max_c": bounds.max_c_len, "tests": res.tests,
              "complete": res.complete,
              "g": pres.format_word(res.g) if res.found else None,
              "c": pres.format_word(res.c) if res.found else None}
    if res.found:
        line = f"found  g: {report['g']}  c: {report['c']}  tests: {res.tests}"
    else:
        line = f"exhausted  bounds: ({bounds.max_g_len},{bounds.max_c_len})  tests: {res.tests}"
        if not res.complete:
            line += "  (budget reached, partial coverage)"
    _emit(args, report, [line])
    if not res.found and not res.complete:
        return EXIT_RESOURCE


def cmd_presentation(args):
    pieces = load_manifest(args.manifest).seifert_pieces()
    if not 0 <= args.piece < len(pieces):
        raise InputError(f"--piece {args.piece} out of range: manifest has {len(pieces)} Seifert piece(s)")
    pres = seifert_presentation(pieces[args.piece])
    report = {"generators": list(pres.generators), "relators": [pres.format_word(r) for r in pres.relators]}
    _emit(args, report, pres.to_text().splitlines())


def cmd_homology(args):
    h = abelianization(_read_presentation(args.presentation))
    _emit(args, {"free_rank": h.free_rank, "torsion": list(h.torsion)}, [f"H1: {h}"])


def cmd_horizontal_bases(args):
    sols = horizontal_base_solutions()
    rows = [{"base": name, "cone_orders": list(cones)} for name, cones in sols]
    lines = [f"{name} [{','.join(map(str, cones))}]" for name, cones in sols]
    _emit(args, {"solutions": rows}, lines)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gtorsion", description="Order-two generalized torsion in 3-manifold groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(fn=fn)
        return sp

    add("classify", cmd_classify, "order-two generalized torsion verdict").add_argument("manifest")
    add("rgroup", cmd_rgroup, "R-group and R-bar-group classification").add_argument("manifest")
    sp = add("pairs", cmd_pairs, "enumerate generalized torsion pairs")
    sp.add_argument("--klein", action="store_true", help="in the Klein bottle group")
    sp.add_argument("--max", type=int, required=True, help="bound on every exponent")
    sp = add("oracle", cmd_oracle, "brute-force search on a presentation")
    sp.add_argument("presentation")
    sp.add_argument("--max-g", type=int, default=6)
    sp.add_argument("--max-c", type=int, default=3)
    sp.add_argument("--budget", type=int, default=None, help="maximum equality tests")
    sp.add_argument("--no-prefilter", action="store_true", help="skip the homology filter")
    for key, value in DEFAULT_LIMITS.items():
        sp.add_argument("--" + key.replace("_", "-"), dest=key, type=int, default=None,
                        help=f"Knuth-Bendix limit (default {value})")
    sp = add("presentation", cmd_presentation, "presentation of a Seifert piece")
    sp.add_argument("manifest")
    sp.add_argument("--piece", type=int, default=0, help="index among the manifest's Seifert pieces")
    add("homology", cmd_homology, "first homology of a presentation").add_argument("presentation")
    add("horizontal-bases", cmd_horizontal_bases, "bases admitting a horizontal Klein bottle")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.fn(args)
    except (InputError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (ResourceLimit, UndecidableError, NotConfluentError, RecursionError, MemoryError) as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
