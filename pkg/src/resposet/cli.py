"""Command-line front end.

Exit codes: 0 = success / verification passed; 1 = a verification or
classification came out negative (report still printed); 2 = input or
usage error.
"""

import argparse
import json
import sys

from . import files
from .classify import check_pseudo_kleene, is_distributive, recognize_boolean
from .constructions import (
    ExtensionMode,
    boolean_residuation,
    chain_residuation,
    extend_boolean_theorem5,
    extend_theorem1,
    extend_theorem2,
    extend_theorem3,
    structural_equal,
)
from .errors import StructureError
from .fixtures import BUILTIN_INVOLUTIONS, BUILTIN_POSETS
from .involution import InvolutedPoset, enumerate_antitone_involutions, involution_from_mapping
from .miner import find_residuations, find_residuations_naive
from .order import Poset
from .render import export_dot, render_tables
from .residuation import (
    ResiduatedStructure,
    check_integrality,
    check_lemma1,
    verify_residuated,
)

NAIVE_MINER_MAX = 4  # naive oracle is factorial; guard the carrier size


def _load(path, full_order=False) -> files.Bundle:
    if path.startswith("builtin:"):
        name = path.split(":", 1)[1]
        if name not in BUILTIN_POSETS:
            raise StructureError(
                f"unknown builtin {name!r}; available: {', '.join(sorted(BUILTIN_POSETS))}"
            )
        poset = BUILTIN_POSETS[name]()
        involution = involution_from_mapping(poset, BUILTIN_INVOLUTIONS[name]())
        return files.Bundle(poset, involution)
    if path == "-":
        return files.load_structure(sys.stdin, full_order=full_order)
    with open(path, encoding="utf-8") as fh:
        return files.load_structure(fh, full_order=full_order)


def _out(args):
    if getattr(args, "output", None) and args.output != "-":
        return open(args.output, "w", encoding="utf-8")
    return sys.stdout


def _emit(args, text):
    out = _out(args)
    out.write(text)
    if out is not sys.stdout:
        out.close()


def _need_structure(bundle) -> ResiduatedStructure:
    if bundle.structure is None:
        raise StructureError("this command needs a full residuated structure (unit/odot/arrow)")
    return bundle.structure


def _need_involuted(bundle) -> InvolutedPoset:
    if bundle.involution is None:
        raise StructureError("this command needs an involution")
    return InvolutedPoset(bundle.poset, bundle.involution)


def cmd_verify(args):
    bundle = _load(args.input, args.full_order)
    s = _need_structure(bundle)
    report = verify_residuated(s)
    lines = report.lines()
    extra_ok = True
    if s.poset.bounds()[0] is not None:
        lemma = check_lemma1(s)
        lines += lemma.lines()
        extra_ok = extra_ok and lemma.overall
    integ = check_integrality(s)
    lines += integ.lines()
    extra_ok = extra_ok and integ.overall
    ok = report.overall and extra_ok
    _emit(args, "\n".join(lines + [f"overall: {'PASS' if ok else 'FAIL'}"]) + "\n")
    return 0 if ok else 1


def cmd_involutions(args):
    bundle = _load(args.input, args.full_order)
    found = enumerate_antitone_involutions(bundle.poset)
    lines = [str(inv) for inv in found]
    lines.append(f"count: {len(found)}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _emit_result(args, result):
    fmt = args.format
    if fmt == "json":
        doc = files.structure_to_doc(
            result.structure, result.involution, result.provenance
        )
        out = _out(args)
        files.dump(doc, out)
        if out is not sys.stdout:
            out.close()
    elif fmt in ("text", "csv"):
        _emit(args, render_tables(result.structure, fmt))
    elif fmt == "dot":
        _emit(args, export_dot(result.structure.poset, result.involution))
    else:
        raise StructureError(f"unknown format {fmt!r}")
    return 0


def cmd_extend(args):
    if args.theorem == "cor1":
        result = chain_residuation(args.n)
        return _emit_result(args, result)
    bundle = _load(args.input, args.full_order)
    if args.theorem == "thm1":
        mode = ExtensionMode(args.mode)
        result = extend_theorem1(_need_involuted(bundle), mode)
    elif args.theorem == "thm2":
        result = extend_theorem2(_need_involuted(bundle), args.n)
    elif args.theorem == "thm3":
        result = extend_theorem3(bundle.poset, args.n, args.k)
    elif args.theorem in ("lemma2", "thm5"):
        B = recognize_boolean(bundle.poset)
        if B is None:
            raise StructureError("input poset is not a Boolean algebra")
        if args.theorem == "lemma2":
            s = boolean_residuation(B)
            if args.format == "json":
                doc = files.structure_to_doc(
                    s, B.complement, {"construction": "lemma2", "parameters": {}}
                )
                out = _out(args)
                files.dump(doc, out)
                if out is not sys.stdout:
                    out.close()
            elif args.format in ("text", "csv"):
                _emit(args, render_tables(s, args.format))
            elif args.format == "dot":
                _emit(args, export_dot(s.poset, B.complement))
            else:
                raise StructureError(f"unknown format {args.format!r}")
            return 0
        result = extend_boolean_theorem5(B, args.n)
    else:
        raise StructureError(f"unknown construction {args.theorem!r}")
    return _emit_result(args, result)


def cmd_classify(args):
    bundle = _load(args.input, args.full_order)
    p = bundle.poset
    verdicts = {}
    lines = []
    verdicts["lattice"] = p.is_lattice()
    lines.append(f"lattice: {verdicts['lattice']}")
    if verdicts["lattice"]:
        dist, witness = is_distributive(p)
        verdicts["distributive"] = dist
        lines.append(
            f"distributive: {dist}" + (f" witness={witness}" if witness else "")
        )
        if bundle.involution is not None:
            kv = check_pseudo_kleene(p, bundle.involution)
            verdicts["pseudo_kleene"] = kv.pseudo_kleene
            verdicts["kleene"] = kv.kleene
            lines.extend(kv.report.lines())
            lines.append(f"pseudo-kleene: {kv.pseudo_kleene}")
            lines.append(f"kleene: {kv.kleene}")
        B = recognize_boolean(p)
        verdicts["boolean"] = B is not None
        lines.append(f"boolean: {B is not None}")
    if args.json:
        _emit(args, json.dumps(verdicts, indent=2) + "\n")
    else:
        _emit(args, "\n".join(lines) + "\n")
    return 0 if all(verdicts.values()) else 1


def cmd_mine(args):
    bundle = _load(args.input, args.full_order)
    ip = _need_involuted(bundle)
    if args.naive:
        if len(ip.poset) > NAIVE_MINER_MAX:
            raise StructureError(
                f"naive mode is limited to |P| <= {NAIVE_MINER_MAX} elements"
            )
        outcome = find_residuations_naive(ip, args.require_negation, args.limit)
    else:
        outcome = find_residuations(ip, args.require_negation, args.limit)
    lines = []
    if outcome.satisfiable:
        lines.append(f"satisfiable: {len(outcome.structures)} structure(s) found")
        for i, s in enumerate(outcome.structures):
            lines.append(f"--- structure {i + 1} ---")
            lines.append(render_tables(s, "text").rstrip("\n"))
    else:
        lines.append("unsatisfiable")
    if args.stats_json:
        lines.append(json.dumps(outcome.stats.as_dict(), indent=2))
    else:
        stats = outcome.stats.as_dict()
        lines.append(f"nodes explored: {stats['nodes']}")
        for rule, count in stats["prunes"].items():
            lines.append(f"prunes[{rule}]: {count}")
    _emit(args, "\n".join(lines) + "\n")
    return 0 if outcome.satisfiable else 1


def cmd_show(args):
    bundle = _load(args.input, args.full_order)
    if args.format == "dot":
        _emit(args, export_dot(bundle.poset, bundle.involution))
        return 0
    if args.format == "json":
        if bundle.structure is not None:
            doc = files.structure_to_doc(bundle.structure, bundle.involution, bundle.provenance)
        elif bundle.involution is not None:
            doc = files.involuted_to_doc(InvolutedPoset(bundle.poset, bundle.involution))
        else:
            doc = files.poset_to_doc(bundle.poset)
        out = _out(args)
        files.dump(doc, out)
        if out is not sys.stdout:
            out.close()
        return 0
    s = _need_structure(bundle)
    _emit(args, render_tables(s, args.format))
    return 0


def cmd_export_dot(args):
    bundle = _load(args.input, args.full_order)
    _emit(args, export_dot(bundle.poset, bundle.involution))
    return 0


def cmd_diff(args):
    a = _need_structure(_load(args.first))
    b = _need_structure(_load(args.second))
    same = structural_equal(a, b)
    _emit(args, ("structurally equal" if same else "structurally different") + "\n")
    return 0 if same else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="resposet",
        description="Finite ordered algebraic structures: residuated extensions of "
        "posets with antitone involution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("--input", "-i", required=True, help="structure file, '-' or builtin:<name>")
        p.add_argument("--output", "-o", default="-", help="output file (default stdout)")
        p.add_argument(
            "--full-order",
            action="store_true",
            help="read 'covers' as the complete order relation",
        )

    p = sub.add_parser("verify", help="check the residuated-poset axioms")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("involutions", help="enumerate antitone involutions")
    common(p)
    p.set_defaults(func=cmd_involutions)

    p = sub.add_parser("extend", help="run one of the extension constructions")
    p.add_argument("theorem", choices=["thm1", "thm2", "thm3", "cor1", "lemma2", "thm5"])
    p.add_argument("--input", "-i", help="input structure (not needed for cor1)")
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--full-order", action="store_true")
    p.add_argument(
        "--mode",
        choices=[m.value for m in ExtensionMode],
        default=ExtensionMode.ADD_FOUR.value,
        help="thm1 only: how to treat the four chain elements",
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--format", choices=["json", "text", "csv", "dot"], default="json")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("classify", help="lattice/distributive/Kleene/Boolean verdicts")
    common(p)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mine", help="search for residuated structures")
    common(p)
    neg = p.add_mutually_exclusive_group()
    neg.add_argument("--require-negation", dest="require_negation", action="store_true", default=True)
    neg.add_argument("--no-require-negation", dest="require_negation", action="store_false")
    p.add_argument("--limit", type=int, default=16)
    p.add_argument("--naive", action="store_true", help="oracle mode, small carriers only")
    p.add_argument("--stats-json", action="store_true")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("show", help="render a structure")
    common(p)
    p.add_argument("--format", choices=["text", "csv", "json", "dot"], default="text")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("export-dot", help="Hasse diagram as DOT")
    common(p)
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("diff", help="relabeling-aware structural comparison")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=cmd_diff)

    return parser


def _validate(args):
    if args.command == "extend":
        if args.theorem == "cor1":
            if args.n is None or args.n < 3:
                raise StructureError("cor1 needs --n >= 3")
        elif args.theorem == "thm2":
            if args.n is None or args.n <= 1:
                raise StructureError("thm2 needs --n > 1")
        elif args.theorem == "thm3":
            if args.n is None or args.n <= 1 or args.k < 0:
                raise StructureError("thm3 needs --n > 1 and --k >= 0")
        elif args.theorem == "thm5":
            if args.n is None or args.n < 1:
                raise StructureError("thm5 needs --n >= 1")
        if args.theorem != "cor1" and not args.input:
            raise StructureError(f"{args.theorem} needs --input")
    if args.command == "mine" and args.limit < 1:
        raise StructureError("--limit must be positive")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        return args.func(args)
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
