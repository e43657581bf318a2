"""Command-line surface.

Groups are given as text files (see groupfile) or as catalog references
``catalog:NAME`` / ``catalog:NAME/MEMBER`` with members parent, h,
hprime. Every subcommand accepts --json and emits a schema-stable
document {command, inputs, config, outcome, details, timing}; timing is
excluded from the determinism guarantee.

Exit codes: 0 pass, 1 verification failed (counterexample observed or the
input triple fails the theorem's hypotheses), 2 input/usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from ._kernel import backend_name
from .cyclotomic import Cyclotomic
from .errors import CapExceeded, HypothesisNotMet, UsageError
from .gassmann import catalog, catalog_get, is_gassmann_triple
from .groupfile import parse_group_text, serialize_group
from .groups import DEFAULT_ELEMENT_CAP, PermGroup, Permutation, Subgroup
from .tilde import chi_character, chi_kernel, tilde_build
from .verify import (
    verify_decomposition,
    verify_irreducibility,
    verify_main_distinguish,
    verify_theorem_group_exhaustive,
)

CAP_ENV = "PERMCHAR_MAX_ELEMENTS"


def _group_text(source: str) -> str:
    if source.startswith("catalog:"):
        ref = source[len("catalog:"):]
        name, _, member = ref.partition("/")
        inst = catalog_get(name)
        degree, gens = inst.member_generators(member or "parent")
        return serialize_group(degree, gens, header="%s/%s" % (name, member or "parent"))
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError("cannot read group file %s: %s" % (source, exc)) from None


def _load_group(source: str, cap: int) -> PermGroup:
    degree, gens = parse_group_text(_group_text(source))
    return PermGroup([Permutation(im) for im in gens], degree=degree, cap=cap,
                     name=source)


def _load_subgroup(parent: PermGroup, source: str) -> Subgroup:
    degree, gens = parse_group_text(_group_text(source))
    if degree != parent.degree:
        raise UsageError(
            "subgroup file %s has degree %d, parent has degree %d"
            % (source, degree, parent.degree)
        )
    return Subgroup.from_generators(parent, [Permutation(im) for im in gens])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permchar",
        description="exact character checks for semidirect products and "
        "Gassmann triples",
    )
    parser.add_argument("--version", action="version", version=__version__)

    def common(p, subgroups=1, l_flag=False):
        p.add_argument("group", help="group file or catalog:NAME")
        names = ["subgroup", "subgroup2"]
        for i in range(subgroups):
            p.add_argument(names[i], help="subgroup file or catalog:NAME/MEMBER")
        if l_flag:
            p.add_argument("--l", type=int, default=3,
                           help="odd prime l (default 3)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--threads", type=int, default=1,
                       help="worker threads for independent cases")
        p.add_argument("--cap", type=int, default=None,
                       help="element cap (default %d or $%s)"
                       % (DEFAULT_ELEMENT_CAP, CAP_ENV))

    top = parser.add_subparsers(dest="command", required=True)

    g_group = top.add_parser("group", help="inspect a group file")
    g_sub = g_group.add_subparsers(dest="subcommand", required=True)
    p = g_sub.add_parser("info", help="order, degree, classes")
    common(p, subgroups=0)

    g_gass = top.add_parser("gassmann", help="Gassmann triple detection")
    g_sub = g_gass.add_subparsers(dest="subcommand", required=True)
    p = g_sub.add_parser("check", help="test (G, H, H') for Gassmann equivalence")
    common(p, subgroups=2)

    g_tilde = top.add_parser("tilde", help="semidirect-product construction")
    g_sub = g_tilde.add_subparsers(dest="subcommand", required=True)
    p = g_sub.add_parser("build", help="build C_l^n : G and its distinguished lift")
    common(p, subgroups=1, l_flag=True)

    g_verify = top.add_parser("verify", help="theorem oracles")
    g_sub = g_verify.add_subparsers(dest="subcommand", required=True)
    p = g_sub.add_parser("irreducible", help="self inner product of Ind(chi) is 1")
    common(p, subgroups=1, l_flag=True)
    p = g_sub.add_parser("decomposition",
                         help="Ind_U(1) = Ind(1) + Ind(chi) + Ind(chi bar)")
    common(p, subgroups=1, l_flag=True)
    p = g_sub.add_parser("theorem-group",
                         help="exhaustive: induced-character equality forces "
                              "subgroup conjugacy")
    common(p, subgroups=1, l_flag=True)
    p = g_sub.add_parser("distinguish",
                         help="kernel-induced characters separate a "
                              "non-trivial Gassmann triple")
    common(p, subgroups=2, l_flag=True)

    g_cat = top.add_parser("catalog", help="pinned instances")
    g_sub = g_cat.add_subparsers(dest="subcommand", required=True)
    p = g_sub.add_parser("list", help="list catalog instances")
    p.add_argument("--json", action="store_true")
    p = g_sub.add_parser("show", help="emit an instance in the group text format")
    p.add_argument("name")
    p.add_argument("--member", default="parent", choices=["parent", "h", "hprime"])
    p.add_argument("--json", action="store_true")

    return parser


def _cap_of(args) -> int:
    if getattr(args, "cap", None):
        return args.cap
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError("%s must be an integer, got %r" % (CAP_ENV, env)) from None
    return DEFAULT_ELEMENT_CAP


def _dispatch(args):
    """Returns (command, inputs, outcome, details). outcome 'pass'/'ok'
    maps to exit 0, 'fail' to exit 1."""
    command = args.command + " " + getattr(args, "subcommand", "")
    cap = _cap_of(args) if hasattr(args, "cap") else DEFAULT_ELEMENT_CAP
    threads = getattr(args, "threads", 1)

    if args.command == "catalog":
        if args.subcommand == "list":
            entries = [
                {"name": name, "description": inst.description}
                for name, inst in sorted(catalog().items())
            ]
            return command, {}, "ok", {"instances": entries}
        inst = catalog_get(args.name)
        degree, gens = inst.member_generators(args.member)
        text = serialize_group(degree, gens,
                               header="%s/%s" % (args.name, args.member))
        return (command, {"name": args.name, "member": args.member}, "ok",
                {"text": text})

    if args.command == "group":
        group = _load_group(args.group, cap)
        table = group.conjugacy_classes()
        details = {
            "degree": group.degree,
            "order": group.order,
            "generators": len(group.generators),
            "conjugacy_classes": table.nclasses,
            "class_sizes": list(table.sizes),
            "class_representatives": [str(group.element(r)) for r in table.reps],
        }
        return command, {"group": args.group}, "ok", details

    group = _load_group(args.group, cap)
    h = _load_subgroup(group, args.subgroup)
    inputs = {"group": args.group, "subgroup": args.subgroup}

    if args.command == "gassmann":
        hp = _load_subgroup(group, args.subgroup2)
        inputs["subgroup2"] = args.subgroup2
        report = is_gassmann_triple(group, h, hp)
        return command, inputs, "ok", report.to_json()

    if args.command == "tilde":
        t, ht = tilde_build(group, h, args.l, cap=cap)
        chi = chi_character(t, ht)
        u = chi_kernel(t, ht)
        details = {
            "l": t.l,
            "n": t.n,
            "order": t.order,
            "lift_of_h_order": ht.order,
            "kernel_order": u.order,
            "kernel_index_in_lift": ht.order // u.order,
            "chi_is_homomorphism": True,  # validated during construction
            "chi_order": chi.char_order(),
        }
        return command, inputs, "ok", details

    # verify subcommands
    if args.subcommand == "irreducible":
        report = verify_irreducibility(group, h, args.l, cap=cap, threads=threads)
    elif args.subcommand == "decomposition":
        report = verify_decomposition(group, h, args.l, cap=cap, threads=threads)
    elif args.subcommand == "theorem-group":
        report = verify_theorem_group_exhaustive(group, h, args.l, cap=cap,
                                                 threads=threads)
    else:
        hp = _load_subgroup(group, args.subgroup2)
        inputs["subgroup2"] = args.subgroup2
        report = verify_main_distinguish(group, h, hp, args.l, cap=cap,
                                         threads=threads)
    return command, inputs, report.outcome, report.to_json()


def _emit(document, args, stream):
    if getattr(args, "json", False):
        stream.write(json.dumps(document, indent=2) + "\n")
        return
    details = document["details"]
    if document["command"] == "catalog show":
        stream.write(details["text"])
        return
    stream.write("command: %s\n" % document["command"])
    for key, value in document["inputs"].items():
        stream.write("input %s: %s\n" % (key, value))
    stream.write("outcome: %s\n" % document["outcome"])
    _emit_human_details(details, stream)
    stream.write("timing: %.3fs\n" % document["timing"])


def _emit_human_details(details, stream, indent="  "):
    if isinstance(details, dict):
        cases = details.get("cases")
        for key, value in details.items():
            if key == "cases":
                continue
            if key == "timing":
                continue
            stream.write("%s%s: %s\n" % (indent, key, _compact(value)))
        if cases is not None:
            stream.write("%scases (%d):\n" % (indent, len(cases)))
            for case in cases:
                flag = "ok" if case.get("ok", True) else "FAIL"
                rest = {k: v for k, v in case.items() if k not in ("case", "ok")}
                stream.write("%s  [%s] %s %s\n"
                             % (indent, flag, case.get("case", "?"), _compact(rest)))
    else:
        stream.write("%s%s\n" % (indent, _compact(details)))


def _compact(value):
    if isinstance(value, dict):
        if set(value) == {"order", "coeffs"}:
            return Cyclotomic.from_json(value).render()
        return "{" + ", ".join("%s=%s" % (k, _compact(v)) for k, v in value.items()) + "}"
    if isinstance(value, list):
        if len(value) > 12:
            return "[%s, ... %d items]" % (
                ", ".join(_compact(v) for v in value[:12]), len(value))
        return "[" + ", ".join(_compact(v) for v in value) + "]"
    return str(value)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    stream = sys.stdout
    try:
        command, inputs, outcome, details = _dispatch(args)
        code = 0 if outcome in ("ok", "pass") else 1
    except HypothesisNotMet as exc:
        command = "%s %s" % (args.command, getattr(args, "subcommand", ""))
        inputs = {k: getattr(args, k) for k in ("group", "subgroup", "subgroup2")
                  if hasattr(args, k)}
        outcome, details, code = "fail", {"error": str(exc)}, 1
    except UsageError as exc:
        command = "%s %s" % (args.command, getattr(args, "subcommand", ""))
        inputs = {}
        outcome, details, code = "usage-error", {"error": str(exc)}, 2
    except CapExceeded as exc:
        command = "%s %s" % (args.command, getattr(args, "subcommand", ""))
        inputs = {}
        outcome, details, code = "cap-exceeded", {"error": str(exc)}, 3

    document = {
        "command": command.strip(),
        "inputs": inputs,
        "config": {
            "l": getattr(args, "l", None),
            "cap": _safe_cap(args),
            "threads": getattr(args, "threads", 1),
            "output": "json" if getattr(args, "json", False) else "human",
            "kernel": backend_name(),
        },
        "outcome": outcome,
        "details": details,
        "timing": round(time.perf_counter() - t0, 6),
    }
    _emit(document, args, stream)
    return code


def _safe_cap(args):
    try:
        return _cap_of(args) if hasattr(args, "cap") else DEFAULT_ELEMENT_CAP
    except UsageError:
        return None


if __name__ == "__main__":
    sys.exit(main())
