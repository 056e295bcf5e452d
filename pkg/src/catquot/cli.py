"""Command-line front end.

Exit codes: 0 = computed (and any checked property holds), 1 = a checked
condition or identity fails, 2 = unusable input.  ``--machine`` switches
to the line-oriented stable output; identical inputs and flags produce
byte-identical machine output.
"""

from __future__ import annotations

import argparse
import sys
from random import Random

from . import textio
from .actions import ActionError, generate_action
from .conditions import (
    ConditionUnmet,
    FamilyError,
    check_c,
    check_ct,
    check_r,
    check_s,
    check_sr,
    check_srp,
    check_strong_s,
)
from .crosscheck import battery_failures, run_battery
from .fincat import (
    CategoryError,
    PosetError,
    barycentric_subdivision,
    category_from_poset,
    chain_elements,
    underlying_order,
    validate_category,
    validate_functor,
)
from .formulas import betti_multiplicity, burnside_euler, gm_quotient, mobius_quotient
from .homology import homology, mobius, mobius_recursive
from .nerve import lambda_skeleton_report, nerve
from .quotient import NotAPosetError, quotient_category
from .randgen import random_instance


class _InputError(Exception):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_category(args):
    if getattr(args, "category", None):
        return textio.parse_category(_read(args.category))
    if getattr(args, "poset", None):
        return category_from_poset(textio.parse_poset(_read(args.poset)))
    raise _InputError("provide --category or --poset")


def _load_poset(args):
    if getattr(args, "poset", None):
        return textio.parse_poset(_read(args.poset))
    if getattr(args, "category", None):
        return underlying_order(textio.parse_category(_read(args.category)))
    raise _InputError("provide --poset or --category")


def _load_action(args, cat):
    if not getattr(args, "action", None):
        raise _InputError("provide --action")
    gens = textio.parse_generators(_read(args.action), cat)
    return generate_action(cat, gens)


def _condition_line(report):
    status = "PASS" if report.verdict else "FAIL"
    parts = [report.condition.upper() if report.condition != "strongS" else "STRONG-S", status]
    if report.t is not None:
        parts.append(f"t={report.t}")
    if report.witness is not None:
        parts.append("witness " + ",".join(str(w) for w in report.witness))
    return " ".join(parts)


def cmd_validate(args, out):
    code = 0
    try:
        cat = _load_category(args)
    except textio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = validate_category(cat)
    if report.ok:
        out("category ok")
    else:
        code = 2
        for law, witness in report.violations:
            out(f"category violation {law} {','.join(str(w) for w in witness)}")
        if any(law == "composition-missing" for law, _ in report.violations):
            print("error: composition not total", file=sys.stderr)
    if getattr(args, "action", None):
        try:
            gens = textio.parse_generators(_read(args.action), cat)
        except textio.ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        for i, gen in enumerate(gens):
            rep = validate_functor(gen, cat, cat)
            if rep.ok:
                out(f"generator {i} ok")
            else:
                law, witness = rep.violations[0]
                out(f"generator {i} violation {law} {','.join(str(w) for w in witness)}")
                code = 2
        if code == 0:
            try:
                action = generate_action(cat, gens)
            except ActionError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            out(f"action ok order {action.order}")
    return code


def cmd_quotient(args, out):
    cat = _load_category(args)
    action = _load_action(args, cat)
    quotient = quotient_category(cat, action)
    out(textio.format_category(quotient.category).rstrip("\n"))
    for x in range(cat.n_objects):
        out(f"class obj {x} {quotient.obj_class[x]}")
    for m in range(cat.n_morphisms):
        out(f"class {m} {quotient.mor_class[m]}")
    return 0


def cmd_conditions(args, out):
    cat = _load_category(args)
    action = _load_action(args, cat)
    kind = args.check
    if kind == "r":
        report = check_r(cat, action)
    elif kind == "ct":
        if args.t is None:
            raise _InputError("--check ct needs --t")
        report = check_ct(cat, action, args.t)
    elif kind == "c":
        report, _ = check_c(cat, action)
    elif kind == "s":
        if not args.family:
            raise _InputError("--check s needs --family")
        family = textio.parse_family(_read(args.family), cat.n_morphisms)
        report = check_s(cat, action, family)
    elif kind == "strong-s":
        report = check_strong_s(cat, action)
    elif kind == "sr":
        report = check_sr(cat, action)
    elif kind == "srp":
        report = check_srp(_load_poset(args), action)
    else:  # pragma: no cover - argparse restricts choices
        raise _InputError(f"unknown condition {kind}")
    out(_condition_line(report))
    return 0 if report.verdict else 1


def cmd_nerve(args, out):
    cat = _load_category(args)
    complex_ = nerve(cat, max_dim=args.max_dim)
    for d, count in enumerate(complex_.f_vector()):
        out(f"simplices {d} {count}")
    out(f"euler {sum((-1) ** d * c for d, c in enumerate(complex_.f_vector()))}")
    return 0


def cmd_homology(args, out):
    cat = _load_category(args)
    result = homology(nerve(cat, max_dim=args.max_dim))
    for d, b in enumerate(result.betti_numbers):
        out(f"betti {d} {b}")
    for d, tor in enumerate(result.torsion):
        if tor:
            out(f"torsion {d} {','.join(str(t) for t in tor)}")
    out(f"euler {result.euler}")
    return 0


def cmd_lambda(args, out):
    cat = _load_category(args)
    action = _load_action(args, cat)
    report = lambda_skeleton_report(cat, action, max_dim=args.max_dim)
    for d, inj in enumerate(report.injective):
        out(f"lambda {d} surjective=true injective={'true' if inj else 'false'}")
    return 0 if report.is_isomorphism() else 1


def cmd_mobius(args, out):
    cat = _load_category(args)
    value = mobius(cat)
    if args.table:
        _, table = mobius_recursive(cat)
        out(f"mu bottom {table['bottom']}")
        for x in range(cat.n_objects):
            out(f"mu {x} {table[x]}")
        out(f"mu top {table['top']}")
    out(f"mobius {value}")
    return 0


def cmd_formulas(args, out):
    name = args.identity
    if name == "gm":
        if not args.lattice:
            raise _InputError("--identity gm needs --lattice")
        lattice = textio.parse_lattice(_read(args.lattice))
        cat = category_from_poset(lattice.poset)
        action = _load_action(args, cat)
        if args.i is None:
            raise _InputError("--identity gm needs --i")
        report = gm_quotient(lattice, action, args.i)
    else:
        cat = _load_category(args)
        action = _load_action(args, cat)
        if name == "euler":
            report = burnside_euler(cat, action)
        elif name == "mobius":
            report = mobius_quotient(cat, action)
        elif name == "betti":
            if args.i is None:
                raise _InputError("--identity betti needs --i")
            report = betti_multiplicity(cat, action, args.i)
        else:  # pragma: no cover
            raise _InputError(f"unknown identity {name}")
    out(
        f"identity {report.name.split()[0]} left={report.left} right={report.right} "
        f"equal={'true' if report.equal else 'false'}"
    )
    for label, value in report.breakdown:
        out(f"term {label}: {value}")
    return 0 if report.equal else 1


def cmd_subdivide(args, out):
    poset = _load_poset(args)
    bd = barycentric_subdivision(poset)
    chains = chain_elements(poset)
    out(textio.format_poset(bd).rstrip("\n"))
    for i, chain in enumerate(chains):
        out(f"chain {i} {','.join(str(x) for x in chain)}")
    return 0


def _run_one_battery(poset, cat, action, out, tag):
    failures = battery_failures(run_battery(poset, cat, action))
    for f in failures:
        out(f"instance {tag} FAIL {f.name} {f.detail}".rstrip())
    return not failures


def cmd_fuzz(args, out):
    if args.replay:
        text = _read(args.replay)
        poset = textio.parse_poset(text)
        cat = category_from_poset(poset)
        gens = textio.parse_generators(text, cat)
        action = generate_action(cat, gens)
        ok = _run_one_battery(poset, cat, action, out, "replay")
        out(f"{int(ok)}/1 equivalences hold")
        return 0 if ok else 1
    rng = Random(args.seed)
    good = 0
    failed = []
    for k in range(args.instances):
        poset, cat, action = random_instance(
            rng, max_elements=args.max_elements, max_order=args.max_group
        )
        if _run_one_battery(poset, cat, action, out, str(k)):
            good += 1
        else:
            path = f"fuzz_failure_{k}.txt"
            gens = [action.elements[g] for g in range(1, action.order)]
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(f"# fuzz instance {k} seed {args.seed}\n")
                fh.write(textio.format_poset(poset))
                fh.write(textio.format_generators(gens))
            failed.append(path)
    out(f"{good}/{args.instances} equivalences hold")
    for path in failed:
        out(f"replay {path}")
    return 0 if good == args.instances else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="catquot",
        description="quotients of finite posets and loopfree categories by group actions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, action=False, poset_ok=True):
        p.add_argument("--category", help="category file")
        if poset_ok:
            p.add_argument("--poset", help="poset file (categorified on load)")
        if action:
            p.add_argument("--action", help="action file with gen lines")
        p.add_argument("--machine", action="store_true", help="stable line output")
        p.add_argument("--max-dim", type=int, default=None, dest="max_dim")

    p = sub.add_parser("validate", help="validate category and action files")
    common(p, action=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("quotient", help="categorical quotient with class maps")
    common(p, action=True)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("conditions", help="decide a named condition")
    common(p, action=True)
    p.add_argument("--check", required=True, choices=["r", "c", "ct", "s", "strong-s", "sr", "srp"])
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--family", help="subgroup family file (sub lines)")
    p.set_defaults(func=cmd_conditions)

    p = sub.add_parser("nerve", help="simplex counts of the nerve")
    common(p)
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("homology", help="Betti numbers and torsion of the nerve")
    common(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("lambda-check", help="injectivity of the canonical map per dimension")
    common(p, action=True)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("mobius", help="Möbius value of a category or poset")
    common(p)
    p.add_argument("--table", action="store_true", help="print the recursion table")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("formulas", help="evaluate both sides of an identity")
    common(p, action=True)
    p.add_argument("--identity", required=True, choices=["euler", "mobius", "betti", "gm"])
    p.add_argument("--i", type=int, default=None, help="homology degree")
    p.add_argument("--lattice", help="labeled lattice file (poset + dim lines)")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("subdivide", help="barycentric subdivision of a poset")
    common(p)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("fuzz", help="random instances through the equivalence battery")
    p.add_argument("--machine", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--max-elements", type=int, default=7, dest="max_elements")
    p.add_argument("--max-group", type=int, default=8, dest="max_group")
    p.add_argument("--replay", help="re-run a serialized failure file")
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    lines: list[str] = []

    def out(line):
        lines.append(line)

    try:
        code = args.func(args, out)
    except (textio.ParseError, _InputError, CategoryError, PosetError, ActionError,
            FamilyError, NotAPosetError, ConditionUnmet, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
