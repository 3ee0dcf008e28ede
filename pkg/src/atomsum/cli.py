"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import icg, verify
from .atoms import atom, atom_partition, format_leader, ideal_of
from .decompose import locate_sum, sumset_decompose
from .errors import INT64_MAX, AtomsumError, enforce_cap
from .repcount import count_profile, in_sumset, rep_count

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
CLI_MAX_N = 10**6


class UsageError(Exception):
    pass


def _uint(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value <= INT64_MAX:
        raise argparse.ArgumentTypeError(f"{text} is not a non-negative 64-bit integer")
    return value


def _modulus(text: str) -> int:
    n = _uint(text)
    if n < 1:
        raise argparse.ArgumentTypeError("modulus must be positive")
    return n


def _divisor_list(text: str) -> list[int]:
    items = [_uint(part.strip()) for part in text.split(",") if part.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty divisor set")
    if len(set(items)) != len(items):
        raise argparse.ArgumentTypeError(f"duplicate divisors in {text!r}")
    return items


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _leaders_text(n: int, leaders) -> str:
    return " ".join(format_leader(n, d) for d in leaders) if leaders else "(none)"


# Each handler returns (payload for JSON, text rendering, exit code).

def cmd_atom(args):
    enforce_cap(args.n, CLI_MAX_N)
    s = atom(args.n, args.a)
    data = {"n": s.n, "leader": s.leader, "size": len(s), "elements": list(s.elements)}
    text = f"leader={format_leader(s.n, s.leader)} size={len(s)}: " + " ".join(map(str, s.elements))
    return data, text, EXIT_OK


def cmd_atoms(args):
    enforce_cap(args.n, CLI_MAX_N)
    parts = atom_partition(args.n)
    data = {"n": args.n, "atoms": [{"leader": s.leader, "size": len(s), "elements": list(s.elements)} for s in parts]}
    lines = [f"leader={format_leader(s.n, s.leader)} size={len(s)}: " + " ".join(map(str, s.elements)) for s in parts]
    return data, "\n".join(lines), EXIT_OK


def cmd_ideal(args):
    ideal = ideal_of(args.n, args.a)
    data = {"n": ideal.n, "leader": ideal.leader, "order": ideal.order, "zero": ideal.is_zero}
    text = f"leader={format_leader(ideal.n, ideal.leader)} order={ideal.order}"
    return data, text, EXIT_OK


def cmd_count(args):
    br = rep_count(args.n, args.a, args.b, args.c)
    q = br.reduced
    data = {"n": args.n, "a": args.a, "b": args.b, "c": args.c, **br.as_dict()}
    c_red = "-" if q.c is None else q.c
    lines = [
        f"g={q.g} n'={q.n} a'={q.a} b'={q.b} c'={c_red}",
        f"m={br.m} m1={br.m1} m2={br.m2} m3={br.m3} m3~={br.m3_tilde}",
        f"count={br.count}",
    ]
    if br.reason:
        lines.append(f"reason: {br.reason}")
    return data, "\n".join(lines), EXIT_OK


def cmd_member(args):
    member = in_sumset(args.n, args.a, args.b, args.c)
    data = {"n": args.n, "a": args.a, "b": args.b, "c": args.c, "member": member}
    return data, "true" if member else "false", EXIT_OK


def cmd_profile(args):
    enforce_cap(args.n, CLI_MAX_N)
    prof = count_profile(args.n, args.a, args.b)
    data = {"n": args.n, "a": args.a, "b": args.b, "counts": {str(d): c for d, c in prof.items()}}
    text = "\n".join(f"{format_leader(args.n, d)}: {c}" for d, c in prof.items())
    return data, text, EXIT_OK


def cmd_sumset(args):
    dec = sumset_decompose(args.n, args.a, args.b)
    data = {
        "n": dec.n,
        "a": dec.a,
        "b": dec.b,
        "g": dec.g,
        "n_reduced": dec.n_reduced,
        "m3_tilde": dec.m3_tilde,
        "case": dec.case,
        "leaders": list(dec.leaders),
    }
    text = (
        f"case={dec.case} g={dec.g} n'={dec.n_reduced} m3~={dec.m3_tilde}\n"
        f"leaders: {_leaders_text(dec.n, dec.leaders)}"
    )
    return data, text, EXIT_OK


def cmd_locate(args):
    leader = locate_sum(args.n, args.a, args.b, args.c)
    data = {"n": args.n, "a": args.a, "b": args.b, "c": args.c, "leader": leader}
    text = "absent" if leader is None else format_leader(args.n, leader)
    return data, text, EXIT_OK


def cmd_icg(args):
    enforce_cap(args.n, CLI_MAX_N)
    g = icg.build(args.n, args.divisors)
    if args.action == "levels":
        report = icg.distance_levels(g)
        return report.as_dict(), icg.render_levels(report), EXIT_OK
    if args.action == "power":
        cumulative, exact = icg.power_divisor_sets(g, args.r)
        data = {"n": g.n, "D": list(g.divisors), "r": args.r, "cumulative": cumulative, "level_exact": exact}
        text = (
            f"level-exact: {{{','.join(map(str, exact))}}}\n"
            f"cumulative: {{{','.join(map(str, cumulative))}}}"
        )
        return data, text, EXIT_OK
    payload = icg.export(g, args.fmt)
    return None, payload.decode("ascii").rstrip("\n"), EXIT_OK


def cmd_verify(args):
    limit = verify.MODE_LIMITS[args.mode]
    if args.n_max > limit:
        raise UsageError(f"verify {args.mode} is limited to n_max <= {limit}")
    kwargs = {"samples": args.samples, "seed": args.seed} if args.mode == "levels" else {}
    res = verify.run(args.mode, args.n_max, **kwargs)
    data = {"mode": res.mode, "n_max": res.n_max, "checked": res.checked, "mismatches": res.mismatches,
            "examples": res.examples}
    lines = [f"checked {res.checked} queries, {res.mismatches} mismatches"]
    lines += [f"  mismatch: {e}" for e in res.examples]
    return data, "\n".join(lines), EXIT_OK if res.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS,
                        help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="atomsum", parents=[common],
                                     description="Atoms, atom sumsets and integral circulant graphs in Z_n.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_, *positionals):
        p = sub.add_parser(name, parents=[common], help=help_)
        for pname, ptype, phelp in positionals:
            p.add_argument(pname, type=ptype, help=phelp)
        p.set_defaults(func=func)
        return p

    n_arg = ("n", _modulus, "modulus")
    a_arg, b_arg = ("a", _uint, "leader (divisor of n)"), ("b", _uint, "leader (divisor of n)")
    c_arg = ("c", _uint, "residue in [0, n)")

    add("atom", cmd_atom, "list the atom of a residue", n_arg, ("a", _uint, "residue in [0, n)"))
    add("atoms", cmd_atoms, "partition Z_n into atoms", n_arg)
    add("ideal", cmd_ideal, "leader and order of the ideal generated by a", n_arg, ("a", _uint, "residue"))
    add("count", cmd_count, "number of representations c = u + v", n_arg, a_arg, b_arg, c_arg)
    add("member", cmd_member, "is c in atom(a) + atom(b)?", n_arg, a_arg, b_arg, c_arg)
    add("profile", cmd_profile, "representation count per atom", n_arg, a_arg, b_arg)
    add("sumset", cmd_sumset, "decompose atom(a) + atom(b) into atoms", n_arg, a_arg, b_arg)
    add("locate", cmd_locate, "leader of the atom containing the sum c", n_arg, a_arg, b_arg, c_arg)

    p = add("icg", cmd_icg, "integral circulant graph ICG(n, D)", n_arg)
    p.add_argument("-d", "--divisors", type=_divisor_list, required=True, help="comma-separated divisor set D")
    actions = p.add_subparsers(dest="action", required=True, metavar="ACTION")
    actions.add_parser("levels", parents=[common], help="distance levels from vertex 0")
    pw = actions.add_parser("power", parents=[common], help="divisor sets of the r-th distance power")
    pw.add_argument("r", type=_modulus)
    ex = actions.add_parser("export", parents=[common], help="serialize the graph")
    ex.add_argument("fmt", choices=icg.EXPORT_FORMATS)

    p = add("verify", cmd_verify, "compare closed forms with brute force", ("n_max", _modulus, "largest n"),
            ("mode", str, "count | sumset | levels | lemmas"))
    p.add_argument("--samples", type=int, default=4, help="random divisor sets per n (levels mode)")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    if args.command == "verify" and args.mode not in verify.MODES:
        parser.error(f"unknown verify mode {args.mode!r}; choose from {', '.join(verify.MODES)}")
    try:
        data, text, code = args.func(args)
    except (AtomsumError, UsageError) as exc:
        print(f"atomsum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if fmt == "json" and data is not None:
        out = _dump_json(data)
    else:
        out = text + "\n"
    output = getattr(args, "output", None)
    if output:
        Path(output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
