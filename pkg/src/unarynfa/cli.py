"""Command-line interface.

Exit codes: 0 success or affirmative verdict, 1 negative verdict,
2 usage or parse error, 3 resource limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import _kernels
from .chrobak import cnf_to_nfa, convert_detailed, is_cnf
from .cycle_gcd import component_adjacency, cycle_profile
from .dot import cnf_to_dot
from .fuzz import named_fixtures, run_fuzz
from .nfa import BoundTooLarge, NfaError, member, parse_nfa, serialize_nfa
from .oracle import DETERMINIZE_LIMIT, BudgetExceeded, determinize
from .scc import decompose
from .semilinear import (
    PeriodTooLarge,
    ProgressionParseError,
    eps_from_progressions,
    first_difference,
    parse_progressions,
    serialize_progressions,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_nfa(args):
    fixture = getattr(args, "fixture", None)
    if fixture is not None:
        if args.input is not None:
            raise UsageError("give either an input file or --fixture, not both")
        return named_fixtures()[fixture]
    if args.input is None:
        raise UsageError("an input file (or --fixture) is required")
    return parse_nfa(_read(args.input))


def _kind(path, explicit):
    if explicit:
        return explicit
    return "aps" if str(path).endswith(".aps") else "nfa"


def _language(path, kind, det_limit):
    text = _read(path)
    if kind == "aps":
        return eps_from_progressions(parse_progressions(text))
    nfa = parse_nfa(text)
    if nfa.state_count <= det_limit:
        return determinize(nfa, det_limit)
    return eps_from_progressions(convert_detailed(nfa).progressions)


def _conversion_json(result, original_states):
    norm = result.normalized
    sccs = []
    if result.decomposition is not None:
        for cid, d in sorted(result.component_gcds.items()):
            states = sorted(result.decomposition.components[cid])
            sccs.append({
                "component": cid,
                "size": len(states),
                "gcd": d,
                "states": [norm.origin[q] for q in states],
            })
    cnf = result.cnf
    return {
        "schema": 1,
        "input_states": original_states,
        "n_prime": result.n_prime,
        "zero_accepted": result.zero_accepted,
        "bounds": {
            "singleton_max": result.singleton_bound,
            "offset_upper_exclusive": result.offset_upper,
        },
        "sccs": sccs,
        "progressions": [[p.offset, p.period] for p in result.progressions],
        "cnf": {
            "tail_length": cnf.tail_length,
            "tail_finals": sorted(cnf.tail_finals),
            "cycles": [
                {"period": c.period, "final_positions": sorted(c.final_positions)}
                for c in cnf.cycles
            ],
            "state_count": cnf.state_count,
        },
    }


def cmd_convert(args):
    nfa = _load_nfa(args)
    result = convert_detailed(nfa)
    if not result.progressions.progressions:
        print("note: the language is empty", file=sys.stderr)
    if args.format == "progressions":
        sys.stdout.write(serialize_progressions(result.progressions))
    elif args.format == "cnf":
        sys.stdout.write(serialize_nfa(cnf_to_nfa(result.cnf)))
    else:
        print(json.dumps(_conversion_json(result, nfa.state_count), indent=2))
    if args.dot:
        Path(args.dot).write_text(cnf_to_dot(result.cnf), encoding="utf-8")
    return EXIT_OK


def cmd_member(args):
    nfa = _load_nfa(args)
    verdicts = [member(nfa, x) for x in args.lengths]
    for x, ok in zip(args.lengths, verdicts):
        print(f"{x} {'accepted' if ok else 'rejected'}")
    return EXIT_OK if all(verdicts) else EXIT_NO


def cmd_equal(args):
    lhs = _language(args.lhs, _kind(args.lhs, args.lhs_kind), args.det_limit)
    rhs = _language(args.rhs, _kind(args.rhs, args.rhs_kind), args.det_limit)
    witness = first_difference(lhs, rhs)
    if witness is None:
        print("equal")
        return EXIT_OK
    side = "left" if witness in lhs else "right"
    print(f"not equal: {witness} is only in the {side} language")
    return EXIT_NO


def cmd_gcds(args):
    nfa = _load_nfa(args)
    dec = decompose(nfa)
    for cid in dec.nontrivial_ids():
        matrix, states = component_adjacency(nfa, dec.components[cid])
        profile = cycle_profile(matrix, states)
        print(
            f"component {cid} size {profile.component_size} gcd {profile.gcd_value} "
            f"states {' '.join(map(str, states))}"
        )
    return EXIT_OK


def cmd_sccs(args):
    nfa = _load_nfa(args)
    dec = decompose(nfa)
    for cid, comp in enumerate(dec.components):
        kind = "nontrivial" if dec.nontrivial[cid] else "trivial"
        print(f"component {cid} {kind} states {' '.join(map(str, sorted(comp)))}")
    for a, b in sorted(dec.condensation_edges):
        print(f"edge {a} {b}")
    return EXIT_OK


def cmd_oracle(args):
    nfa = _load_nfa(args)
    print(determinize(nfa, args.det_limit))
    return EXIT_OK


def cmd_check_cnf(args):
    nfa = _load_nfa(args)
    ok = is_cnf(nfa)
    print("chrobak normal form" if ok else "not in chrobak normal form")
    return EXIT_OK if ok else EXIT_NO


def cmd_fuzz(args):
    if args.max_states > args.det_limit:
        raise UsageError("--max-states must not exceed --det-limit")
    report = run_fuzz(args.count, args.max_states, args.seed, naive=args.naive,
                      include_fixtures=not args.no_fixtures)
    for name, nfa, witness in report.failures:
        print(f"FAIL {name}: languages differ at length {witness}")
        for line in serialize_nfa(nfa).splitlines():
            print(f"  {line}")
    mode = "naive overapproximation" if args.naive else "convert"
    print(f"{mode}: {report.checked} checked, {len(report.failures)} failures")
    return EXIT_OK if report.ok else EXIT_NO


def build_parser():
    parser = argparse.ArgumentParser(
        prog="unarynfa",
        description="Convert unary NFAs to arithmetic progressions and Chrobak normal form.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s 0.1.0 ({_kernels.BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)
    fixtures = sorted(named_fixtures())

    def nfa_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", help="NFA file ('-' for stdin)")
        p.add_argument("--fixture", choices=fixtures, help="use a built-in automaton")
        p.set_defaults(func=func)
        return p

    p = nfa_command("convert", cmd_convert, "convert an NFA")
    p.add_argument("--format", choices=("progressions", "cnf", "json"), default="progressions")
    p.add_argument("--dot", metavar="PATH", help="also write the Chrobak automaton as DOT")

    p = nfa_command("member", cmd_member, "test word lengths for membership")
    p.add_argument("--length", "-x", dest="lengths", type=int, action="append", required=True,
                   help="length to test (repeatable)")

    p = sub.add_parser("equal", help="compare two languages")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--lhs-kind", choices=("nfa", "aps"))
    p.add_argument("--rhs-kind", choices=("nfa", "aps"))
    p.add_argument("--det-limit", type=int, default=DETERMINIZE_LIMIT)
    p.set_defaults(func=cmd_equal)

    nfa_command("gcds", cmd_gcds, "cycle gcd of each nontrivial SCC")
    nfa_command("sccs", cmd_sccs, "print the SCC condensation")
    p = nfa_command("oracle", cmd_oracle, "determinize and print the canonical language")
    p.add_argument("--det-limit", type=int, default=DETERMINIZE_LIMIT)
    nfa_command("check-cnf", cmd_check_cnf, "check Chrobak normal form structure")

    p = sub.add_parser("fuzz", help="compare convert against the oracle on random NFAs")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--max-states", type=int, default=10)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--naive", action="store_true",
                   help="check the cycle-independent overapproximation instead")
    p.add_argument("--no-fixtures", action="store_true")
    p.add_argument("--det-limit", type=int, default=DETERMINIZE_LIMIT)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (NfaError, ProgressionParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BoundTooLarge, BudgetExceeded, PeriodTooLarge) as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
