"""Command-line front end.

Exit status: 0 success, 1 a checked property or bound does not hold,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from permproj import algebra, commutative, explorer, io, projection
from permproj.automata import (
    AutomatonError,
    Dfa,
    completed_minimal_size,
    is_permutation_dfa,
    minimize,
)
from permproj.witness import BUILTINS, WITNESS_GAMMA, builtin, make_witness

CHECKS = ("permutation", "commutative", "state-partition", "normal",
          "orbits-permuted", "split-commutes")


class UsageError(Exception):
    pass


def _read(path: str) -> io.AutomatonFile:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return io.parse(text)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _symbols(arg: str) -> list[str]:
    return [s for s in arg.split(",") if s]


def _gamma(args, f: io.AutomatonFile) -> list[str]:
    d = f.dfa
    if getattr(args, "delta", None) is not None:
        delta = set(_symbols(args.delta))
        unknown = delta - set(d.symbols)
        if unknown:
            raise UsageError(f"unknown symbols in --delta: {sorted(unknown)}")
        return [s for s in d.symbols if s not in delta]
    if args.gamma is not None:
        return _symbols(args.gamma)
    if f.gamma is not None:
        return list(f.gamma)
    raise UsageError("no observable alphabet: pass --gamma (or --delta) or add a gamma: line")


def _emit(a, kind: str, gamma=None) -> str:
    if kind == "dot":
        return io.to_dot(a)
    if kind == "json":
        return json.dumps(io.to_json(a, gamma), indent=2) + "\n"
    if isinstance(a, projection.SubsetDfa):
        plain = Dfa(a.dfa.state_count, a.dfa.symbols, a.dfa.table, a.dfa.initial, a.dfa.finals)
        notes = "".join(f"# subset {q}: {a.dfa.label(q)}\n" for q in a.dfa.states)
        return io.serialize(plain) + notes
    return io.serialize(a, gamma)


def cmd_project(args) -> int:
    f = _read(args.input)
    gamma = _gamma(args, f)
    if args.oracle:
        result = projection.project_oracle(f.dfa, gamma)
    else:
        result = projection.project(f.dfa, gamma)
    if args.minimize:
        result = minimize(result.dfa if isinstance(result, projection.SubsetDfa) else result)
    size = result.state_count
    header = f"# states: {size}\n" if args.emit == "text" else ""
    sys.stdout.write(header + _emit(result, args.emit))
    if args.emit != "text":
        print(f"states: {size}", file=sys.stderr)
    return 0


def _fmt_set(d: Dfa, s) -> str:
    return "{" + ",".join(d.label(q) for q in sorted(s)) + "}"


def cmd_check(args) -> int:
    f = _read(args.input)
    d = f.dfa
    what = args.what
    if what == "permutation":
        ok = is_permutation_dfa(d)
        print("permutation" if ok else "not a permutation automaton")
        return 0 if ok else 1
    if what == "commutative":
        ok = algebra.is_commutative_dfa(d)
        print("commutative" if ok else "not commutative")
        return 0 if ok else 1
    gamma = _gamma(args, f)
    delta = [s for s in d.symbols if s not in set(gamma)]
    if what == "state-partition":
        v = projection.check_state_partition(d, gamma)
        print("state-partition" if v.is_state_partition else "not state-partition")
        print(f"disjoint: {str(v.disjoint).lower()}")
        print(f"covers_all_states: {str(v.covers_all_states).lower()}")
        if v.offending_pair:
            a, b = v.offending_pair
            print(f"offending pair: {_fmt_set(d, a)} {_fmt_set(d, b)}")
        return 0 if v.is_state_partition else 1
    if what == "normal":
        v = algebra.is_normal_subgroup(d, delta, args.cap)
        print(v.value)
        return 0 if v is algebra.Normality.NORMAL else 1
    if what == "orbits-permuted":
        ok = algebra.orbits_are_permuted(d, delta)
        print("orbits permuted" if ok else "orbits not permuted")
        return 0 if ok else 1
    if what == "split-commutes":
        v = commutative.split_commutes(d, gamma)
        if v.valid:
            print("split commutes")
            return 0
        a, b, q = v.offending_triple
        print(f"split does not commute: {a} {b} at state {d.label(q)}")
        return 1
    raise UsageError(f"unknown check {what!r}")


def cmd_minimize(args) -> int:
    f = _read(args.input)
    mini = minimize(f.dfa)
    print(f"states: {mini.state_count}")
    if args.complete:
        print(f"complete_states: {completed_minimal_size(f.dfa)}")
    if args.emit:
        sys.stdout.write(_emit(mini, args.emit))
    return 0


def cmd_witness(args) -> int:
    try:
        d = make_witness(args.n, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(io.serialize(d, WITNESS_GAMMA), args.out)
    return 0


def cmd_builtin(args) -> int:
    d, gamma = builtin(args.name)
    _write(io.serialize(d, gamma), args.out)
    return 0


def cmd_scan(args) -> int:
    policy = args.gamma_policy
    if policy not in ("drop-one-letter", "all-nonempty-proper"):
        policy = _symbols(policy)
    try:
        reports = explorer.scan(
            args.mode, kind=args.kind, n_min=args.n_min, n_max=args.n_max,
            letters=args.letters, samples=args.samples, seed=args.seed,
            gamma_policy=policy, workers=args.workers)
    except explorer.BoundViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="") as out:
            explorer.write_csv(reports, out)
    else:
        explorer.write_csv(reports, sys.stdout)
    print(f"{len(reports)} instances, all pass", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permproj", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("--in", dest="input", default="-", help="automaton file (default stdin)")

    def add_alphabet(sp):
        sp.add_argument("--gamma", help="observable letters, comma separated")
        sp.add_argument("--delta", help="erased letters, comma separated (instead of --gamma)")

    sp = sub.add_parser("project", help="projection automaton")
    add_input(sp)
    add_alphabet(sp)
    sp.add_argument("--minimize", action="store_true")
    sp.add_argument("--emit", choices=("text", "dot", "json"), default="text")
    sp.add_argument("--oracle", action="store_true", help="use epsilon-NFA determinization")
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("check", help="decide a structural property")
    add_input(sp)
    add_alphabet(sp)
    sp.add_argument("--what", choices=CHECKS, required=True)
    sp.add_argument("--cap", type=int, default=algebra.DEFAULT_CAP)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("minimize", help="minimal partial DFA size")
    add_input(sp)
    sp.add_argument("--complete", action="store_true", help="also report the completed size")
    sp.add_argument("--emit", choices=("text", "dot", "json"))
    sp.set_defaults(func=cmd_minimize)

    sp = sub.add_parser("witness", help="lower-bound witness automaton")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("scan", help="check bounds on many automata, CSV report")
    sp.add_argument("--mode", choices=("exhaustive", "random"), required=True)
    sp.add_argument("--kind", choices=("permutation", "commutative", "general"),
                    default="permutation")
    sp.add_argument("--n-min", type=int, default=1)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--letters", type=int, default=2)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--gamma-policy", default="drop-one-letter",
                    help="drop-one-letter, all-nonempty-proper, or explicit letters a,b")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("builtin", help="write a named example automaton")
    sp.add_argument("--name", choices=sorted(BUILTINS), required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_builtin)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, io.ParseError, AutomatonError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
