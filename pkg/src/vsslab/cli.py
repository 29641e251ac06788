"""Command-line front end.

    vsslab run --scenario false-share --seed 7 --out transcript.json
    vsslab demo-integer-commitments --bits 12
    vsslab verify transcript.json

Exit codes: 0 when the run assembled the key (or the subcommand simply
succeeded), 2 when the key was blocked or a forgery was flagged, 1 for
usage, config, or verification errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import VsslabError
from .numtheory import Mode, is_prime
from .poly import SecretPolynomial
from .protocol import SCENARIO_NAMES, GenSpec, Verdict, build_scenario, run_scenario
from .transcript import audit_transcript, render_report
from .vss import INTEGER_COMMITMENT_GUARD_BITS, commit_integer

_DEMO_MAX_BITS = 20


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; this laboratory reserves
    # 2 for blocked keys, so usage problems are rerouted to exit 1
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="vsslab", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario and write its transcript")
    run.add_argument("--scenario", required=True, choices=SCENARIO_NAMES)
    run.add_argument("--n", type=int, default=5, help="number of parties (default 5)")
    run.add_argument("--t", type=int, default=3, help="reconstruction threshold (default 3)")
    run.add_argument("--params", help="registry parameter set name (default per scenario)")
    run.add_argument("--bits", type=int,
                     help="generate fresh parameters of this size instead of --params")
    run.add_argument("--seed", required=True, type=int, help="64-bit run seed")
    run.add_argument("--out", help="write the transcript here instead of stdout")

    demo = sub.add_parser("demo-integer-commitments",
                          help="size table for unreduced integer commitments")
    demo.add_argument("--bits", type=int, default=8,
                      help=f"largest executed exponent bit size, 1..{_DEMO_MAX_BITS}")
    demo.add_argument("--out", help="also write the size report as JSON")

    verify = sub.add_parser("verify", help="audit a transcript against the library")
    verify.add_argument("transcript", help="path to a transcript JSON file")
    return parser


def _cmd_run(args) -> int:
    if args.params and args.bits:
        raise _UsageError("--params and --bits are mutually exclusive")
    params_ref = args.params
    if args.bits is not None:
        mode = Mode.HARDENED if args.scenario == "hardened-attack" else Mode.VULNERABLE
        params_ref = GenSpec(bits=args.bits, mode=mode)
    config = build_scenario(args.scenario, seed=args.seed, n=args.n, t=args.t,
                            params_ref=params_ref)
    report = run_scenario(config)
    text = render_report(report)
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            print(f"cannot write transcript: {exc}", file=sys.stderr)
            return 1
        print(f"transcript written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    print(f"verdict: {report.verdict.value}", file=sys.stderr)
    return 0 if report.verdict is Verdict.KEY_ASSEMBLED else 2


def _cmd_demo(args) -> int:
    if not 1 <= args.bits <= _DEMO_MAX_BITS:
        raise _UsageError(f"--bits must be in 1..{_DEMO_MAX_BITS} for executed rows")
    # exponents: 0, then the smallest value of each bit size up to the cap
    exponents = [0] + [1 << (b - 1) for b in range(1, args.bits + 1)]
    modulus = max(exponents) + 1
    while not is_prime(modulus):  # smallest field that admits every exponent
        modulus += 1
    poly = SecretPolynomial(dealer=1, coeffs=tuple(exponents), field_modulus=modulus)
    values, report = commit_integer(poly, 2)

    print(f"unreduced commitments 2**a (guard: {INTEGER_COMMITMENT_GUARD_BITS} bits per value)")
    print(f"{'exponent a':>14}  {'bits of 2**a':>14}  note")
    for entry in report.entries:
        print(f"{entry.exponent:>14}  {entry.bit_length:>14}  executed, bits = a + 1")
    proj = report.projected
    approx = f"about 10**{(len(str(proj.bit_length)) - 1)}"
    flag = "INFEASIBLE to store" if proj.infeasible else "storable"
    print(f"{'~2**' + str(proj.exponent_log2):>14}  {approx:>14}  projected only, {flag}")
    print()
    print("a commitment to a coefficient of a 1024-bit prime field would need")
    print(f"floor(a * log2(g)) + 1 = {str(proj.bit_length)[:20]}... bits "
          f"({len(str(proj.bit_length))} decimal digits just to write the bit count);")
    print("no storage holds it, so the unreduced-commitment fix stays theoretical.")

    if args.out:
        import json
        doc = {
            "version": "1",
            "g": str(report.g),
            "entries": [
                {"exponent": str(e.exponent), "bit_length": str(e.bit_length)}
                for e in report.entries
            ],
            "projected": {
                "exponent_log2": proj.exponent_log2,
                "bit_length": str(proj.bit_length),
                "infeasible": proj.infeasible,
            },
        }
        try:
            Path(args.out).write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
        except OSError as exc:
            print(f"cannot write size report: {exc}", file=sys.stderr)
            return 1
        print(f"size report written to {args.out}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    try:
        raw = Path(args.transcript).read_text()
    except OSError as exc:
        print(f"cannot read transcript: {exc}", file=sys.stderr)
        return 1
    problems = audit_transcript(raw)
    if problems:
        for problem in problems:
            print(f"FAIL: {problem}", file=sys.stderr)
        return 1
    print("transcript verified: all entries recompute and regeneration matches",
          file=sys.stderr)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "demo-integer-commitments":
            return _cmd_demo(args)
        return _cmd_verify(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except VsslabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
