"""Command-line front end: JSON reports over the library operations.

Every command prints a report {command, inputs, results, status}; output
is JSON by default (deterministic key order) with an optional --pretty
rendering.  Exit codes: 0 ok, 2 not found (exhausted searches), 1 error.

Gaussian integers use the literal grammar `a`, `a+bi`, `a-bi` (e.g. 5,
2+1i, -1+2i); words are comma-separated digit literals, msd-first, with
the empty string for the empty word.  Literals starting with `-` must
follow a `--` separator, as usual for argparse.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import verification
from .automata import (
    dfa_from_json,
    dfa_oracle_disagreement,
    dfa_to_json,
    equivalent,
    integers_dfa,
    integers_oracle,
    minimize,
    powers_dfa,
    powers_oracle,
    residual_signatures,
    run as dfa_run,
    zero_pump_probe,
)
from .dependence import group_witness, mult_dependent, prefix_extension
from .gaussint import GaussInt
from .numeration import (
    canonical_digit_set,
    decode,
    digit_set_to_json,
    encode,
    lattice_disc,
    length_bound,
    word_from_text,
    word_length,
    word_to_text,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_FOUND = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits usage errors with code 2; keep 2 reserved for not_found."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _bound(text: str) -> tuple[int, int]:
    try:
        num, den = text.split("/", 1)
        return int(num), int(den)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bound must be NUM/DEN, got {text!r}") from exc


def _oracle_for(selector: str, base: GaussInt):
    """Parse the oracle selector `powers:GAUSS` or `integers`."""
    D = canonical_digit_set(base)
    if selector == "integers":
        return integers_oracle(D)
    if selector.startswith("powers:"):
        return powers_oracle(GaussInt.parse(selector.removeprefix("powers:")), D)
    raise ValueError(f"unknown set selector {selector!r}; use powers:GAUSS or integers")


def cmd_digits(args) -> tuple[dict, dict, str]:
    D = canonical_digit_set(args.base)
    return {"base": str(args.base)}, {"digit_set": digit_set_to_json(D)}, "ok"


def cmd_encode(args) -> tuple[dict, dict, str]:
    D = canonical_digit_set(args.base)
    w = encode(args.value, D)
    inputs = {"base": str(args.base), "value": str(args.value)}
    return inputs, {"word": word_to_text(w), "length": len(w)}, "ok"


def cmd_decode(args) -> tuple[dict, dict, str]:
    D = canonical_digit_set(args.base)
    w = word_from_text(args.word)
    value = decode(w, D)
    inputs = {"base": str(args.base), "word": args.word}
    return inputs, {"value": str(value), "norm": value.norm()}, "ok"


def cmd_scan_bases(args) -> tuple[dict, dict, str]:
    inputs = {
        "norm_min": args.norm_min,
        "norm_max": args.norm_max,
        "disc": args.disc,
        "k_max": args.k_max,
    }
    rows = []
    all_pass = True
    for b in lattice_disc(args.norm_max):
        n = b.norm()
        if n < max(5, args.norm_min):
            continue
        D = canonical_digit_set(b)
        digit_count_ok = len(D.digits) == n
        roundtrip_ok = all(decode(encode(z, D), D) == z for z in lattice_disc(args.disc))
        lb = length_bound(b)
        length_ok = all(
            word_length(z, D) <= k
            for z in lattice_disc(args.disc)
            for k in range(args.k_max + 1)
            if lb.within_bound(z, k)
        )
        ok = digit_count_ok and roundtrip_ok and length_ok
        all_pass = all_pass and ok
        rows.append(
            {
                "base": str(b),
                "norm": n,
                "digit_count_ok": digit_count_ok,
                "roundtrip_ok": roundtrip_ok,
                "length_bound_ok": length_ok,
                "pass": ok,
            }
        )
    return inputs, {"bases": rows, "all_pass": all_pass}, "ok"


def cmd_deptest(args) -> tuple[dict, dict, str]:
    verdict = mult_dependent(args.a, args.b)
    inputs = {"a": str(args.a), "b": str(args.b)}
    results = {"dependent": verdict.dependent, "r": verdict.r, "s": verdict.s}
    return inputs, results, "ok"


def cmd_witness(args) -> tuple[dict, dict, str]:
    num, den = args.bound
    inputs = {
        "a": str(args.a),
        "b": str(args.b),
        "u": str(args.u),
        "bound": f"{num}/{den}",
        "m_max": args.m_max,
    }
    w = group_witness(args.a, args.b, args.u, num, den, args.m_max)
    if w is None:
        return inputs, {"searched_m_max": args.m_max}, "not_found"
    results = {
        "m": w.m,
        "n": w.n,
        "u": str(w.u),
        "err_num": w.err_num,
        "err_den": w.err_den,
        "certified": w.verify(),
    }
    return inputs, results, "ok"


def _prefix_witness_json(w) -> dict:
    D = canonical_digit_set(w.b)
    return {
        "m": w.m,
        "n": w.n,
        "z": str(w.z),
        "word_am": word_to_text(encode(w.a**w.m, D)),
        "word_u": word_to_text(encode(w.u, D)),
        "certified": w.verify(),
    }


def cmd_prefix(args) -> tuple[dict, dict, str]:
    inputs = {
        "a": str(args.a),
        "b": str(args.b),
        "u": str(args.u),
        "n_min": args.n_min,
        "budget": args.budget,
        "depth": args.depth,
    }
    chain = []
    u = args.u
    status = "ok"
    for _ in range(args.depth + 1):
        w = prefix_extension(args.a, args.b, u, args.n_min, args.budget)
        if w is None:
            status = "not_found"
            break
        chain.append(_prefix_witness_json(w))
        u = args.a**w.m
    results: dict = {"witness": chain[0] if chain else None}
    if args.depth > 0 or status == "not_found":
        results["chain"] = chain
        results["chain_depth_reached"] = max(0, len(chain) - 1)
    return inputs, results, status


def cmd_residuals(args) -> tuple[dict, dict, str]:
    D = canonical_digit_set(args.b)
    inputs = {"a": str(args.a), "b": str(args.b), "k": args.k, "e": args.e}

    def side(generator: GaussInt) -> dict:
        report = residual_signatures(powers_oracle(generator, D), args.k, args.e)
        return {
            "generator": str(generator),
            "class_count": report.class_count,
            "representatives": [word_to_text(w) for w in report.representatives[:12]],
        }

    results = {"target": side(args.a), "control": side(args.b)}
    return inputs, results, "ok"


def cmd_pump(args) -> tuple[dict, dict, str]:
    oracle = _oracle_for(args.set, args.base)
    w = word_from_text(args.word)
    probe = zero_pump_probe(oracle, w, args.k, args.reps)
    inputs = {
        "base": str(args.base),
        "set": args.set,
        "word": args.word,
        "k": args.k,
        "reps": args.reps,
    }
    results = {"memberships": list(probe), "all_members": all(probe)}
    return inputs, results, "ok"


def _load_dfa(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return dfa_from_json(json.load(fh))


def cmd_dfa(args) -> tuple[dict, dict, str]:
    if args.dfa_command == "make":
        if args.kind == "integers":
            d = integers_dfa(args.base)
        else:
            d = powers_dfa(args.base)
        if args.dfa_out:
            with open(args.dfa_out, "w", encoding="utf-8") as fh:
                json.dump(dfa_to_json(d), fh, indent=2, sort_keys=True)
        inputs = {"kind": args.kind, "base": str(args.base)}
        return inputs, {"dfa": dfa_to_json(d)}, "ok"
    if args.dfa_command == "run":
        d = _load_dfa(args.file)
        w = word_from_text(args.word)
        inputs = {"file": args.file, "word": args.word}
        return inputs, {"accepts": dfa_run(d, w)}, "ok"
    if args.dfa_command == "min":
        d = _load_dfa(args.file)
        m = minimize(d)
        if args.dfa_out:
            with open(args.dfa_out, "w", encoding="utf-8") as fh:
                json.dump(dfa_to_json(m), fh, indent=2, sort_keys=True)
        inputs = {"file": args.file}
        return inputs, {"states_before": d.state_count, "dfa": dfa_to_json(m)}, "ok"
    if args.dfa_command == "equiv":
        d1, d2 = _load_dfa(args.file), _load_dfa(args.file2)
        inputs = {"file": args.file, "file2": args.file2}
        return inputs, {"equivalent": equivalent(d1, d2)}, "ok"
    if args.dfa_command == "falsify":
        d = _load_dfa(args.file)
        oracle = _oracle_for(args.set, d.alphabet.base)
        word = dfa_oracle_disagreement(d, oracle, args.max_len)
        inputs = {"file": args.file, "set": args.set, "max_len": args.max_len}
        results = {
            "disagreement": None if word is None else word_to_text(word),
            "agrees_up_to": args.max_len if word is None else None,
        }
        return inputs, results, "ok"
    raise ValueError(f"unknown dfa subcommand {args.dfa_command!r}")


def cmd_verify(args) -> tuple[dict, dict, str]:
    results = verification.run_all(verbose=False)
    criteria = [
        {
            "name": r.name,
            "passed": r.passed,
            "seconds": round(r.seconds, 3),
            "budget_seconds": r.budget_seconds,
            "details": r.details,
            "failures": r.failures,
        }
        for r in results
    ]
    all_passed = all(r.passed for r in results)
    status = "ok" if all_passed else "error"
    return {}, {"criteria": criteria, "all_passed": all_passed}, status


def _render_pretty(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(obj, dict):
        for key in obj:
            value = obj[key]
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_pretty(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(value)}")
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_pretty(value, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(value)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gaussbase",
        description="Numeration systems for the Gaussian integers in a complex base.",
    )
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="JSON report (default)")
    mode.add_argument("--pretty", action="store_true", help="human-readable rendering")
    common.add_argument("-o", "--out", metavar="FILE", help="also write the JSON report to FILE")

    sub = parser.add_subparsers(dest="command", required=True)
    gauss = GaussInt.parse

    p = sub.add_parser("digits", parents=[common], help="canonical digit set of a base")
    p.add_argument("-b", "--base", type=gauss, required=True)
    p.set_defaults(handler=cmd_digits)

    p = sub.add_parser("encode", parents=[common], help="word of a Gaussian integer")
    p.add_argument("-b", "--base", type=gauss, required=True)
    p.add_argument("value", type=gauss)
    p.set_defaults(handler=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="value of an msd-first word")
    p.add_argument("-b", "--base", type=gauss, required=True)
    p.add_argument("word", help="comma-separated digits, empty string for the empty word")
    p.set_defaults(handler=cmd_decode)

    p = sub.add_parser("scan-bases", parents=[common], help="digit/roundtrip/length checks over a norm range")
    p.add_argument("--norm-min", type=int, default=5)
    p.add_argument("--norm-max", type=int, default=30)
    p.add_argument("--disc", type=int, default=100, help="squared radius of the probe disc")
    p.add_argument("--k-max", type=int, default=8)
    p.set_defaults(handler=cmd_scan_bases)

    p = sub.add_parser("deptest", parents=[common], help="multiplicative dependence verdict")
    p.add_argument("a", type=gauss)
    p.add_argument("b", type=gauss)
    p.set_defaults(handler=cmd_deptest)

    p = sub.add_parser("witness", parents=[common], help="certified |a^m/b^n - u| bound search")
    p.add_argument("a", type=gauss)
    p.add_argument("b", type=gauss)
    p.add_argument("u", type=gauss)
    p.add_argument("--bound", type=_bound, default=(1, 25), metavar="NUM/DEN")
    p.add_argument("--m-max", type=int, default=256)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("prefix", parents=[common], help="prefix-extension witness (optionally chained)")
    p.add_argument("a", type=gauss)
    p.add_argument("b", type=gauss)
    p.add_argument("u", type=gauss)
    p.add_argument("--n-min", type=int, default=0)
    p.add_argument("--budget", type=int, default=256, help="largest exponent m searched")
    p.add_argument("--depth", type=int, default=0, help="extra chain levels beyond the first witness")
    p.set_defaults(handler=cmd_prefix)

    p = sub.add_parser("residuals", parents=[common], help="residual classes of powers of a over base b")
    p.add_argument("a", type=gauss)
    p.add_argument("b", type=gauss)
    p.add_argument("-k", type=int, default=4, help="prefix depth")
    p.add_argument("-e", type=int, default=3, help="extension depth")
    p.set_defaults(handler=cmd_residuals)

    p = sub.add_parser("pump", parents=[common], help="insert zero blocks behind the leading digit")
    p.add_argument("-b", "--base", type=gauss, required=True)
    p.add_argument("--set", required=True, help="powers:GAUSS or integers")
    p.add_argument("--word", required=True)
    p.add_argument("-k", type=int, default=1, help="zeros per pump block")
    p.add_argument("--reps", type=int, default=8)
    p.set_defaults(handler=cmd_pump)

    p = sub.add_parser("dfa", parents=[common], help="DFA engine over JSON automata")
    dfa_sub = p.add_subparsers(dest="dfa_command", required=True)
    q = dfa_sub.add_parser("make", parents=[common])
    q.add_argument("kind", choices=("powers", "integers"))
    q.add_argument("-b", "--base", type=gauss, required=True)
    q.add_argument("--dfa-out", metavar="FILE", help="write the DFA JSON to FILE")
    q = dfa_sub.add_parser("run", parents=[common])
    q.add_argument("file")
    q.add_argument("--word", required=True)
    q = dfa_sub.add_parser("min", parents=[common])
    q.add_argument("file")
    q.add_argument("--dfa-out", metavar="FILE", help="write the minimized DFA JSON to FILE")
    q = dfa_sub.add_parser("equiv", parents=[common])
    q.add_argument("file")
    q.add_argument("file2")
    q = dfa_sub.add_parser("falsify", parents=[common])
    q.add_argument("file")
    q.add_argument("--set", required=True, help="powers:GAUSS or integers")
    q.add_argument("--max-len", type=int, default=6)
    p.set_defaults(handler=cmd_dfa)

    p = sub.add_parser("verify", parents=[common], help="run the full verification suite")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command if args.command != "dfa" else f"dfa {args.dfa_command}"
    try:
        inputs, results, status = args.handler(args)
        message = None
    except (ValueError, ArithmeticError, RuntimeError, OSError) as exc:
        inputs, results, status = {}, {}, "error"
        message = str(exc)
    report = {"command": command, "inputs": inputs, "results": results, "status": status}
    if message is not None:
        report["message"] = message
    text = json.dumps(report, indent=2, sort_keys=True)
    if getattr(args, "pretty", False):
        print("\n".join(_render_pretty(report)))
    else:
        print(text)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if status == "ok":
        return EXIT_OK
    if status == "not_found":
        return EXIT_NOT_FOUND
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
