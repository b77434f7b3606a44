"""
Command-line front end.

Exit status is 0 on success, 1 when a check fails (a log that does not verify,
a word that is not intravergent, a failed report) and 2 for malformed input.
``--json`` switches any subcommand to JSON on standard output.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bounds import knot_bounds, nonadditivity_report
from .braid import BraidWord, closure_components, parse_word
from .intravergent import IntravergentBraid, validate_intravergent
from .registry import RegistryError, load_registry
from .signature import matrix_signature, parse_matrix_text, signature_q2_jm
from .torus import normalize_torus_parameters, torus_braid, torus_equivariant_unknotting_number
from .two_bridge import (
    eval_continued_fraction,
    format_fraction,
    is_torus_fraction,
    jm_fraction,
    normalize,
    parse_fraction,
    u4_search,
)
from .unknotter import UnknotterError, equivariant_unknot, verify_move_log, verify_move_log_json

# options whose values may begin with a minus sign
_VALUE_OPTIONS = ("--m-range", "--coeffs", "--fraction", "--m", "--word")


class UsageError(Exception):
    pass


def _join_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def parse_range(text: str) -> tuple[int, int]:
    """``"A..B"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"malformed range {text!r}; expected A..B") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _unknot_and_report(args, braid: IntravergentBraid, extra: dict, expected: Optional[int]) -> int:
    log = equivariant_unknot(braid)
    report = verify_move_log(log, full=True) if args.verify else None
    if args.emit_log:
        Path(args.emit_log).write_text(log.to_json(indent=1) + "\n")
    payload = dict(extra)
    payload.update(
        strands=braid.strands,
        word=list(braid.letters),
        total_cost=log.total_cost,
        moves=len(log.steps),
        type_A=log.count("type_A"),
        type_B=log.count("type_B"),
        destabilizations=log.count("destabilization"),
        verified=None if report is None else report.ok,
    )
    if expected is not None:
        payload["expected"] = expected
    lines = [f"cost {log.total_cost}", f"moves {len(log.steps)} ({payload['type_A']} type A, {payload['type_B']} type B)"]
    if report is not None:
        lines.append("log verifies" if report.ok else f"log FAILS: {report.message}")
    if args.emit_log:
        lines.append(f"log written to {args.emit_log}")
    _emit(args, payload, "\n".join(lines))
    ok = (report is None or report.ok) and (expected is None or expected == log.total_cost)
    return 0 if ok else 1


def cmd_torus_unknot(args) -> int:
    try:
        p, q = normalize_torus_parameters(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    braid = torus_braid(p, q)
    return _unknot_and_report(args, braid, {"p": p, "q": q}, torus_equivariant_unknotting_number(p, q))


def _read_braid(args) -> BraidWord:
    try:
        return parse_word(args.word, args.strands)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_unknot_braid(args) -> int:
    word = _read_braid(args)
    if not validate_intravergent(word) or not word.is_positive() or closure_components(word) != 1:
        raise UsageError(f"{word} on {word.strands} strands is not a positive intravergent braid with knot closure")
    braid = IntravergentBraid(word)
    return _unknot_and_report(args, braid, {}, (len(word) - word.strands + 1) // 2)


def cmd_check_intravergent(args) -> int:
    word = _read_braid(args)
    ok = validate_intravergent(word)
    payload = {
        "strands": word.strands,
        "word": list(word.letters),
        "intravergent": ok,
        "positive": word.is_positive(),
        "components": closure_components(word),
    }
    text = f"{word} (s={word.strands}): {'intravergent' if ok else 'not intravergent'}, closure has {payload['components']} component(s)"
    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_verify_log(args) -> int:
    try:
        text = Path(args.file).read_text()
        report = verify_move_log_json(text, full=not args.cheap)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read move log {args.file}: {exc}") from None
    payload = {
        "ok": report.ok,
        "steps_checked": report.steps_checked,
        "failed_step": report.failed_step,
        "message": report.message,
    }
    _emit(args, payload, "log verifies" if report.ok else f"log FAILS: {report.message}")
    return 0 if report.ok else 1


def _fraction_arg(text: str):
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_u4_one(args) -> int:
    f = _fraction_arg(args.fraction)
    try:
        witness, trace = u4_search(f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = normalize(f)
    payload = {
        "fraction": format_fraction(f),
        "normalized": format_fraction(g),
        "u4_equals_one": witness is not None,
        "witness": None if witness is None else witness.to_dict(),
        "candidates": [
            {"sign_choice": c.sign_choice, "r": c.r, "s": c.s, "coprime": c.coprime, "matched": c.matched}
            for c in trace
        ],
    }
    if witness is None:
        text = "u4 ≠ 1"
    else:
        text = (f"u4 = 1: r = {witness.r}, s = {witness.s}, 4rs = {witness.sign_choice}, "
                f"{witness.congruence_choice} = 4s^2 (mod {witness.p})")
    if args.trace:
        text += "\n" + "\n".join(
            f"  4rs = {c['sign_choice']}: r = {c['r']}, s = {c['s']}, gcd ok: {c['coprime']}, match: {c['matched']}"
            for c in payload["candidates"]
        )
    _emit(args, payload, text)
    return 0


def cmd_cont_frac(args) -> int:
    try:
        coeffs = [int(x) for x in args.coeffs.replace(" ", "").split(",") if x]
        f = eval_continued_fraction(coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot evaluate {args.coeffs!r}: {exc}") from None
    g = normalize(f)
    payload = {"coeffs": coeffs, "fraction": format_fraction(f), "normalized": format_fraction(g), "mirrored": g.mirrored}
    _emit(args, payload, f"{f} (normalized {g})")
    return 0


def cmd_jm(args) -> int:
    lo, hi = parse_range(args.m_range)
    rows = []
    for m in range(lo, hi + 1):
        f = jm_fraction(m)
        witness, _ = u4_search(f)
        rows.append({
            "m": m,
            "fraction": format_fraction(f),
            "normalized": format_fraction(normalize(f)),
            "signature_q2": signature_q2_jm(m),
            "torus_k": is_torus_fraction(f),
            "u4_equals_one": witness is not None,
        })
    text = "\n".join(
        f"m={r['m']:>4}  {r['fraction']:>12}  sigma={r['signature_q2']:>4}  "
        f"{'u4 = 1' if r['u4_equals_one'] else 'u4 ≠ 1'}" for r in rows
    )
    _emit(args, {"rows": rows}, text)
    return 0


def cmd_signature(args) -> int:
    try:
        matrix = parse_matrix_text(Path(args.matrix).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    inertia = matrix_signature(matrix)
    payload = {**inertia._asdict(), "signature": inertia.signature}
    _emit(args, payload, f"signature {inertia.signature} (n+ = {inertia.n_plus}, n- = {inertia.n_minus}, n0 = {inertia.n_zero})")
    return 0


def _registry(args):
    try:
        return load_registry(args.registry)
    except (OSError, RegistryError) as exc:
        raise UsageError(f"registry: {exc}") from None


def cmd_bounds(args) -> int:
    reg = _registry(args)
    try:
        values = {"m": args.m} if args.m is not None else {}
        knot = reg.get(args.knot, **values)
    except (KeyError, RegistryError) as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from None
    b = knot_bounds(knot, (args.unb_q1, args.unb_q2))
    text = "\n".join([
        f"{knot.name}: q1 = {knot.q1}, q2 = {knot.q2}",
        f"type A lower bound {b.type_A}",
        f"type B lower bound {b.type_B}",
        f"type C lower bound {b.type_C}" + ("" if None not in b.unb_q else " (u_nb values not supplied)"),
        f"source: {knot.provenance}",
    ])
    _emit(args, b.to_dict(), text)
    return 0


def cmd_nonadditivity_report(args) -> int:
    lo, hi = parse_range(args.m_range)
    report = nonadditivity_report((lo, hi), _registry(args))
    _emit(args, report.to_dict(), report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(prog="equivknot", description=__doc__.strip().splitlines()[0], parents=[common])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    p = add("torus-unknot", cmd_torus_unknot, "equivariantly unknot the torus knot T(p,q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--emit-log", metavar="FILE")
    p.add_argument("--verify", action="store_true", help="replay the log with the canonical-form oracle")

    for name, func, help_text in (
        ("unknot-braid", cmd_unknot_braid, "equivariantly unknot a positive intravergent braid"),
        ("check-intravergent", cmd_check_intravergent, "test the rotation symmetry of a braid word"),
    ):
        p = add(name, func, help_text)
        p.add_argument("--word", required=True, help='letters such as "1 2 -1" or "1,2,-1"')
        p.add_argument("--strands", type=int, required=True)
        if name == "unknot-braid":
            p.add_argument("--emit-log", metavar="FILE")
            p.add_argument("--verify", action="store_true")

    p = add("verify-log", cmd_verify_log, "replay a JSON move log")
    p.add_argument("file")
    p.add_argument("--cheap", action="store_true", help="check isotopies by permutation and exponent sum only")

    p = add("u4-one", cmd_u4_one, "decide whether one 4-move unknots the 2-bridge knot P/Q")
    p.add_argument("--fraction", required=True)
    p.add_argument("--trace", action="store_true", help="list every candidate (r, s)")

    p = add("cont-frac", cmd_cont_frac, "evaluate a1 - 1/(a2 - 1/(... - 1/ak))")
    p.add_argument("--coeffs", required=True, help="comma-separated integers")

    p = add("jm", cmd_jm, "fractions and signatures of the J_m^+ quotients")
    p.add_argument("--m-range", default="-5..2")

    p = add("signature", cmd_signature, "inertia of a symmetric integer matrix file")
    p.add_argument("--matrix", required=True, metavar="FILE")

    p = add("bounds", cmd_bounds, "quotient lower bounds for a registry knot")
    p.add_argument("--knot", required=True)
    p.add_argument("--m", type=int, help="family parameter")
    p.add_argument("--unb-q1", type=int)
    p.add_argument("--unb-q2", type=int)
    p.add_argument("--registry", metavar="FILE")

    p = add("nonadditivity-report", cmd_nonadditivity_report, "run every check behind the non-additivity example")
    p.add_argument("--m-range", default="-100..100")
    p.add_argument("--registry", metavar="FILE")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_join_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except UnknotterError as exc:
        print(f"{parser.prog} {args.command}: unknotting failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
