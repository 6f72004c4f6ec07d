"""Command-line front end.

Code identifiers: o36, e36, o40, e40 for the binary codes and c4-9,
c4-10 for the underlying quaternary codes.  Subcommands:

  gen       print a generator matrix (--mindist to also report d)
  wdist     weight distribution by exhaustive enumeration
  encode    message bits -> codeword
  decode    received word -> corrected codeword (--trace, --oracle)
  mindist   minimum distance
  exhaust   sweep all error patterns up to a weight over sampled codewords,
            cross-checked against the coset-leader decoder
  simulate  random-error trials with per-trial seeded RNG streams

Exit codes: 0 success, 1 decoding/verification failure, 2 usage error.
All randomised commands derive an independent RNG per trial from
(seed, trial index), so reports are reproducible and independent of
execution order.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
import time
from dataclasses import dataclass

from . import gf4
from .bitlin import CosetTable, format_bits, format_matrix, parse_bits
from .decoder import DecoderContext, decode
from .projection import (Variant, parity_profile, project, render_array,
                         to_array)
from .quaternary import QuaternaryCode, c4_9, c4_10, format_gf4_matrix

BINARY_CODES = {
    "o36": (c4_9, Variant.O),
    "e36": (c4_9, Variant.E),
    "o40": (c4_10, Variant.O),
    "e40": (c4_10, Variant.E),
}
QUAT_CODES = {"c4-9": c4_9, "c4-10": c4_10}
ALL_CODES = tuple(BINARY_CODES) + tuple(QUAT_CODES)


@dataclass
class SimReport:
    """Outcome counts of a simulate run; timing is reported separately so
    the report itself is a pure function of (seed, arguments)."""
    code: str
    trials: int
    weight: int
    seed: int
    successes: int
    failures: int
    miscorrections: int
    mean_decode_us: float

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "trials": self.trials,
            "weight": self.weight,
            "seed": self.seed,
            "successes": self.successes,
            "failures": self.failures,
            "miscorrections": self.miscorrections,
        }


def _context(code_id: str) -> DecoderContext:
    factory, variant = BINARY_CODES[code_id]
    return DecoderContext(factory(), variant)


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random((seed << 32) + trial)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _weights_json(dist) -> dict:
    return {str(i): a for i, a in enumerate(dist) if a}


def _weights_text(dist) -> str:
    return "\n".join(f"A_{i} = {a}" for i, a in enumerate(dist) if a)


# ---------------------------------------------------------------------------
# subcommands

def cmd_gen(args) -> int:
    if args.code in QUAT_CODES:
        q = QUAT_CODES[args.code]()
        payload = {"code": args.code, "m": q.m, "r": q.r,
                   "rows": [gf4.format_vector(g, sep="") for g in q.generators]}
        header = f"# code={args.code} m={q.m} r={q.r} codewords=2^{q.r}"
        body = format_gf4_matrix(q.generators)
        if args.mindist:
            payload["d"] = q.min_weight()
            header += f" d={payload['d']}"
        _emit(args, payload, f"{header}\n{body}")
        return 0
    ctx = _context(args.code)
    code = ctx.binary_code
    payload = {"code": args.code, "n": code.n, "k": code.k,
               "rows": [format_bits(r, code.n) for r in code.generator]}
    header = f"# code={args.code} n={code.n} k={code.k}"
    if args.mindist:
        payload["d"] = code.min_distance()
        header += f" d={payload['d']}"
    body = format_matrix(code.generator, code.n, group=4)
    _emit(args, payload, f"{header}\n{body}")
    return 0


def cmd_wdist(args) -> int:
    if args.code in QUAT_CODES:
        q = QUAT_CODES[args.code]()
        dist = q.weight_distribution()
        payload = {"code": args.code, "m": q.m, "r": q.r,
                   "weights": _weights_json(dist)}
    else:
        ctx = _context(args.code)
        dist = ctx.binary_code.weight_distribution()
        payload = {"code": args.code, "n": ctx.n, "k": ctx.binary_code.k,
                   "weights": _weights_json(dist)}
    _emit(args, payload, _weights_text(dist))
    return 0


def cmd_mindist(args) -> int:
    if args.code in QUAT_CODES:
        d = QUAT_CODES[args.code]().min_weight()
    else:
        d = _context(args.code).binary_code.min_distance()
    _emit(args, {"code": args.code, "d": d}, f"d = {d}")
    return 0


def cmd_encode(args, parser) -> int:
    ctx = _context(args.code)
    code = ctx.binary_code
    try:
        msg, width = parse_bits(args.message)
    except ValueError as exc:
        parser.error(str(exc))
    if width != code.k:
        parser.error(f"message must be {code.k} bits, got {width}")
    word = code.encode(msg)
    _emit(args, {"code": args.code, "message": format_bits(msg, code.k),
                 "codeword": format_bits(word, code.n)},
          format_bits(word, code.n))
    return 0


def cmd_decode(args, parser) -> int:
    ctx = _context(args.code)
    try:
        received, width = parse_bits(args.word)
    except ValueError as exc:
        parser.error(str(exc))
    if width != ctx.n:
        parser.error(f"received word must be {ctx.n} bits, got {width}")
    outcome = decode(ctx, received)

    arr = to_array(received, ctx.n)
    if outcome.ok:
        trace = outcome.trace
        syndrome = trace.syndrome
        p = trace.profile.p
        positions = [i + 1 for i in range(ctx.n)
                     if (outcome.error >> (ctx.n - 1 - i)) & 1]
        branch = trace.branch
        decoded_str = format_bits(outcome.codeword, ctx.n)
    else:
        syndrome = ctx.c4.syndrome(project(arr))
        p = parity_profile(arr).p
        positions = []
        branch = None
        decoded_str = None

    if args.trace:
        print("received:")
        print(render_array(arr))
        if outcome.ok:
            changed = {c: old for c, old, _ in trace.corrections}
            print(f"branch {branch}; syndrome ({gf4.format_vector(syndrome)}); "
                  f"p = {p}; {trace.error_weight} bit(s) corrected")
            print("decoded:")
            print(render_array(to_array(outcome.codeword, ctx.n),
                               changed=changed))
        else:
            print(f"decode failed: {outcome.reason} "
                  f"(syndrome ({gf4.format_vector(syndrome)}), p = {p})")

    payload = {
        "code": args.code,
        "n": ctx.n,
        "k": ctx.binary_code.k,
        "received": format_bits(received, ctx.n),
        "decoded": decoded_str,
        "error_positions": positions,
        "branch": branch,
        "syndrome": gf4.format_vector(syndrome),
        "p": p,
    }
    if args.oracle:
        table = CosetTable(ctx.binary_code)
        oracle_word = table.decode(received)
        payload["oracle"] = (None if oracle_word is None
                             else format_bits(oracle_word, ctx.n))
        payload["oracle_agrees"] = oracle_word == outcome.codeword

    if args.json:
        print(json.dumps(payload))
    elif outcome.ok:
        if not args.trace:
            print(decoded_str)
    else:
        if not args.trace:
            print(f"decode failed: {outcome.reason}", file=sys.stderr)
    return 0 if outcome.ok else 1


def _error_patterns(n: int, max_weight: int):
    yield 0
    for w in range(1, max_weight + 1):
        for coords in itertools.combinations(range(n), w):
            e = 0
            for c in coords:
                e |= 1 << c
            yield e


def cmd_exhaust(args) -> int:
    ctx = _context(args.code)
    code = ctx.binary_code
    table = CosetTable(code, max_weight=max(args.max_weight, 3))
    words = [0] + [code.encode(_trial_rng(args.seed, t).getrandbits(code.k))
                   for t in range(args.samples)]
    patterns = list(_error_patterns(ctx.n, args.max_weight))
    trials = 0
    wrong = 0
    oracle_mismatch = 0
    for c in words:
        for e in patterns:
            y = c ^ e
            outcome = decode(ctx, y)
            trials += 1
            if not outcome.ok or outcome.codeword != c:
                wrong += 1
            if args.oracle and table.decode(y) != (
                    outcome.codeword if outcome.ok else None):
                oracle_mismatch += 1
    ok = wrong == 0 and oracle_mismatch == 0
    payload = {
        "code": args.code,
        "max_weight": args.max_weight,
        "samples": args.samples,
        "seed": args.seed,
        "trials": trials,
        "wrong": wrong,
        "oracle_mismatches": oracle_mismatch if args.oracle else None,
        "ok": ok,
    }
    text = (f"{trials} decodes over {len(words)} codewords, "
            f"errors up to weight {args.max_weight}: "
            f"{trials - wrong} correct, {wrong} wrong"
            + (f", {oracle_mismatch} oracle mismatches" if args.oracle else ""))
    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_simulate(args) -> int:
    ctx = _context(args.code)
    code = ctx.binary_code
    successes = failures = miscorrections = 0
    elapsed = 0.0
    for t in range(args.trials):
        rng = _trial_rng(args.seed, t)
        sent = code.encode(rng.getrandbits(code.k))
        e = 0
        for pos in rng.sample(range(ctx.n), args.weight):
            e |= 1 << pos
        t0 = time.perf_counter()
        outcome = decode(ctx, sent ^ e)
        elapsed += time.perf_counter() - t0
        if not outcome.ok:
            failures += 1
        elif outcome.codeword == sent:
            successes += 1
        else:
            miscorrections += 1
    report = SimReport(
        code=args.code, trials=args.trials, weight=args.weight,
        seed=args.seed, successes=successes, failures=failures,
        miscorrections=miscorrections,
        mean_decode_us=elapsed / max(args.trials, 1) * 1e6,
    )
    print(f"mean decode time: {report.mean_decode_us:.1f} us",
          file=sys.stderr)
    text = (f"{report.trials} trials at weight {report.weight}: "
            f"{report.successes} decoded, {report.failures} failures, "
            f"{report.miscorrections} miscorrections")
    _emit(args, report.to_json(), text)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projcode",
        description="Projection-decodable binary [36,19,8] and [40,22,8] "
                    "codes over GF(4) projections.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, binary_only=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("code",
                       choices=sorted(BINARY_CODES) if binary_only
                       else sorted(ALL_CODES))
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report")
        return p

    p = add("gen", "print a generator matrix")
    p.add_argument("--mindist", action="store_true",
                   help="also compute the minimum distance")
    add("wdist", "weight distribution by exhaustive enumeration")
    add("mindist", "minimum distance by exhaustive enumeration")

    p = add("encode", "encode a message", binary_only=True)
    p.add_argument("message", help="k message bits (spaces allowed)")

    p = add("decode", "decode a received word", binary_only=True)
    p.add_argument("word", help="n received bits (spaces allowed)")
    p.add_argument("--trace", action="store_true",
                   help="show the projection arrays and corrections")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the coset-leader decoder")

    p = add("exhaust", "exhaustive error sweep vs the coset-leader decoder",
            binary_only=True)
    p.add_argument("--max-weight", type=int, default=3, choices=(0, 1, 2, 3))
    p.add_argument("--samples", type=int, default=200,
                   help="random codewords besides the zero word")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", dest="oracle", action=argparse.BooleanOptionalAction,
                   default=True, help="compare against the coset-leader decoder")

    p = add("simulate", "random error trials", binary_only=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--weight", type=int, default=3,
                   help="planted error weight per trial")
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": lambda: cmd_gen(args),
        "wdist": lambda: cmd_wdist(args),
        "mindist": lambda: cmd_mindist(args),
        "encode": lambda: cmd_encode(args, parser),
        "decode": lambda: cmd_decode(args, parser),
        "exhaust": lambda: cmd_exhaust(args),
        "simulate": lambda: cmd_simulate(args),
    }
    return handlers[args.command]()


if __name__ == "__main__":
    sys.exit(main())
