"""Command-line front end.

Subcommands: params, gen, encode, repair, decode, verify, simulate. All
positions printed or accepted here are 1-based; the library is 0-based.

Exit codes:
    0  success (for verify: every claim passed)
    1  usage error (unknown flags, missing arguments)
    2  validation or data error (bad parameters, malformed files, undecodable input)
    3  a verification suite reported a failing claim
    4  I/O failure

Every error path prints exactly one machine-parsable stderr line of the
form ``ERR <code>: <detail>``. Persisted reports never contain timings, so
reruns with the same flags and seed are byte-identical; live timings go to
stdout only.
"""

import argparse
import sys
import time
from math import comb
from pathlib import Path

from .codec import erasure_decode, encode, hybrid_decode, local_repair
from .construct import Code
from .errors import LrcError, ValidationError
from .field import Field
from .formats import (
    FORMAT_VERSION,
    LoadedArtifacts,
    dumps_json,
    load_artifacts,
    parse_message,
    parse_word,
    word_to_text,
    write_artifacts,
    write_text_atomic,
)
from .linalg import rank
from .rng import RNG_NAME
from .simulate import SimulationConfig, run_simulation
from .verify import (
    AUTO_EXHAUSTIVE_LIMIT,
    SUBSET_BUDGET,
    VerificationReport,
    find_min_weight_codeword,
    length_regime_report,
    optimality_equivalence_holds,
    singleton_like_bound,
    verify_constraint_matrix,
    verify_distance_at_least,
    verify_locality,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_VERIFY_FAIL = 3
EXIT_IO = 4

SUITES = ("distance", "lemma", "locality", "bounds")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValidationError(f"q = {q} is not a prime power")
    rest = q
    p = 0
    for cand in range(2, q + 1):
        if rest % cand == 0:
            p = cand
            break
    m = 0
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise ValidationError(f"q = {q} is not a prime power")
    return p, m


def _field_from_args(args) -> Field:
    if args.q is not None:
        if args.p is not None or args.m is not None:
            raise ValidationError("give either --q or --p/--m, not both")
        p, m = _prime_power(args.q)
        return Field(p, m)
    if args.p is None:
        raise ValidationError("a field is required: --q Q or --p P [--m M]")
    return Field(args.p, args.m if args.m is not None else 1)


def _add_field_args(sub) -> None:
    sub.add_argument("--q", type=int, help="field order (prime power)")
    sub.add_argument("--p", type=int, help="field characteristic")
    sub.add_argument("--m", type=int, help="extension degree (default 1)")


def _resolve_mode(requested: str, subset_count: int) -> str:
    if requested == "auto":
        return "exhaustive" if subset_count <= AUTO_EXHAUSTIVE_LIMIT else "sampled"
    return requested


def cmd_params(args) -> int:
    field = _field_from_args(args)
    code = Code.build(field, args.r)
    p = code.params
    bound = singleton_like_bound(p.n, p.k, p.r)
    print(f"q={field.q} p={field.p} m={field.m} modulus={list(field.modulus)}")
    print(f"r={p.r} n={p.n} k={p.k} d_target={p.d_target}")
    print(f"singleton_like_bound={bound}")
    print(f"optimal_regime={'yes' if p.optimal_regime else 'no'}")
    if p.equiv_applicable:
        holds = optimality_equivalence_holds(p, p.d_target)
        print(f"optimality_equivalence={'holds' if holds else 'FAILS'}")
    else:
        print("optimality_equivalence=inapplicable (d-2 congruent to r mod r+1)")
    reg = length_regime_report(p).details
    blocks = reg["block_count_inequality"]
    cosets = reg["coset_count_condition"]
    print(
        f"length_regime_blocks: lhs={blocks['lhs']} rhs={blocks['rhs']} "
        f"holds={'yes' if blocks['holds'] else 'no'}"
    )
    print(
        f"length_regime_cosets: value={cosets['value']} threshold={cosets['threshold']} "
        f"holds={'yes' if cosets['holds'] else 'no'}"
    )
    return EXIT_OK


def cmd_gen(args) -> int:
    field = _field_from_args(args)
    code = Code.build(field, args.r)
    paths = write_artifacts(code, args.out)
    for name in ("manifest", "generator", "parity", "basis"):
        print(f"wrote {paths[name]}")
    return EXIT_OK


def cmd_encode(args) -> int:
    la = load_artifacts(args.code)
    field = la.code.field
    message = parse_message(
        Path(args.message).read_text(encoding="utf-8"), field.q, la.code.k, args.message
    )
    codeword = encode(field, la.generator_rows, message)
    write_text_atomic(args.out, word_to_text(codeword))
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_repair(args) -> int:
    la = load_artifacts(args.code)
    code = la.code
    word = parse_word(Path(args.word).read_text(encoding="utf-8"), code.field.q, args.word)
    if len(word) != code.n:
        raise ValidationError(f"word has {len(word)} symbols, expected n = {code.n}")
    if not 1 <= args.position <= code.n:
        raise ValidationError(f"--position must lie in [1, {code.n}]")
    pos = args.position - 1
    symbol = local_repair(code, word, pos)
    reads = [p + 1 for p in code.domain.cell_of(pos) if p != pos]
    print(f"position: {args.position}")
    print(f"symbol: {symbol}")
    print(f"read_positions: {','.join(str(p) for p in reads)}")
    return EXIT_OK


def cmd_decode(args) -> int:
    la = load_artifacts(args.code)
    code = la.code
    field = code.field
    word = parse_word(Path(args.word).read_text(encoding="utf-8"), field.q, args.word)
    if len(word) != code.n:
        raise ValidationError(f"word has {len(word)} symbols, expected n = {code.n}")
    if args.policy == "global":
        decoded = erasure_decode(field, la.parity_rows, word)
        stats = None
    else:
        res = hybrid_decode(code, word)
        decoded = res.codeword
        stats = res
    text = word_to_text(decoded)
    if args.out is not None:
        write_text_atomic(args.out, text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    if stats is not None:
        print(f"locally_repaired: {len(stats.locally_repaired)}")
        print(f"globally_repaired: {len(stats.globally_repaired)}")
        print(f"symbols_read: {stats.symbols_read}")
    else:
        print(f"erasures_filled: {sum(1 for s in word if s is None)}")
    return EXIT_OK


def _parity_consistency_report(
    field: Field, g_rows: list[list[int]], h_rows: list[list[int]], expected_rows: int
) -> VerificationReport:
    """Loaded artifacts only: H must annihilate G and have full row rank."""
    t0 = time.perf_counter()
    witness = None
    hr = rank(field, h_rows)
    if hr != expected_rows:
        witness = {"reason": "parity rank deficit", "rank": hr, "expected": expected_rows}
    else:
        for i, hrow in enumerate(h_rows):
            if witness is not None:
                break
            for j, grow in enumerate(g_rows):
                if field.dot(hrow, grow) != 0:
                    witness = {
                        "reason": "parity times generator is nonzero",
                        "parity_row": i + 1,
                        "generator_row": j + 1,
                    }
                    break
    return VerificationReport(
        claim="parity-consistency",
        mode="exhaustive",
        trials=len(h_rows) * len(g_rows),
        result=witness is None,
        witness=witness,
        seed=None,
        millis=(time.perf_counter() - t0) * 1000,
    )


def _run_suites(args, code: Code, g_rows, h_rows, loaded: bool) -> list[VerificationReport]:
    field = code.field
    p = code.params
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports: list[VerificationReport] = []
    for suite in suites:
        if suite == "distance":
            if loaded:
                reports.append(
                    _parity_consistency_report(field, g_rows, h_rows, p.n - p.k)
                )
            mode = _resolve_mode(args.mode, comb(p.n, 4))
            reports.append(
                verify_distance_at_least(
                    field, h_rows, 5, mode=mode,
                    trials=args.trials, seed=args.seed, threads=args.threads,
                )
            )
            budget = sum(comb(p.n, w) for w in range(1, 6))
            if mode == "exhaustive" and budget <= SUBSET_BUDGET:
                mw = find_min_weight_codeword(field, h_rows, 5)
                if mw.witness is not None:
                    bound = singleton_like_bound(p.n, p.k, p.r)
                    mw.details["distance"] = mw.witness["weight"]
                    mw.details["meets_singleton_like_bound"] = (
                        mw.witness["weight"] == bound
                    )
                reports.append(mw)
        elif suite == "lemma":
            mode = _resolve_mode(args.mode, comb(p.n, 4))
            reports.append(
                verify_constraint_matrix(
                    field, mode=mode,
                    trials=args.trials, seed=args.seed, threads=args.threads,
                )
            )
        elif suite == "locality":
            reports.append(verify_locality(code, trials=25, seed=args.seed))
        elif suite == "bounds":
            bound = singleton_like_bound(p.n, p.k, p.r)
            reports.append(
                VerificationReport(
                    claim="singleton-like-bound",
                    mode="exhaustive",
                    trials=0,
                    result=True,
                    witness=None,
                    seed=None,
                    millis=0.0,
                    details={"value": bound, "d_target": p.d_target,
                             "meets_bound": bound == p.d_target},
                )
            )
            t0 = time.perf_counter()
            try:
                holds = optimality_equivalence_holds(p, p.d_target)
                reports.append(
                    VerificationReport(
                        claim="optimality-equivalence",
                        mode="exhaustive",
                        trials=0,
                        result=holds,
                        witness=None if holds else {"n_minus_k": p.n - p.k},
                        seed=None,
                        millis=(time.perf_counter() - t0) * 1000,
                        details={"status": "holds" if holds else "fails"},
                    )
                )
            except LrcError as e:
                reports.append(
                    VerificationReport(
                        claim="optimality-equivalence",
                        mode="exhaustive",
                        trials=0,
                        result=True,
                        witness=None,
                        seed=None,
                        millis=(time.perf_counter() - t0) * 1000,
                        details={"status": "inapplicable", "reason": str(e)},
                    )
                )
            reports.append(length_regime_report(p))
    return reports


def cmd_verify(args) -> int:
    if args.load is not None:
        if args.q is not None or args.p is not None or args.r is not None:
            raise ValidationError("--load replaces --q/--p/--m/--r")
        la: LoadedArtifacts = load_artifacts(args.load)
        code, g_rows, h_rows = la.code, la.generator_rows, la.parity_rows
        loaded = True
    else:
        if args.r is None:
            raise ValidationError("--r is required without --load")
        field = _field_from_args(args)
        code = Code.build(field, args.r)
        g_rows = code.generator_matrix
        h_rows = code.parity_check_matrix
        loaded = False
    reports = _run_suites(args, code, g_rows, h_rows, loaded)
    all_pass = all(r.result for r in reports)
    doc = {
        "format_version": FORMAT_VERSION,
        "rng": RNG_NAME,
        "field": code.field.spec_dict(),
        "code": {"r": code.r, "n": code.n, "k": code.k, "d_claimed": code.params.d_target},
        "suite": args.suite,
        "mode_requested": args.mode,
        "seed": args.seed,
        "all_pass": all_pass,
        "reports": [r.to_json_dict(include_timing=False) for r in reports],
    }
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    write_text_atomic(outdir / "report.json", dumps_json(doc))
    header = (
        f"code: q={code.field.q} r={code.r} n={code.n} k={code.k} "
        f"suite={args.suite} mode={args.mode} seed={args.seed} rng={RNG_NAME}\n"
    )
    text = header + "".join(r.text_line() + "\n" for r in reports)
    write_text_atomic(outdir / "report.txt", text)
    for r in reports:
        print(f"{r.text_line()} ({r.millis:.0f} ms)")
    print(f"wrote {outdir / 'report.json'}")
    print(f"wrote {outdir / 'report.txt'}")
    if not all_pass:
        failing = [r.claim for r in reports if not r.result]
        print(f"ERR VerificationFailed: {','.join(failing)}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def cmd_simulate(args) -> int:
    field = _field_from_args(args)
    code = Code.build(field, args.r)
    config = SimulationConfig(
        model=args.model,
        trials=args.trials,
        seed=args.seed,
        policy=args.policy,
        t=args.t,
        rho=args.rho,
    )
    try:
        config.validate(code.n)
    except ValueError as e:
        raise ValidationError(str(e)) from None
    result = run_simulation(code, config)
    doc = {
        "format_version": FORMAT_VERSION,
        "field": field.spec_dict(),
        "code": {"r": code.r, "n": code.n, "k": code.k},
        **result.to_json_dict(),
    }
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    write_text_atomic(outdir / "simulation.json", dumps_json(doc))
    res = doc["results"]
    print(f"trials: {res['trials']}")
    print(f"erased_symbols: {res['erased_symbols']}")
    print(f"locally_repaired: {res['locally_repaired']}")
    print(f"globally_repaired: {res['globally_repaired']}")
    print(f"local_repair_success_rate: {res['local_repair_success_rate']}")
    print(f"overall_recovery_rate: {res['overall_recovery_rate']}")
    print(f"mean_reads_per_repaired_symbol: {res['mean_reads_per_repaired_symbol']}")
    print(f"wrote {outdir / 'simulation.json'}")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="lrc5", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--seed", type=int, default=0, help="PRNG seed")
    base.add_argument("--threads", type=int, default=1,
                      help="worker processes for exhaustive scans")
    outdir = argparse.ArgumentParser(add_help=False)
    outdir.add_argument("--out", default=".", help="output directory")

    sp = subs.add_parser("params", parents=[base],
                         help="validate parameters and print code facts")
    _add_field_args(sp)
    sp.add_argument("--r", type=int, required=True, help="locality")
    sp.set_defaults(func=cmd_params)

    sg = subs.add_parser("gen", parents=[base, outdir],
                         help="construct a code and write its artifacts")
    _add_field_args(sg)
    sg.add_argument("--r", type=int, required=True, help="locality")
    sg.set_defaults(func=cmd_gen)

    se = subs.add_parser("encode", parents=[base], help="encode a message file")
    se.add_argument("--code", required=True, help="artifact directory from gen")
    se.add_argument("--message", required=True, help="k comma-separated symbols")
    se.add_argument("--out", required=True, help="codeword file to write")
    se.set_defaults(func=cmd_encode)

    sr = subs.add_parser("repair", parents=[base],
                         help="repair one erased position locally")
    sr.add_argument("--code", required=True, help="artifact directory from gen")
    sr.add_argument("--word", required=True, help="codeword file with '?' erasures")
    sr.add_argument("--position", type=int, required=True, help="1-based position")
    sr.set_defaults(func=cmd_repair)

    sd = subs.add_parser("decode", parents=[base], help="fill erasures in a word")
    sd.add_argument("--code", required=True, help="artifact directory from gen")
    sd.add_argument("--word", required=True, help="codeword file with '?' erasures")
    sd.add_argument("--policy", choices=("hybrid", "global"), default="hybrid")
    sd.add_argument("--out", default=None, help="output word file (default stdout)")
    sd.set_defaults(func=cmd_decode)

    sv = subs.add_parser("verify", parents=[base, outdir],
                         help="run verification suites")
    _add_field_args(sv)
    sv.add_argument("--r", type=int, help="locality")
    sv.add_argument("--load", help="verify stored artifacts instead of rebuilding")
    sv.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sv.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    sv.add_argument("--trials", type=int, default=100_000,
                    help="subset count for sampled mode")
    sv.set_defaults(func=cmd_verify)

    ss = subs.add_parser("simulate", parents=[base, outdir],
                         help="Monte Carlo erasure and repair simulation")
    _add_field_args(ss)
    ss.add_argument("--r", type=int, required=True, help="locality")
    ss.add_argument("--model", choices=("fixed", "bernoulli"), required=True)
    ss.add_argument("--t", type=int, help="erasures per trial (fixed model)")
    ss.add_argument("--rho", type=float, help="per-symbol erasure probability")
    ss.add_argument("--trials", type=int, default=1000)
    ss.add_argument("--policy", choices=("local-only", "hybrid"), default="hybrid")
    ss.set_defaults(func=cmd_simulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"ERR Usage: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        return args.func(args)
    except LrcError as e:
        print(f"ERR {e.code}: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except ZeroDivisionError as e:
        print(f"ERR DivisionByZero: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as e:
        print(f"ERR Validation: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as e:
        name = getattr(e, "filename", None)
        detail = f"{name}: {e.strerror}" if name else str(e)
        print(f"ERR IO: {detail}", file=sys.stderr)
        return EXIT_IO
