"""Command-line front end.

Every command turns a parsed JSON payload into a report dict; the JSON and
text renderings are both produced from that dict. Exit codes: 0 success,
1 computation-level failure (an mc-verify mismatch), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import deque
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor

from .errors import HodgeError, ParseError
from .higgs import HiggsWeights, SubbundleProfile, check_candidates, stable_decomposition_ranks
from .hyperdata import HypergeometricData, local_monodromy, self_duality_check
from .invariants import (
    hodge_vector,
    interlacing,
    local_table_infinity,
    local_table_zero,
    mu_from_nu,
    real_hodge_diamond,
    rho_values,
    signature,
)
from .mc_oracle import verify
from .sampling import random_batch

OK, FAILURE, INPUT_ERROR = 0, 1, 2


def _data(payload) -> HypergeometricData:
    return HypergeometricData.from_json(payload)


def cmd_validate(payload) -> tuple[int, dict]:
    return OK, _data(payload).to_json()


def cmd_hodge(payload) -> tuple[int, dict]:
    data = _data(payload)
    return OK, {
        "input": data.to_json(),
        "rho": rho_values(data),
        "hodge_vector": hodge_vector(data).to_json(),
        "signature": signature(data),
        "interlacing": interlacing(data),
    }


def cmd_local(payload) -> tuple[int, dict]:
    data = _data(payload)
    zero, inf = local_table_zero(data), local_table_infinity(data)
    return OK, {
        "input": data.to_json(),
        "monodromy": {p: local_monodromy(data, p).to_json() for p in ("zero", "one", "infinity")},
        "nu_zero": zero.to_json(),
        "nu_infinity": inf.to_json(),
        "mu_zero": mu_from_nu(zero).to_json(),
        "mu_infinity": mu_from_nu(inf).to_json(),
    }


def cmd_real_vhs(payload) -> tuple[int, dict]:
    data = _data(payload)
    dual = self_duality_check(data)
    return OK, {
        "input": data.to_json(),
        "self_dual": dual,
        "diamond": real_hodge_diamond(data).to_json() if dual else None,
    }


def cmd_mc_verify(payload) -> tuple[int, dict]:
    report = verify(_data(payload)).to_json()
    return (OK if report["pass"] else FAILURE), report


def cmd_higgs(payload) -> tuple[int, dict]:
    w = HiggsWeights.from_json(payload)
    out = w.to_json()
    out["decomposition_ranks"] = None if w.resonant else stable_decomposition_ranks(w).to_json()
    return OK, out


def cmd_higgs_check(payload) -> tuple[int, dict]:
    if not isinstance(payload, dict) or "weights" not in payload or not isinstance(payload.get("candidates"), list):
        raise ParseError('expected {"weights": {...}, "candidates": [...]}')
    w = HiggsWeights.from_json(payload["weights"])
    candidates = [SubbundleProfile.from_json(c) for c in payload["candidates"]]
    return OK, check_candidates(w, candidates).to_json()


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "hodge": cmd_hodge,
    "local": cmd_local,
    "real-vhs": cmd_real_vhs,
    "mc-verify": cmd_mc_verify,
    "higgs": cmd_higgs,
    "higgs-check": cmd_higgs_check,
}


def run_command(command: str, payload) -> tuple[int, dict]:
    """Run one command on a parsed payload; domain errors become reports."""
    try:
        return COMMANDS[command](payload)
    except HodgeError as exc:
        return INPUT_ERROR, {"error": type(exc).__name__, "message": str(exc)}


# --- rendering ------------------------------------------------------------

def render_json(report) -> str:
    return json.dumps(report, sort_keys=True)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list):
        return "(" + ", ".join(_cell(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_cell(v[k])}" for k in sorted(v)) + "}"
    return str(v)


def _table(rows: list[dict], indent: str) -> list[str]:
    cols = sorted({k for r in rows for k in r})
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = [indent + "  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += [indent + "  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
    return lines


def _render(report: dict, indent: str = "") -> list[str]:
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict) and value:
            lines.append(f"{indent}{key}:")
            lines += _render(value, indent + "  ")
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{indent}{key}:")
            lines += _table(value, indent + "  ")
        else:
            lines.append(f"{indent}{key}: {_cell(value)}")
    return lines


def render_text(report: dict) -> str:
    return "\n".join(_render(report))


def render(report: dict, fmt: str) -> str:
    return render_json(report) if fmt == "json" else render_text(report)


# --- input ----------------------------------------------------------------

def _read_source(args) -> str:
    if args.json is not None:
        return args.json
    if args.input in (None, "-"):
        return sys.stdin.read()
    with open(args.input, encoding="utf-8") as fh:
        return fh.read()


def _parse_payloads(text: str) -> list:
    """A single JSON value, a JSON list of values, or newline-delimited JSON."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError:
        try:
            return [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    return value if isinstance(value, list) else [value]


def _iter_lines(args) -> Iterator[str]:
    if args.json is not None:
        yield from args.json.splitlines()
    elif args.input in (None, "-"):
        yield from sys.stdin
    else:
        with open(args.input, encoding="utf-8") as fh:
            yield from fh


def _batch_record(item: tuple[int, str]) -> tuple[int, dict]:
    lineno, line = item
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        return INPUT_ERROR, {"line": lineno, "exit": INPUT_ERROR, "error": "ParseError", "message": str(exc)}
    if not isinstance(record, dict) or record.get("command") not in COMMANDS or "input" not in record:
        report = {"error": "ParseError", "message": 'records look like {"command": ..., "input": ...}'}
        return INPUT_ERROR, {"line": lineno, "exit": INPUT_ERROR, **report}
    code, report = run_command(record["command"], record["input"])
    return code, {"line": lineno, "command": record["command"], "exit": code, "result": report}


def _ordered_map(fn, items: Iterable, jobs: int) -> Iterator:
    """Like map, but runs on ``jobs`` processes with a bounded window of
    in-flight work, yielding results in input order."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        window: deque = deque()
        for item in items:
            window.append(pool.submit(fn, item))
            if len(window) >= 4 * jobs:
                yield window.popleft().result()
        while window:
            yield window.popleft().result()


def _run_batch(args, out) -> int:
    worst = OK
    items = ((n, line) for n, line in enumerate(_iter_lines(args), 1) if line.strip())
    for code, report in _ordered_map(_batch_record, items, args.jobs):
        worst = max(worst, code)
        print(render_json(report) if args.format == "json" else _cell(report), file=out, flush=True)
    return worst


def _run_mc_verify(args, out) -> int:
    if args.random is not None:
        payloads = [d.to_json() for d in random_batch(args.seed, args.random, args.max_h, args.max_den)]
    else:
        payloads = _parse_payloads(_read_source(args))
    if len(payloads) == 1 and args.random is None:
        code, report = run_command("mc-verify", payloads[0])
        print(render(report, args.format), file=out)
        return code
    worst = OK
    for payload in payloads:
        code, report = run_command("mc-verify", payload)
        worst = max(worst, code)
        if args.format == "json":
            print(render_json(report), file=out)
        elif "error" in report and "input" not in report:
            print(f"ERROR {report['error']}: {report['message']}", file=out)
        else:
            data = HypergeometricData.from_json(report["input"])
            print(f"{'PASS' if report['pass'] else 'FAIL'} {data}", file=out)
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperhodge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in [*COMMANDS, "batch"]:
        p = sub.add_parser(name)
        p.add_argument("--input", default="-", help="input file, or - for stdin (default)")
        p.add_argument("--json", default=None, help="inline JSON input instead of --input")
        p.add_argument("--format", choices=("json", "text"), default="json")
        if name == "batch":
            p.add_argument("--jobs", type=int, default=1)
        if name == "mc-verify":
            p.add_argument("--random", type=int, default=None, metavar="N",
                           help="verify N seeded random data instead of reading input")
            p.add_argument("--max-h", type=int, default=6)
            p.add_argument("--max-den", type=int, default=12)
            p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        if args.command == "batch":
            return _run_batch(args, out)
        if args.command == "mc-verify":
            return _run_mc_verify(args, out)
        payloads = _parse_payloads(_read_source(args))
        if len(payloads) != 1:
            raise ParseError(f"{args.command} takes a single JSON object")
    except HodgeError as exc:
        print(render({"error": type(exc).__name__, "message": str(exc)}, args.format), file=out)
        return INPUT_ERROR
    except OSError as exc:
        print(render({"error": "ParseError", "message": str(exc)}, args.format), file=out)
        return INPUT_ERROR
    code, report = run_command(args.command, payloads[0])
    print(render(report, args.format), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
