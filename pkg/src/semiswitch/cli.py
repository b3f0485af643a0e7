"""Command line front end.

Four subcommands:

* ``search`` - enumerate or sample coefficient tuples, emit the
  predicate-passing ones with their classification.
* ``verify`` - read polynomials from a JSON-lines file and emit a full
  report per line (predicate, presemifield axioms, commutativity,
  commutative-isotopy witness, nuclei, curve bounds, prime-field
  coefficient identities).
* ``codes``  - code dimension and the full-weight word census.
* ``hws``    - curve-bound verdict table for polynomials from a file.

Every output starts with a config record that pins the field (modulus
and generator are always resolved and recorded), so a rerun with the
same arguments reproduces the bytes exactly.  Budgets can also be set
through SEMISWITCH_SEARCH_BUDGET / SEMISWITCH_TABLE_BUDGET /
SEMISWITCH_FIELD_CAP.

Exit codes: 0 fine (also when nothing was found), 2 bad input,
3 budget exceeded, 4 internal consistency failure (a witness against
something the library holds to be impossible; the witness is dumped).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes as codes_mod
from . import families, hws, linpoly, presemifield
from .errors import BudgetExceeded, ConsistencyError
from .gf import build_field


def _dump(record):
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


class _Writer:
    def __init__(self, path):
        self.path = path
        self._fh = open(path, "w") if path else sys.stdout

    def emit(self, record):
        self._fh.write(_dump(record) + "\n")

    def emit_csv_line(self, line):
        self._fh.write(line + "\n")

    def close(self):
        if self.path:
            self._fh.close()


def _add_field_args(sub):
    sub.add_argument("--p", type=int, required=True, help="characteristic")
    sub.add_argument("--m", type=int, default=1, help="base field degree over F_p")
    sub.add_argument("--n", type=int, required=True, help="extension degree over F_q")
    sub.add_argument(
        "--modulus",
        type=str,
        default=None,
        help="comma separated coefficients c_0,..,c_mn (default: deterministic)",
    )
    sub.add_argument("--out", type=str, default=None, help="output file (default stdout)")
    sub.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")


def _add_mode_args(sub):
    sub.add_argument("--exhaustive", action="store_true", help="enumerate (default)")
    sub.add_argument("--random", action="store_true", help="sample with --seed")
    sub.add_argument("--seed", type=int, default=0, help="64-bit sampling seed")
    sub.add_argument("--budget", type=int, default=None, help="candidate budget")


def _build_ctx(args):
    modulus = None
    if args.modulus:
        modulus = [int(c) for c in args.modulus.split(",")]
    return build_field(args.p, args.m, args.n, modulus=modulus)


def _mode(args):
    if args.random and args.exhaustive:
        raise ValueError("choose one of --exhaustive / --random")
    return "random" if args.random else "exhaustive"


def _mask(args, n):
    if args.mask is None:
        return tuple(range(n))
    return tuple(int(i) for i in args.mask.split(","))


def _config_record(args, ctx, extra=None):
    rec = {
        "record": "config",
        "command": args.command,
        "field": ctx.to_spec(),
        "format": args.format,
    }
    if extra:
        rec.update(extra)
    return rec


def _read_polys(ctx, path):
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            if data.get("record") in ("config", "summary"):
                continue
            coeffs = data["coeffs"]
            if len(coeffs) != ctx.n:
                raise ValueError(f"expected {ctx.n} coefficients, got {len(coeffs)}")
            out.append(linpoly.LinearizedPoly(ctx, tuple(coeffs)))
    return out


def cmd_search(args):
    ctx = _build_ctx(args)
    mode = _mode(args)
    mask = _mask(args, ctx.n)
    writer = _Writer(args.out)
    try:
        writer.emit(
            _config_record(
                args,
                ctx,
                {
                    "mask": list(mask),
                    "mode": mode,
                    "seed": args.seed if mode == "random" else None,
                    "budget": linpoly.search_budget(args.budget),
                },
            )
        )
        found = linpoly.search(
            ctx,
            mask,
            mode=mode,
            seed=args.seed,
            budget=args.budget,
        )
        for L in found:
            report = families.classify(L)
            report["record"] = "result"
            if args.format == "csv":
                writer.emit_csv_line(
                    ",".join(str(c) for c in L.coeffs)
                    + f',{report["commutative"]},{report["ganley"]},'
                    + "|".join(report["families"])
                )
            else:
                writer.emit(report)
        writer.emit({"record": "summary", "found": len(found)})
    finally:
        writer.close()
    return 0


def _verify_one(L):
    ctx = L.ctx
    report = {"record": "result", "coeffs": list(L.coeffs)}
    if not linpoly.switching_predicate(L):
        report["predicate"] = False
        spec = families.switch_spec_for(L)
        op = presemifield.build_switch(spec)
        ok = presemifield.verify_presemifield(op)
        report["presemifield"] = ok
        if not ok:
            report["zero_divisor"] = list(presemifield.find_zero_divisor(op))
        return report
    deep = families.classify(L)
    deep.pop("record", None)
    report.update(deep)
    report["predicate"] = True
    if any(L.coeffs[i] for i in range(1, ctx.n)):
        report["hws"] = hws.curve_verdicts(L).to_dict()
    else:
        report["hws"] = None
    if ctx.m == 1:
        ok, witness = digits_vanishing(L)
        report["vanishing_sums"] = ok
        if not ok:
            report["vanishing_sums_witness"] = {
                "i": list(witness["i"]),
                "t": list(witness["t"]),
            }
    else:
        report["vanishing_sums"] = None
    return report


def digits_vanishing(L):
    from .digits import vanishing_sums_check

    return vanishing_sums_check(L)


def cmd_verify(args):
    ctx = _build_ctx(args)
    polys = _read_polys(ctx, args.infile)
    writer = _Writer(args.out)
    try:
        writer.emit(_config_record(args, ctx, {"infile": args.infile}))
        for L in polys:
            report = _verify_one(L)
            if args.format == "csv":
                writer.emit_csv_line(
                    ",".join(str(c) for c in L.coeffs)
                    + f',{report.get("predicate")},{report.get("presemifield")}'
                )
            else:
                writer.emit(report)
    finally:
        writer.close()
    return 0


def cmd_codes(args):
    ctx = _build_ctx(args)
    mode = _mode(args)
    writer = _Writer(args.out)
    try:
        writer.emit(_config_record(args, ctx, {"mode": mode}))
        dim = codes_mod.code_dimension(ctx.q, ctx.n)
        census = codes_mod.full_weight_search(
            ctx, mode=mode, seed=args.seed, budget=args.budget
        )
        record = {"record": "result", "dimension": dim}
        record.update(census)
        writer.emit(record)
    finally:
        writer.close()
    return 0


def cmd_hws(args):
    ctx = _build_ctx(args)
    polys = _read_polys(ctx, args.infile)
    writer = _Writer(args.out)
    try:
        writer.emit(_config_record(args, ctx, {"infile": args.infile}))
        for L in polys:
            rec = {"record": "result", "coeffs": list(L.coeffs)}
            if not any(L.coeffs[1:]):
                # a unit multiple has no curve statistic; report what exists
                rec["skipped"] = "no higher coefficients"
                rec["point_count"] = hws.rational_point_count(L)
            else:
                rec.update(hws.curve_verdicts(L).to_dict())
            if args.format == "csv":
                writer.emit_csv_line(
                    ",".join(str(c) for c in L.coeffs)
                    + f',{rec.get("ell", "")},{rec.get("genus", "")},'
                    + f'{rec.get("impossible_nonzero_trace", "")},{rec.get("impossible_zero_trace", "")}'
                )
            else:
                writer.emit(rec)
    finally:
        writer.close()
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="semiswitch",
        description="search, verify and bound switchings of finite-field multiplication",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser("search", help="enumerate predicate-passing polynomials")
    _add_field_args(p_search)
    _add_mode_args(p_search)
    p_search.add_argument(
        "--mask", type=str, default=None, help="comma separated coefficient indices"
    )
    p_search.set_defaults(fn=cmd_search)

    p_verify = sub.add_parser("verify", help="full report for polynomials from a file")
    _add_field_args(p_verify)
    p_verify.add_argument("infile", help="JSON lines with a coeffs entry per line")
    p_verify.set_defaults(fn=cmd_verify)

    p_codes = sub.add_parser("codes", help="code dimension and full-weight census")
    _add_field_args(p_codes)
    _add_mode_args(p_codes)
    p_codes.set_defaults(fn=cmd_codes)

    p_hws = sub.add_parser("hws", help="curve-bound verdicts for polynomials")
    _add_field_args(p_hws)
    p_hws.add_argument("infile", help="JSON lines with a coeffs entry per line")
    p_hws.set_defaults(fn=cmd_hws)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 3
    except ConsistencyError as e:
        payload = {"error": "consistency", "message": str(e), "witness": getattr(e, "witness", None)}
        print(json.dumps(payload, default=str), file=sys.stderr)
        return 4
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
