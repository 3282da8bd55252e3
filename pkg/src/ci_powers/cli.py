"""Command line frontend: ``ci-powers <command> ...``.

Exit codes: 0 ok, 1 verification failure, 2 usage or schema error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import fatpoints, hhs, hilbert, oracles, resolution, verify
from .resolution import CIType, PreconditionError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandResult:
    status: str  # "ok" | "fail" | "error"
    payload: str = ""
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "fail": EXIT_FAIL}.get(self.status, EXIT_USAGE)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _type(args) -> CIType:
    return CIType.parse(args.type)


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise PreconditionError(f"{what}: expected comma-separated integers, got {text!r}") from None


# -- commands ---------------------------------------------------------------

def cmd_betti(args) -> CommandResult:
    table = resolution.power_betti(_type(args), args.power)
    if args.format == "json":
        return CommandResult("ok", _dump(table.to_json_dict()))
    return CommandResult("ok", table.render())


def _hilbert_out(data: hilbert.HilbertData, fmt: str) -> str:
    if fmt == "json":
        return _dump(data.to_json_dict())
    return data.to_csv().rstrip("\n")


def cmd_hilbert(args) -> CommandResult:
    ct = _type(args)
    n = args.ambient if args.ambient is not None else ct.r
    D = args.max_degree if args.max_degree is not None else hilbert.default_max_degree(ct, args.power)
    if D < 0:
        raise PreconditionError(f"--max-degree must be >= 0 (got {D})")
    return CommandResult("ok", _hilbert_out(hilbert.hf_power(ct, n, args.power, D), args.format))


def cmd_hhs(args) -> CommandResult:
    rep = hhs.check_hhs(_type(args), args.power)
    payload = _dump(rep.to_json_dict()) if args.format == "json" else rep.verdict_line()
    diags = []
    if rep.mismatch:
        diags.append(f"formula shifts m={rep.m}, M={rep.M} differ from the Betti table m={rep.table_m}, M={rep.table_M}")
    ok = rep.holds and not rep.mismatch
    return CommandResult("ok" if ok else "fail", payload, diags)


def _fat_spec(args) -> fatpoints.FatCISpec:
    ct = _type(args)
    n = args.ambient if args.ambient is not None else ct.r
    if getattr(args, "mults", None):
        return fatpoints.FatCISpec(ct, n, mults=_int_list(args.mults, "--mults"))
    if args.mult is None:
        raise PreconditionError("--mult is required")
    return fatpoints.FatCISpec(ct, n, mult=args.mult)


def _report_out(rep: fatpoints.InvariantReport, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        body = rep.to_json_dict()
        if extra:
            body.update(extra)
        return _dump(body)
    return rep.summary()


def cmd_fat_ci(args) -> CommandResult:
    spec = _fat_spec(args)
    if not spec.homogeneous:
        raise fatpoints.HypothesisError("ci needs a single multiplicity; use 'fatpoints bounds' for --mults")
    return CommandResult("ok", _report_out(fatpoints.ci_invariants(spec), args.format))


def cmd_fat_bounds(args) -> CommandResult:
    spec = _fat_spec(args)
    hf_bounds, rep = fatpoints.sandwich_bounds(spec, args.max_degree)
    if args.format == "json":
        return CommandResult("ok", _report_out(rep, "json", {"hf_bounds": [list(b) for b in hf_bounds]}))
    lines = [rep.summary(), "degree,hf_lower,hf_upper"]
    lines += [f"{t},{lo},{hi}" for t, (lo, hi) in enumerate(hf_bounds)]
    return CommandResult("ok", "\n".join(lines))


def cmd_fat_split(args) -> CommandResult:
    spec = fatpoints.SplitSpec(_fat_spec(args), args.split_axis, not args.removed_elsewhere)
    return CommandResult("ok", _report_out(fatpoints.split_report(spec), args.format))


def cmd_fat_cb(args) -> CommandResult:
    ct = _type(args)
    if args.ambient is not None and args.ambient != ct.r:
        raise fatpoints.HypothesisError(f"reduced complete intersection of points needs r = n (got r={ct.r}, n={args.ambient})")
    D = args.max_degree if args.max_degree is not None else sum(ct.degrees) + 1
    vals = [fatpoints.cb_minus_point_hf(ct, t) for t in range(D + 1)]
    data = hilbert.HilbertData(ct.r, vals, [])
    if args.format == "json":
        return CommandResult("ok", _dump({"ambient": ct.r, "values": vals}))
    return CommandResult("ok", data.to_csv().rstrip("\n"))


def cmd_oracle_monomial(args) -> CommandResult:
    ct = _type(args)
    n = args.ambient if args.ambient is not None else ct.r
    D = args.max_degree if args.max_degree is not None else hilbert.default_max_degree(ct, args.power)
    vals = oracles.monomial_hf_values(ct, n, args.power, D)
    if args.format == "json":
        return CommandResult("ok", _dump({"ambient": n, "values": vals}))
    return CommandResult("ok", hilbert.HilbertData(n, vals, []).to_csv().rstrip("\n"))


def cmd_oracle_points(args) -> CommandResult:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise oracles.SchemaError(f"cannot read {args.file}: {exc.strerror}") from None
    cfg = oracles.PointConfig.loads(text)
    if args.max_degree is not None:
        vals = oracles.points_hf_values(cfg, args.max_degree)
        body = {"ambient": cfg.ambient, "deg": cfg.degree, "values": vals}
    else:
        inv = oracles.points_invariants(cfg)
        body = {"ambient": cfg.ambient, "deg": inv.deg, "alpha": inv.alpha, "ri": inv.ri, "values": inv.values}
    if args.format == "json":
        return CommandResult("ok", _dump(body))
    lines = [" ".join(str(v) for v in body["values"])]
    lines += [f"{k} = {body[k]}" for k in ("deg", "alpha", "ri") if k in body]
    return CommandResult("ok", "\n".join(lines))


def cmd_oracle_grid(args) -> CommandResult:
    lists = args.values.split(";")
    value_lists = []
    for k, part in enumerate(lists):
        try:
            value_lists.append([Fraction(v.strip()) for v in part.split(",")])
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(f"--values list {k}: expected comma-separated rationals, got {part!r}") from None
    mult = _int_list(args.mult, "--mult")
    cfg = oracles.grid_points(value_lists, mult[0] if len(mult) == 1 else mult)
    for idx in sorted(args.remove or [], reverse=True):
        cfg = oracles.remove_point(cfg, idx)
    return CommandResult("ok", cfg.dumps())


def cmd_verify(args) -> CommandResult:
    cfg = verify.LatticeConfig(max_r=args.max_r, max_type=args.max_type, max_s=args.max_s, max_deg=args.max_deg)
    results = verify.run(args.suite, cfg)
    lines = [r.line() for r in results]
    ok = all(r.ok for r in results)
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} properties passed")
    return CommandResult("ok" if ok else "fail", "\n".join(lines))


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ci-powers", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_type(sp, power=True):
        sp.add_argument("--type", required=True, help="generator degrees, e.g. 2,3")
        if power:
            sp.add_argument("--power", type=int, default=1, help="exponent s >= 1")

    sp = sub.add_parser("betti", help="graded Betti table of I^s")
    add_type(sp)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("hilbert", help="Hilbert function of R/I^s")
    add_type(sp)
    sp.add_argument("--ambient", type=int, help="n, for R = k[x_0..x_n] (default r)")
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("hhs", help="Herzog-Huneke-Srinivasan bounds for R/I^s")
    add_type(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_hhs)

    fp = sub.add_parser("fatpoints", help="fat points supported on CI(d_1..d_n)")
    fsub = fp.add_subparsers(dest="fat_command", required=True)
    for name, func, helptext in (
        ("ci", cmd_fat_ci, "homogeneous {CI; m}: alpha, ri, deg"),
        ("bounds", cmd_fat_bounds, "non-homogeneous: sandwich bounds"),
        ("split", cmd_fat_split, "{CI; m} minus a fat point in the hyperplane piece of a split"),
        ("cb", cmd_fat_cb, "reduced CI minus one point: Hilbert function"),
    ):
        sp = fsub.add_parser(name, help=helptext)
        add_type(sp, power=False)
        sp.add_argument("--ambient", type=int, help="n (must equal r)")
        sp.add_argument("--format", choices=("text", "json") if name != "cb" else ("csv", "json"),
                        default="text" if name != "cb" else "csv")
        if name in ("ci", "bounds", "split"):
            sp.add_argument("--mult", type=int)
        if name == "bounds":
            sp.add_argument("--mults", help="one multiplicity per point, comma separated")
        if name in ("bounds", "cb"):
            sp.add_argument("--max-degree", type=int)
        if name == "split":
            sp.add_argument("--split-axis", choices=fatpoints.AXES, required=True)
            sp.add_argument("--removed-elsewhere", action="store_true",
                            help="declare that the removed point is NOT in the degree-1 piece (rejected)")
        sp.set_defaults(func=func)

    op = sub.add_parser("oracle", help="brute-force oracles")
    osub = op.add_subparsers(dest="oracle_command", required=True)
    sp = osub.add_parser("monomial", help="Hilbert function of a monomial complete intersection power")
    add_type(sp)
    sp.add_argument("--ambient", type=int)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_oracle_monomial)

    sp = osub.add_parser("points", help="Hilbert function of explicit fat points (JSON file)")
    sp.add_argument("--file", required=True)
    sp.add_argument("--max-degree", type=int, help="default: scan until the Hilbert function reaches deg")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_oracle_points)

    sp = osub.add_parser("grid", help="emit a grid point configuration as JSON")
    sp.add_argument("--values", required=True, help="coordinate lists separated by ';', e.g. '0,1,2;0,1,2,3'")
    sp.add_argument("--mult", default="1", help="one multiplicity, or one per point")
    sp.add_argument("--remove", type=int, action="append", help="index of a point to drop (repeatable)")
    sp.set_defaults(func=cmd_oracle_grid)

    sp = sub.add_parser("verify", help="run property suites over a lattice of types")
    sp.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    sp.add_argument("--max-type", type=int, default=4, help="largest generator degree")
    sp.add_argument("--max-r", type=int, default=4, help="most generators")
    sp.add_argument("--max-s", type=int, default=4, help="largest power")
    sp.add_argument("--max-deg", type=int, default=None, help="cap on the Hilbert window")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> CommandResult:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PreconditionError, IndexError) as exc:
        return CommandResult("error", "", [f"error: {exc}"])


def main(argv=None) -> int:
    res = run(argv)
    if res.payload:
        print(res.payload)
    for line in res.diagnostics:
        print(line, file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
