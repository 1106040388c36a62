"""Command-line front end.

Subcommands: region, member, waterfill, compare, plot.  Rationals are
printed as "p/q" (or "n" when integral) everywhere; decimals appear only
inside SVG coordinates, computed from the exact values at emit time.

Exit codes: 0 success / agreement, 1 demand outside the region,
2 verified discrepancy between a closed form and the LP oracle,
3 usage or configuration errors, 4 internal errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import closed_form
from .boundary import PiecewiseBoundary
from .codes import (CodeConstructionError, CodeSpec, HybridSpec, make_hybrid,
                    make_mds_systematic, make_replication, make_simplex)
from .region import RegionError, SystemConfig, max_weighted_sum, membership, project_fm, trace_boundary_2d
from .verify import compare_boundaries, render_report
from .waterfill import InfeasibleDemand, validate_allocation, waterfill

_ZERO = Fraction(0)


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_rational(text, where: str) -> Fraction:
    try:
        value = Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError("%s: %r is not a rational like '3/2'" % (where, text))
    return value


def parse_demand(text: str, k: int):
    parts = text.split(",")
    if len(parts) != k:
        raise UsageError("--demand: expected %d comma-separated rates, got %d"
                         % (k, len(parts)))
    return tuple(parse_rational(p, "--demand") for p in parts)


_CODE_FIELDS = {
    "replication": {"n", "copies"},
    "mds": {"n", "k"},
    "simplex": {"k"},
    "hybrid": {"a", "b", "c"},
    "generator": {"q", "rows"},
}


def _build_code(code: dict) -> CodeSpec:
    if not isinstance(code, dict):
        raise UsageError("config field 'code': expected an object")
    kind = code.get("kind")
    if kind not in _CODE_FIELDS:
        raise UsageError("config field 'code.kind': expected one of %s, got %r"
                         % (sorted(_CODE_FIELDS), kind))
    extra = set(code) - _CODE_FIELDS[kind] - {"kind"}
    missing = _CODE_FIELDS[kind] - set(code)
    if extra:
        raise UsageError("config field 'code.%s': unknown field for kind %r"
                         % (sorted(extra)[0], kind))
    if missing:
        raise UsageError("config field 'code.%s': required for kind %r"
                         % (sorted(missing)[0], kind))
    try:
        if kind == "replication":
            return make_replication(int(code["n"]), [int(c) for c in code["copies"]])
        if kind == "mds":
            return make_mds_systematic(int(code["n"]), int(code["k"]))
        if kind == "simplex":
            return make_simplex(int(code["k"]))
        if kind == "hybrid":
            return make_hybrid(HybridSpec(int(code["a"]), int(code["b"]), int(code["c"])))
        rows = code["rows"]
        generator = tuple(tuple(int(x) for x in row) for row in rows)
        k = len(generator)
        n = len(generator[0]) if generator else 0
        return CodeSpec(q=int(code["q"]), k=k, n=n, generator=generator,
                        labels=tuple("n%d" % (j + 1) for j in range(n)))
    except (CodeConstructionError, ValueError, TypeError, IndexError) as exc:
        raise UsageError("config field 'code': %s" % exc)


def load_config(path: str):
    """Strict config file: {"mu": rational-string, "code": {...}} only."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError("--config: cannot read %s (%s)" % (path, exc))
    except json.JSONDecodeError as exc:
        raise UsageError("--config: %s is not valid JSON (%s)" % (path, exc))
    if not isinstance(data, dict):
        raise UsageError("config: expected a JSON object")
    extra = set(data) - {"mu", "code"}
    if extra:
        raise UsageError("config field '%s': unknown field" % sorted(extra)[0])
    if "mu" not in data:
        raise UsageError("config field 'mu': required")
    if "code" not in data:
        raise UsageError("config field 'code': required")
    mu = parse_rational(data["mu"], "config field 'mu'")
    if mu <= 0:
        raise UsageError("config field 'mu': must be positive")
    code = _build_code(data["code"])
    raw = dict(data["code"])
    return SystemConfig.build(code, mu), raw


def frac(x: Fraction) -> str:
    return str(Fraction(x))


def _closed_form_chain(raw: dict, mu: Fraction):
    """The applicable closed-form overlay for a parsed two-file config, if any."""
    kind = raw.get("kind")
    if kind == "mds" and int(raw["k"]) == 2 and int(raw["n"]) >= 4:
        return "mds closed form", closed_form.mds_halfrate_chain(int(raw["n"]), mu)
    if kind == "hybrid":
        spec = HybridSpec(int(raw["a"]), int(raw["b"]), int(raw["c"]))
        return "hybrid closed form", closed_form.hybrid_boundary(spec, mu)
    if kind == "simplex" and int(raw["k"]) == 2:
        cap = 2 * mu
        return "simplex closed form", PiecewiseBoundary(((_ZERO, cap), (cap, _ZERO)))
    if kind == "replication" and len(raw["copies"]) == 2:
        ca, cb = (int(c) * mu for c in raw["copies"])
        return "replication closed form", PiecewiseBoundary(((_ZERO, cb), (ca, cb), (ca, _ZERO)))
    return None


def region_csv(chain: PiecewiseBoundary) -> str:
    return "\n".join("%s,%s" % (frac(x), frac(y)) for x, y in chain.vertices) + "\n"


def support_table_csv(config: SystemConfig) -> str:
    lines = ["direction,max_weighted_sum"]
    for i in range(config.k):
        weights = [_ZERO] * config.k
        weights[i] = Fraction(1)
        lines.append("f%d,%s" % (i + 1, frac(max_weighted_sum(config, weights))))
    ones = [Fraction(1)] * config.k
    lines.append("all,%s" % frac(max_weighted_sum(config, ones)))
    return "\n".join(lines) + "\n"


def allocation_csv(config: SystemConfig, alloc) -> str:
    lines = ["file,recovering_set,share"]
    for i, (shares, sets) in enumerate(zip(alloc.shares, config.recovery.sets_by_file)):
        for share, rset in zip(shares, sets):
            if share == 0:
                continue
            nodes = "+".join(str(v + 1) for v in rset)
            lines.append("%d,%s,%s" % (i + 1, nodes, frac(share)))
    return "\n".join(lines) + "\n"


def loads_csv(loads) -> str:
    lines = ["node,load"]
    for v, load in enumerate(loads):
        lines.append("%d,%s" % (v + 1, frac(load)))
    return "\n".join(lines) + "\n"


def write_svg(path: str, chains, mu: Fraction):
    """Standalone SVG of boundary chains; exact vertices ride along as
    data-vertices attributes so the plot stays auditable."""
    size, margin = 420, 50
    top = max(max(c.max_rate_a for _, c in chains),
              max(c.max_rate_b for _, c in chains), mu)
    ticks = int(top / mu) + 1
    span = float(mu * ticks)
    scale = (size - 2 * margin) / span

    def sx(v):
        return margin + float(v) * scale

    def sy(v):
        return size - margin - float(v) * scale

    colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"]
    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d">'
             % (size, size)]
    parts.append('<rect width="100%" height="100%" fill="white"/>')
    parts.append('<line x1="%g" y1="%g" x2="%g" y2="%g" stroke="black"/>'
                 % (sx(0), sy(0), sx(span), sy(0)))
    parts.append('<line x1="%g" y1="%g" x2="%g" y2="%g" stroke="black"/>'
                 % (sx(0), sy(0), sx(0), sy(span)))
    for t in range(1, ticks + 1):
        label = "%d&#956;" % t if t > 1 else "&#956;"
        v = float(mu * t)
        parts.append('<text x="%g" y="%g" font-size="11" text-anchor="middle">%s</text>'
                     % (sx(v), sy(0) + 16, label))
        parts.append('<text x="%g" y="%g" font-size="11" text-anchor="end">%s</text>'
                     % (sx(0) - 5, sy(v) + 4, label))
    parts.append('<text x="%g" y="%g" font-size="12">rate a</text>'
                 % (sx(span) - 30, sy(0) + 32))
    parts.append('<text x="%g" y="%g" font-size="12">rate b</text>'
                 % (sx(0) + 6, sy(span) - 6))
    for idx, (name, chain) in enumerate(chains):
        pts = " ".join("%g,%g" % (sx(x), sy(y)) for x, y in chain.vertices)
        exact = " ".join("%s,%s" % (frac(x), frac(y)) for x, y in chain.vertices)
        parts.append('<polyline fill="none" stroke="%s" stroke-width="2" '
                     'points="%s" data-name="%s" data-vertices="%s"/>'
                     % (colors[idx % len(colors)], pts, name, exact))
        parts.append('<text x="%g" y="%g" font-size="11" fill="%s">%s</text>'
                     % (margin, 16 + 14 * idx, colors[idx % len(colors)], name))
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def _emit(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_region(args) -> int:
    config, raw = load_config(args.config)
    if args.format == "svg":
        if config.k != 2:
            raise UsageError("--format svg needs a two-file config")
        chains = [("lp boundary", trace_boundary_2d(config))]
        overlay = _closed_form_chain(raw, config.mu)
        if overlay:
            chains.append(overlay)
        write_svg(args.out or "region.svg", chains, config.mu)
        return 0
    if config.k == 2:
        _emit(region_csv(trace_boundary_2d(config)), args.out)
    else:
        _emit(support_table_csv(config), args.out)
    return 0


def cmd_member(args) -> int:
    config, _ = load_config(args.config)
    rates = parse_demand(args.demand, config.k)
    ok, alloc = membership(config, rates)
    if not ok:
        sys.stderr.write("outside region\n")
        return 1
    _emit(allocation_csv(config, alloc), args.out)
    return 0


def cmd_waterfill(args) -> int:
    config, _ = load_config(args.config)
    rates = parse_demand(args.demand, config.k)
    try:
        alloc = waterfill(config, rates)
    except InfeasibleDemand as exc:
        sys.stderr.write("outside region; unserved residual %s\n" % frac(exc.residual))
        return 1
    except ValueError as exc:
        raise UsageError(str(exc))
    loads, ok = validate_allocation(config, alloc, rates)
    if not ok:
        raise AssertionError("waterfill produced an invalid allocation")
    _emit(allocation_csv(config, alloc) + loads_csv(loads), args.out)
    return 0


def _compare_target(args):
    mu = parse_rational(args.mu, "--mu")
    if args.config:
        config, raw = load_config(args.config)
        return config, raw, config.mu
    if not args.code:
        raise UsageError("compare needs --config or a code kind with parameters")
    kind, params = args.code[0], args.code[1:]
    try:
        nums = [int(p) for p in params]
    except ValueError:
        raise UsageError("compare parameters must be integers")
    if kind == "mds" and len(nums) == 2:
        raw = {"kind": "mds", "n": nums[0], "k": nums[1]}
        return SystemConfig.build(make_mds_systematic(*nums), mu), raw, mu
    if kind == "simplex" and len(nums) == 1:
        raw = {"kind": "simplex", "k": nums[0]}
        return SystemConfig.build(make_simplex(nums[0]), mu), raw, mu
    if kind == "hybrid" and len(nums) == 3:
        raw = {"kind": "hybrid", "a": nums[0], "b": nums[1], "c": nums[2]}
        return SystemConfig.build(make_hybrid(HybridSpec(*nums)), mu), raw, mu
    if kind == "replication" and len(nums) >= 2:
        raw = {"kind": "replication", "n": nums[0], "copies": nums[1:]}
        return SystemConfig.build(make_replication(nums[0], nums[1:]), mu), raw, mu
    raise UsageError("compare target %r not understood" % " ".join(args.code))


def cmd_compare(args) -> int:
    config, raw, mu = _compare_target(args)
    kind = raw.get("kind")
    if config.k == 2:
        lp_chain = trace_boundary_2d(config)
        if config.recovery.total_sets <= 40:
            fm_chain = project_fm(config)
            if fm_chain != lp_chain:
                raise AssertionError("projection oracle disagrees with the traced boundary")
        overlay = _closed_form_chain(raw, mu)
        if overlay is None:
            raise UsageError("no closed form is defined for this config")
        name, chain = overlay
        report = compare_boundaries(chain, lp_chain,
                                    instance="%s mu=%s" % (_describe(raw), frac(mu)),
                                    lhs_name=name, rhs_name="lp boundary")
    elif kind == "simplex":
        report = _support_report(config, raw, mu)
    else:
        raise UsageError("compare supports two-file configs and simplex layouts")
    sys.stdout.write(render_report(report))
    return 0 if report.max_abs_gap == 0 else 2


def _support_report(config, raw, mu):
    from .verify import RegionReport
    cap = 2 ** (config.k - 1) * mu
    got = max_weighted_sum(config, [Fraction(1)] * config.k)
    gap = cap - got
    entry = "all-ones support: closed form %s, lp %s, gap %s" % (frac(cap), frac(got),
                                                                 frac(gap))
    return RegionReport(instance="%s mu=%s" % (_describe(raw), frac(mu)),
                        entries=(entry,), max_abs_gap=abs(gap))


def _describe(raw: dict) -> str:
    kind = raw.get("kind")
    rest = " ".join("%s=%s" % (key, raw[key]) for key in sorted(raw) if key != "kind")
    return ("%s %s" % (kind, rest)).strip()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="servicecap",
                     description="Exact service capacity regions of coded storage.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("region", cmd_region, "boundary CSV (two files) or support table")
    p.add_argument("--config", required=True)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out")

    p = add("plot", cmd_region, "SVG plot of the region (two files)")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(format="svg")

    p = add("member", cmd_member, "test a demand; print a witness allocation")
    p.add_argument("--config", required=True)
    p.add_argument("--demand", required=True)
    p.add_argument("--out")

    p = add("waterfill", cmd_waterfill, "waterfilling allocation on a systematic MDS config")
    p.add_argument("--config", required=True)
    p.add_argument("--demand", required=True)
    p.add_argument("--out")

    p = add("compare", cmd_compare, "closed form vs LP report; exit 2 on discrepancy")
    p.add_argument("code", nargs="*", metavar="KIND PARAMS",
                   help="e.g. 'mds 4 2', 'hybrid 2 1 1', 'simplex 3'")
    p.add_argument("--config")
    p.add_argument("--mu", default="1")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3
    except (RegionError, CodeConstructionError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3
    except Exception as exc:  # internal: anything the commands did not expect
        sys.stderr.write("internal error: %r\n" % exc)
        return 4


if __name__ == "__main__":
    sys.exit(main())
