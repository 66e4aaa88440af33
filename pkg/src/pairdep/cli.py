"""Command-line front end: CSV in, JSON reports out, SVG scatter plots.

Exit codes: 0 success, 1 data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace
from pathlib import Path

from .ace import AceOptions, ace
from .cca import covariance_triple, first_canonical_correlation
from .correlation import pearson, spearman
from .csvio import ingest_csv, parse_selectors, write_csv
from .datagen import Law, ModelConfig, gen_bump, gen_gaussian, gen_independent
from .distance import dcor, dcov2
from .exceptions import PairdepError
from .permutation import STATISTIC_NAMES, make_statistic, permutation_test, power_study
from .renyi import kl_correlation
from .report import RunReport
from .sample import PairedSample
from .svgplot import scatter_svg


def _add_data_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", required=True, help="input CSV file")
    p.add_argument("--x", default="1", help="x columns: names or 1-based indices, comma separated")
    p.add_argument("--y", default="2", help="y columns: names or 1-based indices, comma separated")
    p.add_argument("--no-header", action="store_true", help="file has no header row")


def _add_report_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock duration in the report (breaks byte-reproducibility)")


def _add_kl_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--K", type=int, default=5, help="basis size for x")
    p.add_argument("--L", type=int, default=5, help="basis size for y")
    p.add_argument("--start-index", type=int, default=1, help="first polynomial index")
    p.add_argument("--no-normalize", action="store_true", help="skip column normalization")
    p.add_argument("--no-standardize", action="store_true", help="skip input standardization")
    p.add_argument("--ridge", type=float, default=0.0)
    p.add_argument("--rank-tol", type=float, default=1e-10)


def _add_ace_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--span", type=float, default=0.12, help="smoother window fraction")
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-6)


def _add_bump_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--beta1", type=float, default=1.5)
    p.add_argument("--beta2", type=float, default=0.5)
    p.add_argument("--beta3", type=float, default=0.5)
    p.add_argument("--noise-sd", type=float, default=None,
                   help="noise standard deviation (default 0.02*beta1/beta2)")
    p.add_argument("--x-law", default="uniform:0,1", help="uniform:a,b or normal:mu,sigma")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairdep",
        description="Dependence measures for paired samples with permutation inference.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    for name, text in (
        ("pearson", "Pearson product-moment correlation"),
        ("spearman", "Spearman rank correlation"),
        ("dcor", "distance correlation and squared distance covariance"),
    ):
        p = sub.add_parser(name, help=text)
        _add_data_args(p)
        _add_report_args(p)

    p = sub.add_parser("cca", help="first canonical correlation of the raw columns")
    _add_data_args(p)
    _add_report_args(p)
    p.add_argument("--ridge", type=float, default=0.0)
    p.add_argument("--rank-tol", type=float, default=1e-10)

    p = sub.add_parser("renyi-kl", help="basis-span approximate maximal correlation")
    _add_data_args(p)
    _add_report_args(p)
    _add_kl_args(p)

    p = sub.add_parser("ace", help="maximal correlation via alternating conditional expectations")
    _add_data_args(p)
    _add_report_args(p)
    _add_ace_args(p)
    p.add_argument("--transforms", action="store_true",
                   help="include the fitted pointwise transforms in the report")

    p = sub.add_parser("permtest", help="permutation test of a dependence statistic")
    _add_data_args(p)
    _add_report_args(p)
    p.add_argument("--stat", required=True, choices=STATISTIC_NAMES)
    p.add_argument("--b", type=int, default=999, help="number of permutation replicates")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    _add_kl_args(p)
    _add_ace_args(p)

    p = sub.add_parser("power", help="Monte Carlo power comparison of several statistics")
    _add_report_args(p)
    p.add_argument("--alt", required=True, choices=("bump", "gaussian", "independent"),
                   help="alternative (or null) to simulate")
    p.add_argument("--stats", default="pearson,dcor,kl,ace",
                   help="comma-separated statistic names")
    p.add_argument("--n", type=int, default=100, help="sample size per simulation")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--nsim", type=int, default=200)
    p.add_argument("--b", type=int, default=999)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--rho", type=float, default=0.5, help="correlation of the gaussian alternative")
    p.add_argument("--y-law", default="normal:0,1", help="y law of the independent null")
    _add_bump_args(p)
    _add_kl_args(p)
    _add_ace_args(p)

    p = sub.add_parser("simulate", help="write a synthetic dataset as CSV")
    model_sub = p.add_subparsers(dest="model", required=True)

    pb = model_sub.add_parser("bump", help="nonmonotone Gaussian-bump model")
    _add_bump_args(pb)
    pg = model_sub.add_parser("gaussian", help="correlated bivariate normal")
    pg.add_argument("--rho", type=float, default=0.5)
    pi = model_sub.add_parser("independent", help="independent x and y")
    pi.add_argument("--x-law", default="uniform:0,1")
    pi.add_argument("--y-law", default="normal:0,1")
    for pm in (pb, pg, pi):
        pm.add_argument("--n", type=int, default=500)
        pm.add_argument("--seed", type=int, default=0)
        pm.add_argument("--out", required=True, help="CSV file to write")
        pm.add_argument("--timing", action="store_true")

    p = sub.add_parser("plot", help="SVG scatter of the data, optionally with ACE transforms")
    _add_data_args(p)
    p.add_argument("--out", required=True, help="SVG file to write")
    p.add_argument("--ace", action="store_true", help="add a panel with the fitted transforms")
    _add_ace_args(p)
    p.add_argument("--timing", action="store_true")
    return parser


def _load_sample(args) -> PairedSample:
    return ingest_csv(
        args.infile,
        parse_selectors(args.x),
        parse_selectors(args.y),
        header=not args.no_header,
    )


def _data_params(args) -> dict:
    return {"x": args.x, "y": args.y, "header": not args.no_header}


def _kl_kwargs(args) -> dict:
    return {
        "start_index": args.start_index,
        "normalize": not args.no_normalize,
        "standardize_input": not args.no_standardize,
        "ridge": args.ridge,
        "rank_tol": args.rank_tol,
    }


def _check_usage(parser: argparse.ArgumentParser, args) -> None:
    """Range checks on flags; violations are usage errors (exit 2)."""
    checks = {
        "K": lambda v: v >= 1,
        "L": lambda v: v >= 1,
        "start_index": lambda v: v >= 0,
        "b": lambda v: v >= 1,
        "seed": lambda v: v >= 0,
        "threads": lambda v: v >= 1,
        "n": lambda v: v >= 2,
        "nsim": lambda v: v >= 1,
        "alpha": lambda v: 0.0 < v < 1.0,
        "span": lambda v: 0.0 < v <= 1.0,
        "max_iter": lambda v: v >= 1,
        "tol": lambda v: v > 0.0,
        "ridge": lambda v: v >= 0.0,
        "rank_tol": lambda v: 0.0 <= v < 1.0,
        "rho": lambda v: -1.0 < v < 1.0,
        "noise_sd": lambda v: v >= 0.0,
    }
    for name, ok in checks.items():
        value = getattr(args, name, None)
        if value is not None and not ok(value):
            parser.error(f"invalid value for --{name.replace('_', '-')}: {value}")


def _run_pearson(args) -> RunReport:
    s = _load_sample(args)
    r = pearson(s.x1d("pearson"), s.y1d("pearson"))
    return RunReport("pearson", str(args.infile), _data_params(args), {"r": r})


def _run_spearman(args) -> RunReport:
    s = _load_sample(args)
    r = spearman(s.x1d("spearman"), s.y1d("spearman"))
    return RunReport("spearman", str(args.infile), _data_params(args), {"r": r})


def _run_dcor(args) -> RunReport:
    s = _load_sample(args)
    results = {"dcor": dcor(s), "dcov2": dcov2(s), "n": s.n, "p": s.p, "q": s.q}
    return RunReport("dcor", str(args.infile), _data_params(args), results)


def _run_cca(args) -> RunReport:
    s = _load_sample(args)
    res = first_canonical_correlation(
        covariance_triple(s.x, s.y), ridge=args.ridge, rank_tol=args.rank_tol
    )
    params = {**_data_params(args), "ridge": args.ridge, "rank_tol": args.rank_tol}
    results = {
        "rho": res.rho,
        "alpha": res.alpha,
        "beta": res.beta,
        "effective_rank_x": res.effective_rank_x,
        "effective_rank_y": res.effective_rank_y,
    }
    return RunReport("cca", str(args.infile), params, results)


def _run_renyi_kl(args) -> RunReport:
    s = _load_sample(args)
    res = kl_correlation(s, args.K, args.L, **_kl_kwargs(args))
    params = {**_data_params(args), "K": args.K, "L": args.L, **_kl_kwargs(args)}
    results = {
        "rho": res.rho,
        "alpha": res.alpha,
        "beta": res.beta,
        "effective_rank_x": res.effective_rank_x,
        "effective_rank_y": res.effective_rank_y,
    }
    return RunReport("renyi-kl", str(args.infile), params, results)


def _run_ace(args) -> RunReport:
    s = _load_sample(args)
    res = ace(s, AceOptions(span=args.span, max_iterations=args.max_iter, tolerance=args.tol))
    params = {**_data_params(args), "span": args.span, "max_iter": args.max_iter,
              "tol": args.tol}
    results = {"r_hat": res.r_hat, "iterations": res.iterations, "converged": res.converged}
    if args.transforms:
        results["fx"] = res.fx
        results["gy"] = res.gy
    return RunReport("ace", str(args.infile), params, results)


def _statistic_from_args(args):
    return make_statistic(
        args.stat, k=args.K, l=args.L,
        span=args.span, max_iterations=args.max_iter, tolerance=args.tol,
    )


def _run_permtest(args) -> RunReport:
    s = _load_sample(args)
    stat = _statistic_from_args(args)
    res = permutation_test(s, stat, b=args.b, seed=args.seed, threads=args.threads)
    params = {
        **_data_params(args), "stat": args.stat, "b": args.b, "threads": args.threads,
        "K": args.K, "L": args.L, "span": args.span, "max_iter": args.max_iter,
        "tol": args.tol,
    }
    results = {
        "statistic_name": res.statistic_name,
        "observed": res.observed,
        "b": res.b,
        "count_ge": res.count_ge,
        "p_value": res.p_value,
    }
    return RunReport("permtest", str(args.infile), params, results, seed=args.seed)


def _bump_config(args, n: int, seed: int) -> ModelConfig:
    return ModelConfig(
        beta1=args.beta1, beta2=args.beta2, beta3=args.beta3,
        noise_sd=args.noise_sd, x_law=Law.parse(args.x_law), n=n, seed=seed,
    )


def _run_power(args) -> RunReport:
    if args.alt == "bump":
        base = _bump_config(args, args.n, 0)
        sampler = lambda n, seed: gen_bump(replace(base, n=n, seed=seed))
        alt_desc = (f"bump(beta=({base.beta1:g},{base.beta2:g},{base.beta3:g}), "
                    f"noise_sd={base.noise_sd:g}, x={base.x_law.spec()})")
    elif args.alt == "gaussian":
        sampler = lambda n, seed: gen_gaussian(n, args.rho, seed)
        alt_desc = f"gaussian(rho={args.rho:g})"
    else:
        x_law = Law.parse(args.x_law)
        y_law = Law.parse(args.y_law)
        sampler = lambda n, seed: gen_independent(n, x_law, y_law, seed)
        alt_desc = f"independent(x={x_law.spec()}, y={y_law.spec()})"

    stats = [
        make_statistic(name.strip(), k=args.K, l=args.L, span=args.span,
                       max_iterations=args.max_iter, tolerance=args.tol)
        for name in args.stats.split(",") if name.strip()
    ]
    table = power_study(
        sampler, stats, alternative=alt_desc, n=args.n, alpha=args.alpha,
        nsim=args.nsim, b=args.b, seed=args.seed, threads=args.threads,
    )
    params = {
        "alt": args.alt, "stats": args.stats, "n": args.n, "alpha": args.alpha,
        "nsim": args.nsim, "b": args.b, "threads": args.threads,
        "K": args.K, "L": args.L, "span": args.span,
    }
    return RunReport("power", alt_desc, params, table.as_dict(), seed=args.seed)


def _run_simulate(args) -> RunReport:
    if args.model == "bump":
        config = _bump_config(args, args.n, args.seed)
        sample = gen_bump(config)
        params = {
            "model": "bump", "beta1": config.beta1, "beta2": config.beta2,
            "beta3": config.beta3, "noise_sd": config.noise_sd,
            "x_law": config.x_law.spec(), "n": args.n,
        }
    elif args.model == "gaussian":
        sample = gen_gaussian(args.n, args.rho, args.seed)
        params = {"model": "gaussian", "rho": args.rho, "n": args.n}
    else:
        sample = gen_independent(args.n, Law.parse(args.x_law), Law.parse(args.y_law), args.seed)
        params = {"model": "independent", "x_law": args.x_law, "y_law": args.y_law, "n": args.n}
    write_csv(args.out, sample)
    results = {"rows": sample.n, "columns": sample.p + sample.q, "csv": str(args.out)}
    return RunReport("simulate", f"{args.model} generator", params, results, seed=args.seed)


def _run_plot(args) -> RunReport:
    s = _load_sample(args)
    panels = [("data", s.x1d("plot"), s.y1d("plot"))]
    results: dict = {"n": s.n, "svg": str(args.out)}
    params = {**_data_params(args), "ace": args.ace}
    if args.ace:
        res = ace(s, AceOptions(span=args.span, max_iterations=args.max_iter,
                                tolerance=args.tol))
        panels.append(("estimated transforms", res.fx, res.gy))
        results["r_hat"] = res.r_hat
        params.update({"span": args.span, "max_iter": args.max_iter, "tol": args.tol})
    Path(args.out).write_text(scatter_svg(panels), encoding="utf-8")
    return RunReport("plot", str(args.infile), params, results)


_HANDLERS = {
    "pearson": _run_pearson,
    "spearman": _run_spearman,
    "dcor": _run_dcor,
    "cca": _run_cca,
    "renyi-kl": _run_renyi_kl,
    "ace": _run_ace,
    "permtest": _run_permtest,
    "power": _run_power,
    "simulate": _run_simulate,
    "plot": _run_plot,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_usage(parser, args)
    started = time.perf_counter()
    try:
        report = _HANDLERS[args.subcommand](args)
    except PairdepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.timing:
        report = replace(report, duration_seconds=time.perf_counter() - started)
    text = report.to_json()
    out = getattr(args, "out", None)
    if out and args.subcommand not in ("simulate", "plot"):
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
