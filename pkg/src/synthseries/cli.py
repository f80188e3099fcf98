"""Command-line front end.

Subcommands: generate, perturb, analyze, vre. Each run is driven by a JSON
config file (documented in the README); a handful of flags override config
scalars. Seeds are mandatory and explicit so every run is reproducible;
every run writes a manifest with config, seeds, and input checksums.

Exit codes: 0 success, 2 configuration error, 3 IO error, 4 numerical
validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import stats as st
from .adequacy import (
    VreWeights,
    adequacy as compute_adequacy,
    combine_vre,
    ensemble_adequacy,
    shortfall_histogram,
    sweep_table_csv,
    weight_sweep,
)
from .ensemble import Ensemble
from .errors import ConfigError, IOErrorSS, SynthSeriesError, ValidationError
from .kernels import make_kernel
from .nnlb import generate_nnlb_batch
from .perturb import ClampPolicy, OffsetDistribution, altered_difference, direction_audit, incremental_select
from .sbb import generate_sbb_batch
from .series import HourlySeries, load_csv, write_csv

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_VALIDATION = 4


def _load_config(path: str) -> dict[str, Any]:
    p = Path(path)
    if not p.exists():
        raise IOErrorSS(f"config file not found: {p}")
    try:
        cfg = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config root must be a JSON object")
    return cfg


def _require(cfg: dict[str, Any], key: str) -> Any:
    if key not in cfg:
        raise ConfigError(f"config missing required key {key!r}")
    return cfg[key]


def _load_series(cfg: dict[str, Any], key: str, value_column: str) -> HourlySeries:
    path = Path(_require(cfg, key))
    if not path.exists():
        raise IOErrorSS(f"input file not found: {path}")
    return load_csv(path, value_column=value_column)


def _write_json(obj: Any, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="utf-8")


# --- subcommands ----------------------------------------------------------


def cmd_generate(cfg: dict[str, Any], threads: int) -> int:
    value_column = cfg.get("value_column", "value")
    source = _load_series(cfg, "input", value_column)
    method = _require(cfg, "method")
    params = _require(cfg, "params")
    B = int(_require(cfg, "B"))
    seed = int(_require(cfg, "seed"))
    out_dir = Path(_require(cfg, "output_dir"))
    include_self = bool(params.get("include_self", True))
    if method == "nnlb":
        kernel = make_kernel(params.get("kernel", "harmonic"), int(_require(params, "k")))
        ens = generate_nnlb_batch(
            source, int(_require(params, "lag")), int(params["k"]), B, seed,
            kernel=kernel, include_self=include_self, threads=threads,
        )
    elif method == "sbb":
        kernel = make_kernel(params.get("kernel", "uniform"), int(_require(params, "p")))
        ens = generate_sbb_batch(
            source, int(_require(params, "sash")), int(params["p"]), B, seed,
            kernel=kernel, include_self=include_self, threads=threads,
        )
    else:
        raise ConfigError(f"unknown method {method!r} (choose nnlb or sbb)")
    ens.save(out_dir)
    print(f"wrote {B} series to {out_dir}")
    return EXIT_OK


def cmd_perturb(cfg: dict[str, Any], threads: int) -> int:
    value_column = cfg.get("value_column", "value")
    method = _require(cfg, "method")
    out_dir = Path(_require(cfg, "output_dir"))
    if method == "incremental":
        source = _load_series(cfg, "input", value_column)
        seed = int(_require(cfg, "seed"))
        dcfg = _require(cfg, "distribution")
        dist = OffsetDistribution(
            kind=_require(dcfg, "kind"),
            mean=float(dcfg.get("mean", 0.0)),
            std=float(dcfg.get("std", 1.0)),
            below_probability=dcfg.get("below_probability"),
        )
        ccfg = cfg.get("clamp", {})
        clamp = ClampPolicy(
            alpha_max=float(ccfg.get("alpha_max", 1.0)),
            alpha_min=float(ccfg.get("alpha_min", -1.0)),
        )
        altered = incremental_select(source, dist, clamp, seed)
        audit_source = source
    elif method == "altered_difference":
        high = _load_series(cfg, "high", value_column)
        low = _load_series(cfg, "low", value_column)
        altered = altered_difference(
            high, low, float(_require(cfg, "alpha")),
            delta_nonneg=bool(cfg.get("delta_nonneg", False)),
            result_nonneg=bool(cfg.get("result_nonneg", False)),
        )
        audit_key = cfg.get("audit_against", "high")
        audit_source = _load_series(cfg, audit_key, value_column)
    else:
        raise ConfigError(f"unknown method {method!r} (choose incremental or altered_difference)")

    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv(altered.values, out_dir / "altered.csv")
    audit = direction_audit(
        altered, audit_source,
        chunk_hours=int(cfg.get("chunk_hours", 24)),
        threshold_fraction=float(cfg.get("threshold_fraction", 0.05)),
    )
    _write_json(audit, out_dir / "audit.json")
    manifest = {
        "method": altered.method,
        "params": altered.params,
        "seed": altered.seed,
        "source_checksums": list(altered.source_checksums),
        "config": cfg,
    }
    _write_json(manifest, out_dir / "manifest.json")
    print(f"wrote altered series and audit to {out_dir}")
    return EXIT_OK


def cmd_analyze(cfg: dict[str, Any], threads: int) -> int:
    value_column = cfg.get("value_column", "value")
    ens = Ensemble.load(_require(cfg, "ensemble_dir"))
    original = _load_series(cfg, "original", value_column)
    out_dir = Path(_require(cfg, "output_dir"))
    autocorr_lag = int(cfg.get("autocorr_lag", 24))
    table = st.ensemble_summary_table(ens, original, autocorr_lag)
    st.write_table_csv(table, out_dir / "summary_table.csv")
    tcfg = cfg.get("threshold", {"kind": "proportional", "alpha": 0.05})
    threshold = st.Threshold(
        kind=tcfg.get("kind", "proportional"),
        e=float(tcfg.get("e", 0.0)),
        alpha=float(tcfg.get("alpha", 0.0)),
    )
    length = int(cfg.get("chunk_hours", 24))
    statistic = cfg.get("statistic", "underage_count")
    report = st.empirical_distribution(ens, original, statistic, length, threshold)
    st.histogram_csv(report, out_dir / "exceedance_histogram.csv")
    _write_json(
        {
            "statistic": statistic,
            "chunk_hours": length,
            "threshold": tcfg,
            "distribution": report.describe(),
            "values": report.values.tolist(),
        },
        out_dir / "exceedance.json",
    )
    print(f"wrote analysis to {out_dir}")
    return EXIT_OK


def cmd_vre(cfg: dict[str, Any], threads: int) -> int:
    value_column = cfg.get("value_column", "value")
    solar = _load_series(cfg, "solar", value_column)
    wind = _load_series(cfg, "wind", value_column)
    nuclear = _load_series(cfg, "nuclear", value_column)
    load = _load_series(cfg, "load", value_column)
    out_dir = Path(_require(cfg, "output_dir"))
    fraction = float(cfg.get("shortfall_fraction", 0.9))

    if "weights" in cfg:
        w = cfg["weights"]
        weights = VreWeights(float(_require(w, "solar")), float(_require(w, "wind")))
        vre = combine_vre(solar, wind, weights)
        result = compute_adequacy(vre, nuclear, load, fraction)
        _write_json({"weights": w, **result.as_dict()}, out_dir / "adequacy.json")

    if "sweep" in cfg:
        sw = cfg["sweep"]
        results = weight_sweep(
            solar, wind, nuclear, load,
            curtailment_cap=float(_require(sw, "curtailment_cap")),
            solar_weights=_require(sw, "solar_weights"),
            wind_weights=_require(sw, "wind_weights"),
            shortfall_fraction=fraction,
        )
        sweep_table_csv(results, out_dir / "sweep.csv")

    if "ensembles" in cfg:
        e = cfg["ensembles"]
        if "weights" not in cfg:
            raise ConfigError("ensemble adequacy requires fixed 'weights'")
        w = cfg["weights"]
        weights = VreWeights(float(w["solar"]), float(w["wind"]))
        results = ensemble_adequacy(
            Ensemble.load(_require(e, "solar_dir")),
            Ensemble.load(_require(e, "wind_dir")),
            nuclear, load, weights,
            pairing_seed=int(_require(e, "pairing_seed")),
            pairs=e.get("pairs"),
            shortfall_fraction=fraction,
        )
        hist = shortfall_histogram(results)
        _write_json(
            {
                "weights": w,
                "shortfall_histogram": {str(k): v for k, v in hist.items()},
                "supplied": [r.percent_supplied for r in results],
                "curtailed": [r.percent_curtailed for r in results],
            },
            out_dir / "ensemble_adequacy.json",
        )
        import csv

        out_dir.mkdir(parents=True, exist_ok=True)
        with (out_dir / "shortfall_histogram.csv").open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["shortfall_days", "count"])
            for k, v in hist.items():
                writer.writerow([k, v])

    if not any(k in cfg for k in ("weights", "sweep", "ensembles")):
        raise ConfigError("vre config needs at least one of: weights, sweep, ensembles")
    print(f"wrote case-study outputs to {out_dir}")
    return EXIT_OK


# --- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="synthseries")
    parser.add_argument("--threads", type=int, default=1, help="parallelism bound; output is identical for every value")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("generate", "generate a bootstrap ensemble from one observed series"),
        ("perturb", "directionally alter a series (incremental / altered-difference)"),
        ("analyze", "summary tables and exceedance distributions for an ensemble"),
        ("vre", "weighted-VRE adequacy case study"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("config", help="path to JSON config file")
        p.add_argument("--seed", type=int, default=None, help="override config seed")
        p.add_argument("--output-dir", default=None, help="override config output_dir")
        p.add_argument("--B", type=int, default=None, help="override ensemble size")
    return parser


_COMMANDS = {
    "generate": cmd_generate,
    "perturb": cmd_perturb,
    "analyze": cmd_analyze,
    "vre": cmd_vre,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _load_config(args.config)
        if args.seed is not None:
            cfg["seed"] = args.seed
        if args.output_dir is not None:
            cfg["output_dir"] = args.output_dir
        if args.B is not None:
            cfg["B"] = args.B
        if args.threads < 1:
            raise ConfigError(f"--threads must be >= 1, got {args.threads}")
        return _COMMANDS[args.command](cfg, args.threads)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except IOErrorSS as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValidationError, SynthSeriesError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
