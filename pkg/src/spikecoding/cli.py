"""Command-line entry point: ``spikecoding <command> ...``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import csvio
from .bench import BenchmarkReport, Cell, mean_rows, ordered_methods, run_benchmark
from .config import RunConfig, load_config, load_params_file, parse_param_assignments, split_list
from .converters import METHOD_LABELS, METHOD_ORDER, get_method
from .errors import InvalidParams, ParseError, SpikeCodingError
from .generators import KINDS, GeneratorSpec, generate
from .optimizer import default_space, optimize
from .signal import NormalizationRecord, SpikeTrain, running_mse

META_SUFFIX = ".meta"


def feature_index(method: str, signal_position: int) -> int:
    """1=LIF, 2=SF, 3=PWM, 4=BSA for the first signal, then +4 per signal."""
    return 4 * signal_position + METHOD_ORDER.index(method) + 1


def _config(args) -> RunConfig:
    cfg = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    return cfg.override(
        seed=getattr(args, "seed", None),
        trials=getattr(args, "trials", None),
        repeats=getattr(args, "repeats", None),
        out_dir=getattr(args, "out_dir", None),
        methods=getattr(args, "methods", None),
        signals=getattr(args, "signals", None),
        length=getattr(args, "length", None),
        periods=getattr(args, "periods", None),
        noise_std=getattr(args, "noise_std", None),
        trend_slope=getattr(args, "trend_slope", None),
    )


def _specs(cfg: RunConfig, kinds) -> list[GeneratorSpec]:
    return [GeneratorSpec(kind, seed=cfg.seed, **cfg.generator) for kind in kinds]


def _resolve_params(args) -> tuple[str, object]:
    if args.params_file:
        method, values = load_params_file(args.params_file, args.method)
        if args.param:
            values.update(parse_param_assignments(method, args.param))
    else:
        if not args.method:
            raise InvalidParams("--method is required without --params-file")
        method = get_method(args.method).name
        values = parse_param_assignments(method, args.param or [])
    return method, get_method(method).make_params(values)


# commands ------------------------------------------------------------------


def cmd_generate(args) -> int:
    cfg = _config(args)
    kinds = KINDS if args.kind == "all" else split_list(args.kind)
    out = Path(cfg.out_dir)
    for spec in _specs(cfg, kinds):
        path = out / f"signal_{spec.kind}.csv"
        csvio.write_signal_csv(path, generate(spec))
        print(path)
    return 0


def cmd_encode(args) -> int:
    method, params = _resolve_params(args)
    signal = csvio.read_signal_csv(args.input)
    spec = get_method(method)
    prepared, record = spec.prepare(signal)
    train = spec.encode_prepared(prepared, params)
    csvio.write_spike_csv(args.output, train.spikes)
    csvio.write_keyvalue(
        str(args.output) + META_SUFFIX,
        [("method", method), ("polarity", train.polarity), ("record", record.kind),
         ("offset", record.offset), ("scale", record.scale)],
    )
    print(args.output)
    return 0


def _read_meta(path) -> tuple[str | None, str | None, NormalizationRecord]:
    meta = {k: v for _, k, v in csvio.read_keyvalue(path)}
    try:
        record = NormalizationRecord(meta.get("record", "identity"), float(meta.get("offset", 0.0)),
                                     float(meta.get("scale", 1.0)))
    except ValueError as exc:
        raise ParseError(str(exc), path=str(path)) from None
    return meta.get("method"), meta.get("polarity"), record


def cmd_decode(args) -> int:
    method, params = _resolve_params(args)
    spikes = csvio.read_spike_csv(args.input)
    meta_path = Path(args.meta) if args.meta else Path(str(args.input) + META_SUFFIX)
    record = NormalizationRecord.identity()
    if meta_path.exists():
        meta_method, _, record = _read_meta(meta_path)
        if meta_method and get_method(meta_method).name != method:
            raise InvalidParams(f"spikes were encoded with {meta_method}, not {method}")
    elif args.meta:
        raise FileNotFoundError(args.meta)
    polarity = "unipolar" if method == "bsa" else "bipolar"
    spec = get_method(method)
    recon = spec.decode_prepared(SpikeTrain(spikes, polarity), params) * record.scale + record.offset
    csvio.write_signal_csv(args.output, recon)
    print(args.output)
    return 0


def cmd_optimize(args) -> int:
    cfg = _config(args)
    method = get_method(args.method).name
    signal = csvio.read_signal_csv(args.input)
    space = default_space(method, signal)
    space.update(cfg.spaces.get(method, {}))
    result = optimize(method, signal, space=space, n_trials=cfg.trials, seed=cfg.seed)
    out = Path(cfg.out_dir)
    names = list(space)
    csvio.write_csv(
        out / "trials.csv",
        ["trial", "mse", *names],
        ([tr.index + 1, tr.mse, *(tr.values[n] for n in names)] for tr in result.trials),
    )
    csvio.write_keyvalue(out / "best_params.txt", csvio.params_items(method, result.best_params))
    print(f"best mse {csvio.format_float(result.best_mse)} at trial {result.best_index + 1}: {result.best_params}")
    return 0


def _summary_tables(report: BenchmarkReport, out: Path) -> None:
    methods = ordered_methods(report.methods)
    header = ["signal", *methods]

    def table(name, getter):
        rows = []
        for sig in report.signals:
            rows.append([sig, *(getter(report.cell(m, sig)) for m in methods)])
        csvio.write_csv(out / name, header, rows)

    table("reconstruction_error.csv", lambda c: c.mse)
    table("sparsity.csv", lambda c: c.sparsity_pct)
    table("timing.csv", lambda c: c.encode_time * 1e3)
    means = mean_rows(report)
    csvio.write_csv(
        out / "means.csv",
        ["method", "mean_mse", "mean_sparsity_pct"],
        ([m, means[m]["mse"], means[m]["sparsity_pct"]] for m in methods),
    )
    csvio.write_csv(
        out / "params.csv",
        ["method", "signal", "params"],
        (
            [c.method, c.signal,
             ";".join(f"{k}={csvio.format_value(v)}" for k, v in csvio.params_items(c.method, c.best_params)[1:])
             if c.best_params is not None else ""]
            for c in report.cells
        ),
    )
    csvio.write_keyvalue(out / "environment.txt", report.environment.items())


def cmd_bench(args) -> int:
    cfg = _config(args)
    out = Path(cfg.out_dir)
    kinds = cfg.signals
    for kind in kinds:
        if kind not in KINDS:
            raise InvalidParams(f"unknown signal kind {kind!r}")
    methods = ordered_methods(cfg.methods)
    specs = _specs(cfg, kinds)
    csvio.write_csv(
        out / "manifest.csv",
        ["feature", "method", "signal"],
        sorted(
            ([feature_index(m, i), m, s.kind] for i, s in enumerate(specs) for m in methods),
            key=lambda row: row[0],
        ),
    )

    def flush(cell: Cell) -> None:
        if cell.failed:
            print(f"FAILED {cell.method} x {cell.signal}: {cell.error}", file=sys.stderr)
            return
        k = feature_index(cell.method, kinds.index(cell.signal))
        csvio.write_feature_csv(
            out / f"reconstruction_feature_{k}.csv",
            cell.original,
            cell.reconstruction,
            running_mse(cell.original, cell.reconstruction),
        )
        print(f"{METHOD_LABELS[cell.method]:>3} x {cell.signal:<11} mse={csvio.format_float(cell.mse)} "
              f"sparsity={cell.sparsity_pct:.2f}% encode={cell.encode_time * 1e3:.3f} ms")

    report = run_benchmark(methods, specs, n_trials=cfg.trials, seed=cfg.seed, repeats=cfg.repeats,
                           spaces=cfg.spaces, on_cell=flush)
    _summary_tables(report, out)
    failed = report.failed_cells
    if failed:
        first = failed[0]
        print(f"first failing cell: {first.method} x {first.signal}: {first.error}", file=sys.stderr)
        return 1
    return 0


def _print_table(title: str, header, rows, mean_label: str | None) -> None:
    print(title)
    widths = [14] + [max(len(h), 11) for h in header[1:]]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    values = []
    for row in rows:
        nums = [float(c) for c in row[1:]]
        values.append(nums)
        print("  ".join([row[0].ljust(widths[0])] + [f"{v:.6g}".ljust(w) for v, w in zip(nums, widths[1:])]))
    if mean_label and values:
        means = np.nanmean(np.array(values), axis=0)
        print("  ".join([mean_label.ljust(widths[0])] + [f"{m:.6g}".ljust(w) for m, w in zip(means, widths[1:])]))
    print()


def cmd_report(args) -> int:
    out = Path(args.out_dir or "results")
    for name, title, mean_label in (
        ("reconstruction_error.csv", "Reconstruction error (MSE)", "Mean Error"),
        ("sparsity.csv", "Spike sparsity (%)", "Mean Sparsity"),
        ("timing.csv", "Median encode time (ms)", None),
    ):
        header, rows = csvio.read_csv(out / name)
        _print_table(title, header, rows, mean_label)
    env = out / "environment.txt"
    if env.exists():
        for _, k, v in csvio.read_keyvalue(env):
            print(f"{k}: {v}")
    return 0


# parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int)
    common.add_argument("--out-dir", dest="out_dir")
    common.add_argument("--config")
    common.add_argument("--trials", type=int)
    common.add_argument("--repeats", type=int)

    generator = argparse.ArgumentParser(add_help=False)
    generator.add_argument("--length", type=int)
    generator.add_argument("--periods", type=int)
    generator.add_argument("--noise-std", dest="noise_std", type=float)
    generator.add_argument("--trend-slope", dest="trend_slope", type=float)

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--method", choices=sorted(METHOD_ORDER))
    params.add_argument("--param", action="append", metavar="NAME=VALUE")
    params.add_argument("--params-file")

    parser = argparse.ArgumentParser(prog="spikecoding", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common, generator], help="write signal_<kind>.csv files")
    p.add_argument("--kind", default="all", help="signal kind, comma list, or 'all'")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("encode", parents=[common, params], help="encode a step,amplitude CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common, params], help="decode a step,spike CSV")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--meta", help="normalization sidecar (default: <input>.meta)")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("optimize", parents=[common], help="random-search parameters for one method")
    p.add_argument("--method", required=True, choices=sorted(METHOD_ORDER))
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("bench", parents=[common, generator], help="run the method x signal grid")
    p.add_argument("--methods")
    p.add_argument("--signals")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("report", parents=[common], help="print the summary tables of a bench run")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpikeCodingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
