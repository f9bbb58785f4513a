"""Command-line entry point: ``trafficmm <command> --config FILE [overrides]``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import torch

from .config import load_config
from .errors import ParseError, TrainingDiverged, ValidationError
from .experiment import (
    VARIANTS,
    encoded_from_header,
    evaluate,
    export_features,
    load_dataset,
    make_texts,
    model_from_checkpoint,
    run_ablation,
    run_experiment,
)
from .text import TranscriptLog, write_sidecar

log = logging.getLogger("trafficmm")


def _config(args):
    cfg = load_config(args.config)
    changes = {}
    for v in getattr(args, "drop", None) or []:
        changes[VARIANTS[v]] = True
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.out is not None:
        changes["out"] = str(Path(args.out).resolve())
    return cfg.replace(**changes).validate()


def _print_summary(record: dict) -> None:
    agg = record["aggregate"]
    print(f"variant {record['variant']} ({record['split_mode']}, {agg['runs']} runs)")
    for k in ("accuracy", "macro_precision", "macro_recall", "macro_f1"):
        print(f"  {k:16s} {agg[k]['mean']:.4f} +/- {agg[k]['std']:.4f}")


def cmd_train(args) -> int:
    _print_summary(run_experiment(_config(args)))
    return 0


def cmd_ablate(args) -> int:
    cfg = load_config(args.config)
    changes = {"seed": args.seed} if args.seed is not None else {}
    if args.out is not None:
        changes["out"] = str(Path(args.out).resolve())
    _print_summary(run_ablation(cfg.replace(**changes), args.drop))
    return 0


def cmd_evaluate(args) -> int:
    cfg = _config(args)
    model, header = model_from_checkpoint(args.checkpoint)
    report = evaluate(model, encoded_from_header(cfg, header, args.part))
    print(json.dumps(report.as_dict(), indent=1, sort_keys=True))
    return 0


def cmd_export(args) -> int:
    cfg = _config(args)
    model, header = model_from_checkpoint(args.checkpoint)
    n = export_features(model, encoded_from_header(cfg, header, args.part), args.features)
    print(f"wrote {n} rows to {args.features}")
    return 0


def cmd_make_text(args) -> int:
    cfg = _config(args)
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    data = load_dataset(cfg)
    transcript = TranscriptLog(out / "transcript.jsonl") if cfg.text_replay else None
    texts = make_texts(cfg, data, transcript)
    write_sidecar(texts, out / "texts.tsv")
    print(f"wrote {len(texts)} descriptions to {out / 'texts.tsv'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trafficmm", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, drop=True):
        sp.add_argument("--config", required=True, type=Path)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--out", type=Path)
        if drop:
            sp.add_argument("--drop", action="append", choices=sorted(VARIANTS),
                            help="mask a branch (repeatable, at most two)")

    sp = sub.add_parser("train", help="train and evaluate every repeat and fold")
    common(sp)
    sp.set_defaults(func=cmd_train)

    sp = sub.add_parser("ablate", help="run the protocol with one branch masked")
    common(sp, drop=False)
    sp.add_argument("--drop", required=True, choices=sorted(VARIANTS))
    sp.set_defaults(func=cmd_ablate)

    for name, func, help_ in (("evaluate", cmd_evaluate, "re-evaluate a checkpoint"),
                              ("export-features", cmd_export, "write per-instance features as CSV")):
        sp = sub.add_parser(name, help=help_)
        common(sp)
        sp.add_argument("--checkpoint", required=True, type=Path)
        sp.add_argument("--part", default="test", choices=("train", "test", "all"))
        if name == "export-features":
            sp.add_argument("--features", required=True, type=Path, help="output CSV path")
        sp.set_defaults(func=func)

    sp = sub.add_parser("make-text", help="write the description sidecar for a dataset")
    common(sp)
    sp.set_defaults(func=cmd_make_text)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    torch.use_deterministic_algorithms(True)
    try:
        return args.func(args)
    except (ValidationError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TrainingDiverged as exc:
        print(f"error: {exc} (state dump: {exc.dump_path})", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
