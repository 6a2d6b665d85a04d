"""Command-line frontend.

Subcommands wire the library together without adding any computation of
their own: `score` and `features` run formulas over documents, `calibrate`
refits coefficients against a graded corpus, `evaluate` reports agreement
metrics, `rank` checks ordered groups, and `readtime` estimates reading
minutes.  Exit status is 0 on success, 1 for usage problems, 2 for data
problems (unreadable or malformed inputs).

Difficulty-model commands need the two lexicons, resolved from the
--aoa/--familiarity flags or from a directory named by the
READGAUGE_LEXICON_DIR environment variable holding aoa.csv/aoa.tsv and
familiarity.csv/familiarity.tsv.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
from pathlib import Path

from .calibration import fit_formula, fit_nerf, load_corpus
from .errors import FileUnreadable, MalformedRow, ReadgaugeError
from .evaluation import mae, pairwise_accuracy, pearson_r, r2_score, rank_accuracy
from .formulas import (
    ADJUSTED,
    CUSTOM,
    NERF,
    ORIGINAL,
    TRADITIONAL_FORMULAS,
    CoefficientSet,
    builtin_coefficients,
    score_stats,
)
from .lexicons import KIND_AOA, KIND_FAMILIARITY, load_lexicon
from .nerf import NerfCoefficients, extract_features, nerf_score
from .syntax import parse_bracketed
from .text_core import read_time, text_stats

ENV_LEXICON_DIR = "READGAUGE_LEXICON_DIR"
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_ALL_FORMULAS = (NERF,) + TRADITIONAL_FORMULAS
_NERF_FIELDS = ("w_aoa", "w_fam", "w_cw", "w_np", "w_th", "w_ttr", "bias")
_DEFAULT_WPM = "175,240,300"


class UsageError(Exception):
    """Bad flag combination or missing configuration."""


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="readgauge", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    io_flags = argparse.ArgumentParser(add_help=False)
    io_flags.add_argument(
        "--input", nargs="+", metavar="PATH", help="document file(s); '-' reads stdin"
    )
    io_flags.add_argument("--corpus", help="delimited corpus or corpus directory")

    format_flag = argparse.ArgumentParser(add_help=False)
    format_flag.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", help="output format"
    )

    lexicon_flags = argparse.ArgumentParser(add_help=False)
    lexicon_flags.add_argument("--aoa", help="age-of-acquisition lexicon file")
    lexicon_flags.add_argument("--familiarity", help="familiarity lexicon file")
    lexicon_flags.add_argument("--lex-word-col", default="word", help="lexicon word column")
    lexicon_flags.add_argument("--lex-value-col", default="value", help="lexicon value column")

    variant_flag = argparse.ArgumentParser(add_help=False)
    variant_flag.add_argument(
        "--variant", choices=(ORIGINAL, ADJUSTED), default=ADJUSTED,
        help="coefficient variant for the classic formulas",
    )

    coeffs_flag = argparse.ArgumentParser(add_help=False)
    coeffs_flag.add_argument("--coeffs", help="JSON coefficient file overriding built-ins")

    parses_flag = argparse.ArgumentParser(add_help=False)
    parses_flag.add_argument(
        "--parses",
        help="parse sidecar: one tree per sentence line, blank line between documents",
    )

    score = commands.add_parser(
        "score", parents=[io_flags, format_flag, lexicon_flags, variant_flag, coeffs_flag, parses_flag],
        help="score documents with one or all formulas",
    )
    score.add_argument(
        "--formula", choices=_ALL_FORMULAS + ("all",), default="all",
        help="formula to apply (default: all)",
    )

    features = commands.add_parser(
        "features", parents=[io_flags, format_flag, lexicon_flags, parses_flag],
        help="dump difficulty-model feature vectors",
    )

    calibrate = commands.add_parser(
        "calibrate", parents=[format_flag, lexicon_flags, coeffs_flag, parses_flag],
        help="refit coefficients against a graded corpus",
    )
    calibrate.add_argument("--corpus", required=True, help="graded corpus file or directory")
    calibrate.add_argument("--formula", choices=_ALL_FORMULAS, required=True)
    calibrate.add_argument("--output", help="write the fitted coefficient JSON here")

    evaluate = commands.add_parser(
        "evaluate", parents=[format_flag, lexicon_flags, variant_flag, coeffs_flag, parses_flag],
        help="score a graded corpus and report agreement metrics",
    )
    evaluate.add_argument("--corpus", required=True, help="graded corpus file or directory")
    evaluate.add_argument("--formula", choices=_ALL_FORMULAS, required=True)

    rank = commands.add_parser(
        "rank", parents=[format_flag, lexicon_flags, variant_flag, coeffs_flag],
        help="check ordered groups (hardest first) against formula scores",
    )
    rank.add_argument("--groups", required=True, help="delimited file with group,text columns")
    rank.add_argument("--formula", choices=_ALL_FORMULAS, required=True)

    readtime = commands.add_parser(
        "readtime", parents=[io_flags, format_flag], help="estimate reading minutes"
    )
    readtime.add_argument(
        "--wpm", default=_DEFAULT_WPM, metavar="N[,N...]",
        help=f"words-per-minute rates (default: {_DEFAULT_WPM})",
    )

    return parser


# --- input plumbing -----------------------------------------------------------

def _read_documents(args) -> list[tuple[str, str]]:
    docs = []
    if args.corpus:
        docs.extend((item.id, item.text) for item in load_corpus(args.corpus).items)
    for raw in args.input or ():
        if raw == "-":
            docs.append(("-", sys.stdin.read()))
            continue
        path = Path(raw)
        try:
            docs.append((path.stem, path.read_text(encoding="utf-8")))
        except (OSError, UnicodeDecodeError) as exc:
            raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    if not docs:
        raise UsageError("no documents: pass --input or --corpus")
    return docs


def _read_parse_blocks(path, document_count: int):
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    blocks, current = [], []
    for line in raw.splitlines():
        if line.strip():
            current.append(parse_bracketed(line))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if len(blocks) != document_count:
        raise MalformedRow(
            f"{path}: {len(blocks)} parse blocks for {document_count} documents"
        )
    return blocks


def _find_lexicon_file(root: Path, stem: str) -> Path:
    for suffix in (".csv", ".tsv"):
        candidate = root / (stem + suffix)
        if candidate.exists():
            return candidate
    raise UsageError(
        f"{ENV_LEXICON_DIR} directory {root} has no {stem}.csv or {stem}.tsv"
    )


def _load_lexicons(args):
    aoa_path, familiarity_path = args.aoa, args.familiarity
    if aoa_path is None or familiarity_path is None:
        root = os.environ.get(ENV_LEXICON_DIR)
        if not root:
            raise UsageError(
                "difficulty scoring needs lexicons: pass --aoa and --familiarity "
                f"or set {ENV_LEXICON_DIR}"
            )
        aoa_path = aoa_path or _find_lexicon_file(Path(root), "aoa")
        familiarity_path = familiarity_path or _find_lexicon_file(Path(root), "familiarity")
    aoa = load_lexicon(aoa_path, KIND_AOA, args.lex_word_col, args.lex_value_col)
    familiarity = load_lexicon(
        familiarity_path, KIND_FAMILIARITY, args.lex_word_col, args.lex_value_col
    )
    return aoa, familiarity


def _load_coefficient_file(path):
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedRow(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "formula" not in payload:
        raise MalformedRow(f"{path}: expected an object with a 'formula' key")
    formula = payload["formula"]
    try:
        if formula == NERF:
            weights = payload["weights"]
            return NerfCoefficients(**{k: float(weights[k]) for k in _NERF_FIELDS})
        return CoefficientSet(
            formula,
            payload.get("variant", CUSTOM),
            float(payload["a"]),
            float(payload["b"]),
            float(payload["c"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedRow(f"{path}: bad coefficient payload: {exc}") from exc


def _custom_coefficients(args, formula: str):
    """The --coeffs override for one selected formula, or None."""
    if not getattr(args, "coeffs", None):
        return None
    loaded = _load_coefficient_file(args.coeffs)
    loaded_formula = NERF if isinstance(loaded, NerfCoefficients) else loaded.formula
    if loaded_formula != formula:
        raise UsageError(
            f"--coeffs file is for {loaded_formula!r} but --formula is {formula!r}"
        )
    return loaded


# --- output plumbing ----------------------------------------------------------

def _cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_records(records: list[dict], fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(records, stream, indent=2)
        stream.write("\n")
    elif fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(records[0].keys())
        for record in records:
            writer.writerow(_cell(v) for v in record.values())
    else:
        for record in records:
            stream.write(" ".join(f"{k}={_cell(v)}" for k, v in record.items()) + "\n")


def _emit_object(payload: dict, fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(payload, stream, indent=2)
        stream.write("\n")
    elif fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(payload.keys())
        writer.writerow(_cell(v) for v in payload.values())
    else:
        for key, value in payload.items():
            stream.write(f"{key}={_cell(value)}\n")


# --- subcommands --------------------------------------------------------------

def _selected_formulas(choice: str) -> tuple[str, ...]:
    return _ALL_FORMULAS if choice == "all" else (choice,)


def _cmd_score(args, stream) -> int:
    formulas = _selected_formulas(args.formula)
    if args.coeffs and args.formula == "all":
        raise UsageError("--coeffs overrides one formula; pick one with --formula")
    docs = _read_documents(args)
    lexicons = _load_lexicons(args) if NERF in formulas else None
    blocks = _read_parse_blocks(args.parses, len(docs)) if args.parses else None

    records = []
    for index, (doc_id, text) in enumerate(docs):
        stats = None
        for formula in formulas:
            custom = _custom_coefficients(args, formula)
            if formula == NERF:
                feats = extract_features(
                    text, *lexicons, parses=blocks[index] if blocks else None
                )
                result = nerf_score(feats, custom)
                approximate = feats.approximate_syntax
            else:
                if stats is None:
                    stats = text_stats(text)
                coeffs = custom or builtin_coefficients(formula, args.variant)
                result = score_stats(stats, coeffs)
                approximate = False
            records.append(
                {
                    "id": doc_id,
                    "formula": result.formula,
                    "variant": result.variant,
                    "score": result.value,
                    "rounded": result.rounded,
                    "approximate_syntax": approximate,
                }
            )
    _emit_records(records, args.format, stream)
    return EXIT_OK


def _cmd_features(args, stream) -> int:
    docs = _read_documents(args)
    aoa, familiarity = _load_lexicons(args)
    blocks = _read_parse_blocks(args.parses, len(docs)) if args.parses else None
    records = []
    for index, (doc_id, text) in enumerate(docs):
        feats = extract_features(
            text, aoa, familiarity, parses=blocks[index] if blocks else None
        )
        records.append({"id": doc_id, **dataclasses.asdict(feats)})
    _emit_records(records, args.format, stream)
    return EXIT_OK


def _cmd_calibrate(args, stream) -> int:
    corpus = load_corpus(args.corpus)
    if args.formula == NERF:
        aoa, familiarity = _load_lexicons(args)
        blocks = _read_parse_blocks(args.parses, len(corpus)) if args.parses else None
        features = [
            extract_features(
                item.text, aoa, familiarity, parses=blocks[i] if blocks else None
            )
            for i, item in enumerate(corpus.items)
        ]
        result = fit_nerf(features, corpus.labels())
        fitted = {
            "formula": NERF,
            "weights": {k: getattr(result.coefficients, k) for k in _NERF_FIELDS},
        }
    else:
        init = _custom_coefficients(args, args.formula)
        result = fit_formula(corpus, args.formula, init=init)
        c = result.coefficients
        fitted = {"formula": c.formula, "variant": c.variant, "a": c.a, "b": c.b, "c": c.c}

    if args.output:
        Path(args.output).write_text(json.dumps(fitted, indent=2) + "\n", encoding="utf-8")
    summary = {
        **fitted,
        "rss": result.rss,
        "iterations": result.iterations,
        "converged": result.converged,
        "rank_deficient": result.rank_deficient,
    }
    _emit_object(summary, args.format, stream)
    return EXIT_OK


def _score_texts(args, texts, parse_blocks=None) -> list[float]:
    """Scores for one selected formula across many texts."""
    custom = _custom_coefficients(args, args.formula)
    if args.formula == NERF:
        aoa, familiarity = _load_lexicons(args)
        values = []
        for index, text in enumerate(texts):
            feats = extract_features(
                text, aoa, familiarity,
                parses=parse_blocks[index] if parse_blocks else None,
            )
            values.append(nerf_score(feats, custom).value)
        return values
    coeffs = custom or builtin_coefficients(args.formula, args.variant)
    return [score_stats(text_stats(text), coeffs).value for text in texts]


def _cmd_evaluate(args, stream) -> int:
    corpus = load_corpus(args.corpus)
    blocks = _read_parse_blocks(args.parses, len(corpus)) if args.parses else None
    predicted = _score_texts(args, corpus.texts(), blocks)
    labels = corpus.labels()
    payload = {
        "formula": args.formula,
        "variant": args.variant if args.formula != NERF else "default",
        "n": len(corpus),
        "mae": mae(predicted, labels),
        "r2": r2_score(predicted, labels),
        "pearson": pearson_r(predicted, labels),
    }
    _emit_object(payload, args.format, stream)
    return EXIT_OK


def _load_groups(path) -> list[list[str]]:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            sample = fh.readline()
            fh.seek(0)
            delimiter = "\t" if "\t" in sample else ","
            rows = list(csv.DictReader(fh, delimiter=delimiter))
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    groups: dict[str, list[str]] = {}
    for row_number, row in enumerate(rows, start=2):
        group = (row.get("group") or "").strip()
        text = row.get("text")
        if not group or text is None:
            raise MalformedRow(
                f"{path}: row {row_number} needs group and text", row_number
            )
        groups.setdefault(group, []).append(text)
    if not groups:
        raise MalformedRow(f"{path}: no group rows")
    return list(groups.values())


def _cmd_rank(args, stream) -> int:
    groups = _load_groups(args.groups)
    score_groups = [_score_texts(args, texts) for texts in groups]
    if all(len(scores) == 2 for scores in score_groups):
        metric = "pairwise_accuracy"
        value = pairwise_accuracy([(s[0], s[1]) for s in score_groups])
    else:
        metric = "rank_accuracy"
        value = rank_accuracy(score_groups)
    payload = {
        "formula": args.formula,
        "metric": metric,
        "groups": len(score_groups),
        "value": value,
    }
    _emit_object(payload, args.format, stream)
    return EXIT_OK


def _parse_rates(raw: str) -> list[float]:
    rates = []
    for part in raw.split(","):
        try:
            rates.append(float(part))
        except ValueError:
            raise UsageError(f"--wpm: {part.strip()!r} is not a number") from None
    if not rates or any(rate <= 0 for rate in rates):
        raise UsageError("--wpm rates must be positive")
    return rates


def _rate_label(rate: float) -> str:
    return str(int(rate)) if rate == int(rate) else repr(rate)


def _cmd_readtime(args, stream) -> int:
    docs = _read_documents(args)
    rates = _parse_rates(args.wpm)
    records = []
    for doc_id, text in docs:
        stats = text_stats(text)
        minutes = {_rate_label(rate): read_time(stats, rate) for rate in rates}
        if args.format == "csv":
            for label, value in minutes.items():
                records.append(
                    {"id": doc_id, "words": stats.words, "wpm": label, "minutes": value}
                )
        else:
            records.append({"id": doc_id, "words": stats.words, "minutes": minutes})
    if args.format == "text":
        for record in records:
            parts = ", ".join(f"{v!r} min at {k} wpm" for k, v in record["minutes"].items())
            stream.write(f"{record['id']}: {record['words']} words; {parts}\n")
    else:
        _emit_records(records, args.format, stream)
    return EXIT_OK


_COMMANDS = {
    "score": _cmd_score,
    "features": _cmd_features,
    "calibrate": _cmd_calibrate,
    "evaluate": _cmd_evaluate,
    "rank": _cmd_rank,
    "readtime": _cmd_readtime,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"readgauge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReadgaugeError as exc:
        print(f"readgauge: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
