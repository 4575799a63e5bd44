"""Command-line interface: ``seqbdd {build,extract,compare,eval-mrr,eval-prf}``."""
import argparse
import logging
import sys
from pathlib import Path

from . import evalkit
from .baselines import CSV_HEADER, compare_sizes
from .config import RunConfig
from .errors import SeqBDDError
from .extract import ExtractConfig, extract, format_tsv
from .ingest import read_chars, read_tagged, search_phrases
from .relaxed import construct_relaxed
from .store import Mode, Store

log = logging.getLogger("seqbdd")


def _theta(value):
    try:
        x = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {value!r}")
    if not 0.0 < x <= 1.0:
        raise argparse.ArgumentTypeError(f"theta must lie in (0, 1], got {value}")
    return x


def _positive(value):
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return n


def _gap(value):
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return n


def _input_args(p):
    p.add_argument("--input", "-i", required=True, help="tagged corpus (word/TAG or TSV)")
    p.add_argument("--chars", action="store_true",
                   help="one plain string per line; each character is symbol and word")


def _search_args(p):
    p.add_argument("--anchor", action="append", default=[], metavar="WORD",
                   help="keep only sentences containing the anchor words in order, "
                        "starting at the first one (repeatable)")
    p.add_argument("--max-gap", type=_gap, default=5,
                   help="most words allowed between consecutive anchors (default 5)")


def build_parser():
    parser = argparse.ArgumentParser(prog="seqbdd", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--backend", choices=("cython", "python"), default=None,
                        help="graph kernel backend (default: compiled if available)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a graph and print its size")
    _input_args(p)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.ORIGINAL.value)
    p.add_argument("--no-sort", action="store_true",
                   help="insert phrases one by one in file order instead of reducing the sorted tree")
    p.add_argument("--dot", help="write a DOT rendering of the graph to this file")
    _search_args(p)

    p = sub.add_parser("extract", help="emit ranked templates as TSV")
    _input_args(p)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.RELAXED.value)
    p.add_argument("--no-sort", action="store_true")
    p.add_argument("--theta", type=_theta, default=None,
                   help="slot threshold (default 1.0 original, 0.5 relaxed)")
    p.add_argument("--min-edge-freq", type=_positive, default=2)
    p.add_argument("--top-k", type=_positive, default=20)
    p.add_argument("--max-paths", type=_positive, default=100_000)
    p.add_argument("--require-slot", action="store_true")
    _search_args(p)

    p = sub.add_parser("compare", help="trie / minimal DFA / SeqBDD sizes as CSV")
    _input_args(p)
    p.add_argument("--id", default=None, help="input id for the CSV row (default: file stem)")
    p.add_argument("--header", action="store_true")

    p = sub.add_parser("eval-mrr", help="MRR and recall of hypothesis lists against gold")
    p.add_argument("--hyp", required=True, help="directory of <case-id>.tsv hypothesis files")
    p.add_argument("--gold", required=True)

    p = sub.add_parser("eval-prf", help="precision / recall / F1 of has-template labels")
    p.add_argument("--pred", required=True)
    p.add_argument("--gold", required=True)
    return parser


def _read(args):
    path = Path(args.input)
    if not path.is_file():
        raise SeqBDDError(f"no such file: {path}")
    return read_chars(path) if args.chars else read_tagged(path)


def _run_config(args):
    extract_config = None
    if args.command == "extract":
        extract_config = ExtractConfig.for_mode(
            args.mode,
            theta=args.theta,
            min_edge_freq=args.min_edge_freq,
            top_k=args.top_k,
            max_paths=args.max_paths,
            require_slot=args.require_slot,
        )
    return RunConfig(args.mode, extract_config, not args.no_sort, args.anchor, args.max_gap)


def _phrases(args, cfg):
    phrases = _read(args)
    if cfg.anchors:
        phrases = search_phrases(phrases, cfg.anchors, cfg.max_gap)
        log.info("%d phrases match anchors %s", len(phrases), " ".join(cfg.anchors))
        if not phrases:
            raise SeqBDDError("no sentence matches the anchor words")
    return phrases


def _build(cfg, phrases, backend):
    store = Store(cfg.mode, backend=backend)
    tags = [p.tags for p in phrases]
    if store.mode is Mode.RELAXED:
        root = construct_relaxed(store, tags, sort_inputs=cfg.sort_inputs)
    else:
        root = store.construct(tags, incremental=not cfg.sort_inputs)
    log.info("built %s graph: %d arena nodes, %d merges, %d rejected shares",
             store.mode.value, len(store), store.merges, store.rejected_shares)
    return store, root


def cmd_build(args, out):
    cfg = _run_config(args)
    store, root = _build(cfg, _phrases(args, cfg), args.backend)
    out.write(f"nodes={store.node_count(root)}\n")
    out.write(f"sequences={store.count_sequences(root)}\n")
    if args.dot:
        Path(args.dot).write_text(store.to_dot(root), encoding="utf-8")


def cmd_extract(args, out):
    cfg = _run_config(args)
    phrases = _phrases(args, cfg)
    store, root = _build(cfg, phrases, args.backend)
    out.write(format_tsv(extract(store, root, phrases, cfg.extract)))


def cmd_compare(args, out):
    phrases = _read(args)
    report = compare_sizes([p.tags for p in phrases], backend=args.backend)
    if args.header:
        out.write(CSV_HEADER + "\n")
    out.write(report.csv_row(args.id or Path(args.input).stem) + "\n")


def cmd_eval_mrr(args, out):
    cases = evalkit.load_cases(args.hyp, args.gold)
    out.write(evalkit.format_report({
        "cases": len(cases),
        "mrr": evalkit.mrr(cases),
        "recall": evalkit.recall(cases),
    }))


def cmd_eval_prf(args, out):
    pred = evalkit.read_labels(args.pred)
    gold = evalkit.read_labels(args.gold)
    missing = sorted(set(gold) - set(pred))
    if missing:
        raise SeqBDDError(f"no prediction for cases: {', '.join(missing[:5])}")
    ids = sorted(gold)
    p, r, f1 = evalkit.prf([pred[i] for i in ids], [gold[i] for i in ids])
    out.write(evalkit.format_report({"cases": len(ids), "p": p, "r": r, "f1": f1}))


COMMANDS = {
    "build": cmd_build,
    "extract": cmd_extract,
    "compare": cmd_compare,
    "eval-mrr": cmd_eval_mrr,
    "eval-prf": cmd_eval_prf,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        COMMANDS[args.command](args, out)
    except (SeqBDDError, OSError) as exc:
        print(f"seqbdd: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
