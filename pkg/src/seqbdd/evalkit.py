"""Ranking and classification metrics for extracted templates."""
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError, ParseError

_SLOT_MARK = re.compile(r"<\s*slot\s*>|\[[^\]\s]*\]|\bX\b|\bY\b", re.IGNORECASE)


def normalize_template(text):
    """Canonical form: single spaces, slot markers as one ``<slot>`` token."""
    text = _SLOT_MARK.sub(" <slot> ", text)
    tokens = []
    for tok in text.split():
        if tok == "<slot>" and tokens and tokens[-1] == "<slot>":
            continue
        tokens.append(tok)
    return " ".join(tokens)


def match_template(hypothesis, gold):
    return normalize_template(hypothesis) == normalize_template(gold)


@dataclass
class RankedCase:
    hypotheses: list
    gold: set = field(default_factory=set)

    def best_rank(self):
        """1-based rank of the first hypothesis matching any gold, else ``inf``."""
        golds = {normalize_template(g) for g in self.gold}
        for i, h in enumerate(self.hypotheses, 1):
            if normalize_template(h) in golds:
                return i
        return math.inf


def mrr(cases):
    cases = list(cases)
    if not cases:
        raise InputError("mrr needs at least one case")
    return sum(1.0 / c.best_rank() for c in cases) / len(cases)


def recall(cases):
    cases = list(cases)
    if not cases:
        raise InputError("recall needs at least one case")
    return sum(1 for c in cases if c.best_rank() != math.inf) / len(cases)


def prf(predictions, gold):
    predictions = [bool(p) for p in predictions]
    gold = [bool(g) for g in gold]
    if len(predictions) != len(gold):
        raise InputError(f"{len(predictions)} predictions for {len(gold)} gold labels")
    tp = sum(1 for p, g in zip(predictions, gold) if p and g)
    fp = sum(1 for p, g in zip(predictions, gold) if p and not g)
    fn = sum(1 for p, g in zip(predictions, gold) if not p and g)
    precision = tp / (tp + fp) if tp + fp else 0.0
    rec = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * rec / (precision + rec) if precision + rec else 0.0
    return precision, rec, f1


def has_template(templates, min_weight):
    """Classification rule: some template has a slot and enough weight."""
    return any(t.has_slot and t.weight >= min_weight for t in templates)


def parse_gold(text, path=None):
    """Blank-line separated blocks: case id, then up to five gold templates."""
    cases = {}
    for block in re.split(r"\n\s*\n", text.strip()):
        lines = [ln.strip() for ln in block.splitlines() if ln.strip()]
        if not lines:
            continue
        case_id, golds = lines[0], lines[1:]
        if case_id in cases:
            raise ParseError(f"duplicate case id {case_id!r}", path=path)
        cases[case_id] = golds
    if not cases:
        raise InputError(f"no cases in {path or 'gold input'}")
    return cases


def read_gold(path):
    path = Path(path)
    return parse_gold(path.read_text(encoding="utf-8"), path=str(path))


def parse_hypotheses(text):
    """Template TSV (rank, weight, template) or one template per line."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        cols = line.split("\t")
        out.append(cols[2] if len(cols) >= 3 else cols[-1])
    return out


def load_cases(hyp_dir, gold_path):
    """Pair ``<hyp_dir>/<case-id>.tsv`` files with gold blocks.

    A case without a hypothesis file gets an empty list (rank infinity).
    """
    hyp_dir = Path(hyp_dir)
    if not hyp_dir.is_dir():
        raise InputError(f"{hyp_dir} is not a directory")
    gold = read_gold(gold_path)
    cases = []
    for case_id, golds in gold.items():
        hyp = []
        for suffix in (".tsv", ".txt", ""):
            p = hyp_dir / f"{case_id}{suffix}"
            if p.is_file():
                hyp = parse_hypotheses(p.read_text(encoding="utf-8"))
                break
        cases.append(RankedCase(hyp, set(golds)))
    return cases


_TRUE = {"1", "true", "yes", "y", "t", "pos", "positive"}
_FALSE = {"0", "false", "no", "n", "f", "neg", "negative"}


def read_labels(path):
    """``case-id<TAB>label`` lines; label is 0/1, true/false or yes/no."""
    path = Path(path)
    labels = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        cols = line.split()
        if len(cols) != 2:
            raise ParseError("expected case-id and label", lineno, str(path))
        value = cols[1].lower()
        if value in _TRUE:
            labels[cols[0]] = True
        elif value in _FALSE:
            labels[cols[0]] = False
        else:
            raise ParseError(f"unknown label {cols[1]!r}", lineno, str(path))
    if not labels:
        raise InputError(f"no labels in {path}")
    return labels


def format_report(metrics):
    return "".join(f"{k}={_fmt(v)}\n" for k, v in metrics.items())


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)
