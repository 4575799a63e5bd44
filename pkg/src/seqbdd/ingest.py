"""Corpus readers, search-phrase extraction and tweet cleaning."""
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError, ParseError


@dataclass(frozen=True)
class TaggedPhrase:
    tokens: tuple  # of (word, tag)

    def __post_init__(self):
        if not self.tokens:
            raise InputError("a tagged phrase needs at least one token")
        for word, tag in self.tokens:
            if not tag:
                raise InputError(f"token {word!r} has an empty tag")

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self):
        return len(self.tokens)

    @property
    def words(self):
        return [w for w, _ in self.tokens]

    @property
    def tags(self):
        return [t for _, t in self.tokens]

    @classmethod
    def from_chars(cls, text):
        """Each character is both symbol and word."""
        return cls(tuple((c, c) for c in text))

    def to_line(self):
        return " ".join(f"{w}/{t}" for w, t in self.tokens)


def parse_tagged_line(line, lineno=None, path=None):
    tokens = []
    for tok in line.split():
        word, sep, tag = tok.rpartition("/")
        if not sep or not word or not tag:
            raise ParseError(f"token {tok!r} is not of the form word/TAG", lineno, path)
        tokens.append((word, tag))
    return TaggedPhrase(tuple(tokens))


def parse_tagged(text, path=None):
    """Parse slash-format (``word/TAG`` per token) or two-column TSV text.

    TSV is chosen when the text contains a tab; phrases are then separated
    by blank lines.
    """
    phrases = []
    if "\t" in text:
        current = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                if current:
                    phrases.append(TaggedPhrase(tuple(current)))
                    current = []
                continue
            cols = line.split("\t")
            if len(cols) < 2 or not cols[0] or not cols[1].strip():
                raise ParseError("expected word<TAB>tag", lineno, path)
            current.append((cols[0], cols[1].strip()))
        if current:
            phrases.append(TaggedPhrase(tuple(current)))
    else:
        for lineno, line in enumerate(text.splitlines(), 1):
            if line.strip():
                phrases.append(parse_tagged_line(line, lineno, path))
    if not phrases:
        raise InputError(f"no phrases in {path or 'input'}")
    return phrases


def read_tagged(path):
    path = Path(path)
    return parse_tagged(path.read_text(encoding="utf-8"), path=str(path))


def read_chars(path):
    """One phrase per line, each character its own symbol and word."""
    path = Path(path)
    phrases = [
        TaggedPhrase.from_chars(line.strip())
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip()
    ]
    if not phrases:
        raise InputError(f"no phrases in {path}")
    return phrases


def write_tagged(phrases, path=None):
    text = "".join(p.to_line() + "\n" for p in phrases)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def _match_from(words, start, anchors, max_gap):
    pos = start
    for anchor in anchors[1:]:
        limit = min(len(words), pos + max_gap + 2)
        for j in range(pos + 1, limit):
            if words[j] == anchor:
                pos = j
                break
        else:
            return False
    return True


def search_phrases(corpus, anchors, max_gap=5):
    """Suffixes of sentences that contain ``anchors`` in order.

    Consecutive anchors may be separated by at most ``max_gap`` words. The
    first anchor occurrence that admits a full match starts the phrase; one
    phrase per sentence.
    """
    anchors = list(anchors)
    if not anchors:
        raise InputError("at least one anchor word is required")
    if max_gap < 0:
        raise InputError("max_gap must be >= 0")
    out = []
    for sent in corpus:
        words = sent.words
        for i, w in enumerate(words):
            if w == anchors[0] and _match_from(words, i, anchors, max_gap):
                out.append(TaggedPhrase(sent.tokens[i:]))
                break
    return out


_URL = re.compile(r"https?://\S+")


def clean_tweets(lines):
    """Drop replies and retweets; replace URLs by the token ``URL``."""
    out = []
    for line in lines:
        line = line.rstrip("\n")
        if line.startswith("RT ") or line.startswith("@"):
            continue
        line = _URL.sub("URL", line).strip()
        if line:
            out.append(line)
    return out
