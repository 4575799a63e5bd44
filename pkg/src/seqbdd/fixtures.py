"""Bundled example inputs (letter sets and tagged corpora)."""
from importlib import resources

from .ingest import TaggedPhrase, parse_tagged

CHAR_FIXTURES = ("fig2", "fig6")
TAGGED_FIXTURES = ("fig3", "fig8", "tweetbot")


def path(name):
    """Filesystem path of a bundled fixture, e.g. ``path("fig8")``."""
    return resources.files("seqbdd") / "data" / f"{name}.txt"


def load(name):
    """Fixture as a list of :class:`TaggedPhrase`."""
    text = path(name).read_text(encoding="utf-8")
    if name in CHAR_FIXTURES:
        return [TaggedPhrase.from_chars(line.strip()) for line in text.splitlines() if line.strip()]
    return parse_tagged(text, path=name)
