"""Synthetic tagged "tweet-bot" corpus with known planted templates.

Each template is a list of ``(word, tag)`` tokens where ``word`` is ``None``
for a slot; slots are filled from a per-slot pool of single tokens.
"""
import random

from .ingest import TaggedPhrase

COUNTIES = ["Aitkin", "Baltimore", "Berkeley", "Cheyenne", "Clay", "Fannin",
            "Harrison", "Ochiltree", "Tillman", "Marion", "Roberts", "Lamar"]
STATES = ["MN", "MD", "WV", "CO", "IL", "TX", "OK", "KS", "NE", "IA"]
TIMES = ["1:45", "2:00", "2:45", "5:00", "6:45", "7:30", "8:30", "8:45", "9:15", "10:00"]


def _tokens(spec):
    # "word/TAG" tokens; "_" as the word marks a slot
    out = []
    for tok in spec.split():
        word, _, tag = tok.rpartition("/")
        out.append((None if word == "_" else word, tag))
    return out


# three variants posted by one weather bot
TEMPLATES = [
    (
        _tokens("Tornado/NNP Warning/NNP for/IN _/NNP County/NNP in/IN _/NNP until/IN _/CD "
                "PM/NNP CDT/NNP (/-LRB- URL/NNP )/-RRB-"),
        [COUNTIES, STATES, TIMES],
    ),
    (
        _tokens("Tornado/NNP Warning/NNP for/IN _/NNP and/CC _/NNP Counties/NNPS in/IN _/NNP "
                "until/IN _/CD PM/NNP CDT/NNP (/-LRB- URL/NNP )/-RRB-"),
        [COUNTIES, COUNTIES, STATES, TIMES],
    ),
    (
        _tokens("Severe/JJ Thunderstorm/NNP Warning/NNP for/IN _/NNP County/NNP in/IN _/NNP "
                "until/IN _/CD PM/NNP CDT/NNP (/-LRB- URL/NNP )/-RRB-"),
        [COUNTIES, STATES, TIMES],
    ),
]


def planted_templates():
    """Rendered form of each planted template, slots as ``<slot>``."""
    return [" ".join("<slot>" if w is None else w for w, _ in tokens) for tokens, _ in TEMPLATES]


def tweetbot_corpus(n=240, seed=7):
    """``n`` tagged phrases drawn round-robin from :data:`TEMPLATES`."""
    rng = random.Random(seed)
    out = []
    for i in range(n):
        tokens, pools = TEMPLATES[i % len(TEMPLATES)]
        fill = iter(pools)
        phrase = []
        for word, tag in tokens:
            if word is None:
                word = rng.choice(next(fill))
            phrase.append((word, tag))
        out.append(TaggedPhrase(tuple(phrase)))
    rng.shuffle(out)
    return out
