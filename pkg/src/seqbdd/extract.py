"""Template extraction from a built SeqBDD.

flatten -> weight_edges -> prune -> enumerate_paths -> label_slots ->
merge_templates, wrapped by :func:`extract`.
"""
from collections import Counter
from dataclasses import dataclass, field

from .errors import CapacityError, InputError, TracingError
from .lexicon import attach_words
from .store import ONE, Mode

SLOT_TOKEN = "<slot>"


class _Slot:
    __slots__ = ()

    def __repr__(self):
        return "SLOT"

    def __reduce__(self):
        return "SLOT"


SLOT = _Slot()


@dataclass
class FlatDag:
    """The graph with 0-edges removed.

    ``succ[u]`` lists the nodes that may follow ``u``; ``edges``, ``roots`` and
    ``accepts`` hold phrase-traversal counts (all zero straight after
    :func:`flatten`). ``accepting`` is the set of nodes where a phrase may end.
    """

    symbols: dict = field(default_factory=dict)
    succ: dict = field(default_factory=dict)
    edges: dict = field(default_factory=dict)
    roots: dict = field(default_factory=dict)
    accepts: dict = field(default_factory=dict)
    accepting: set = field(default_factory=set)

    @property
    def nodes(self):
        return set(self.symbols)

    def copy(self):
        return FlatDag(
            dict(self.symbols),
            {u: list(vs) for u, vs in self.succ.items()},
            dict(self.edges),
            dict(self.roots),
            dict(self.accepts),
            set(self.accepting),
        )

    def _step_table(self):
        table = {None: {self.symbols[r]: r for r in self.roots}}
        for u, vs in self.succ.items():
            table[u] = {self.symbols[v]: v for v in vs}
        return table


@dataclass(frozen=True)
class PathCandidate:
    nodes: tuple
    weight: int


@dataclass(frozen=True)
class Template:
    elements: tuple
    weight: int

    @property
    def has_slot(self):
        return any(e is SLOT for e in self.elements)

    def render(self):
        return " ".join(SLOT_TOKEN if e is SLOT else e for e in self.elements)

    def __str__(self):
        return self.render()


@dataclass
class ExtractConfig:
    theta: float = 0.5
    min_edge_freq: int = 2
    top_k: int = 20
    max_paths: int = 100_000
    require_slot: bool = False

    def __post_init__(self):
        if not 0.0 < self.theta <= 1.0:
            raise InputError(f"theta must lie in (0, 1], got {self.theta}")
        if self.top_k < 1:
            raise InputError(f"top_k must be >= 1, got {self.top_k}")
        if self.min_edge_freq < 1:
            raise InputError(f"min_edge_freq must be >= 1, got {self.min_edge_freq}")
        if self.max_paths < 1:
            raise InputError(f"max_paths must be >= 1, got {self.max_paths}")

    @classmethod
    def for_mode(cls, mode, **overrides):
        """Defaults per construction mode: theta 1.0 original, 0.5 relaxed."""
        if overrides.get("theta") is None:
            overrides["theta"] = 1.0 if Mode(mode) is Mode.ORIGINAL else 0.5
        return cls(**{k: v for k, v in overrides.items() if v is not None})


def flatten(store, root):
    dag = FlatDag()
    text = store.alphabet.text
    for u in store.topo_order(root):  # rejects cycles
        dag.symbols[u] = text(store._top[u])
        nodes, term = store.chain_of(store.hi(u))
        if term == ONE:
            dag.accepting.add(u)
        dag.succ[u] = nodes
        for v in nodes:
            dag.edges[(u, v)] = 0
    root_nodes, _ = store.chain_of(root)
    dag.roots = {r: 0 for r in root_nodes}
    dag.accepts = {u: 0 for u in dag.accepting}
    return dag


def _tags(phrase):
    tokens = list(phrase)
    if tokens and isinstance(tokens[0], tuple):
        return [t for _, t in tokens]
    return [str(t) for t in tokens]


def trace(dag, phrase, _table=None):
    """Nodes visited by ``phrase`` (tags or ``(word, tag)`` pairs) in ``dag``."""
    table = _table if _table is not None else dag._step_table()
    tags = _tags(phrase)
    path = []
    prev = None
    for tag in tags:
        v = table.get(prev, {}).get(tag)
        if v is None:
            raise TracingError(tags)
        path.append(v)
        prev = v
    if not path or path[-1] not in dag.accepting:
        raise TracingError(tags)
    return path


def weight_edges(dag, phrases):
    out = dag.copy()
    table = dag._step_table()
    for phrase in phrases:
        path = trace(dag, phrase, table)
        out.roots[path[0]] += 1
        for u, v in zip(path, path[1:]):
            out.edges[(u, v)] += 1
        out.accepts[path[-1]] += 1
    return out


def prune(dag, min_edge_freq=2):
    """Drop counts below ``min_edge_freq`` and nodes no longer reachable.

    Root entries and accept counts are treated as edges from the start state
    and into the end state, so they are thresholded too.
    """
    edges = {e: w for e, w in dag.edges.items() if w >= min_edge_freq}
    roots = {r: w for r, w in dag.roots.items() if w >= min_edge_freq}
    succ = {}
    for (u, v) in edges:
        succ.setdefault(u, []).append(v)
    keep = set()
    stack = list(roots)
    while stack:
        u = stack.pop()
        if u in keep:
            continue
        keep.add(u)
        stack.extend(succ.get(u, ()))
    accepts = {u: w for u, w in dag.accepts.items() if w >= min_edge_freq and u in keep}
    return FlatDag(
        symbols={u: s for u, s in dag.symbols.items() if u in keep},
        succ={u: [v for v in dag.succ.get(u, ()) if (u, v) in edges] for u in keep},
        edges={(u, v): w for (u, v), w in edges.items() if u in keep},
        roots=roots,
        accepts=accepts,
        accepting=set(accepts),
    )


def _ordered(dag, nodes):
    return sorted(nodes, key=lambda u: (dag.symbols[u], u))


def count_paths(dag):
    memo = {}
    order = []
    seen = set()
    for r in dag.roots:
        stack = [(r, False)]
        while stack:
            u, done = stack.pop()
            if done:
                order.append(u)
                continue
            if u in seen:
                continue
            seen.add(u)
            stack.append((u, True))
            stack.extend((v, False) for v in dag.succ.get(u, ()) if v not in seen)
    for u in order:
        memo[u] = (1 if dag.accepts.get(u, 0) > 0 else 0) + sum(
            memo[v] for v in dag.succ.get(u, ())
        )
    return sum(memo.get(r, 0) for r in dag.roots)


def enumerate_paths(dag, max_paths=100_000):
    """Root-to-accepting paths weighted by their smallest edge count."""
    total = count_paths(dag)
    if total > max_paths:
        raise CapacityError(f"{total} candidate paths", max_paths)
    out = []
    for r in _ordered(dag, dag.roots):
        # frames: (node, path, bottleneck or None for a single node)
        stack = [(r, (r,), None)]
        while stack:
            u, path, bottleneck = stack.pop()
            if dag.accepts.get(u, 0) > 0:
                weight = dag.accepts[u] if bottleneck is None else bottleneck
                out.append(PathCandidate(path, weight))
            for v in reversed(_ordered(dag, dag.succ.get(u, ()))):
                w = dag.edges[(u, v)]
                stack.append((v, path + (v,), w if bottleneck is None else min(bottleneck, w)))
    return out


def is_lexical(words, u, theta):
    """Dominant word reaches ``theta`` and is not tied with another word."""
    word, frac = words.dominant(u)
    if frac < theta:
        return None
    counts = words.entries[u]
    top = counts[word]
    if sum(1 for n in counts.values() if n == top) > 1:
        return None
    return word


def label_slots(path, words, theta):
    elements = []
    for u in path.nodes:
        word = is_lexical(words, u, theta)
        elements.append(SLOT if word is None else word)
    return Template(tuple(elements), path.weight)


def collapse_slots(elements):
    out = []
    for e in elements:
        if e is SLOT and out and out[-1] is SLOT:
            continue
        out.append(e)
    return tuple(out)


def merge_templates(templates):
    totals = Counter()
    for t in templates:
        totals[collapse_slots(t.elements)] += t.weight
    merged = [Template(elements, weight) for elements, weight in totals.items()]
    merged.sort(key=lambda t: (-t.weight, t.render()))
    return merged


def extract(store, root, phrases, config=None, words=None):
    """Ranked templates for the tagged ``phrases`` the graph was built from."""
    config = config or ExtractConfig.for_mode(store.mode)
    phrases = [list(p) for p in phrases]
    if words is None:
        words = attach_words(store, root, phrases)
    dag = prune(weight_edges(flatten(store, root), phrases), config.min_edge_freq)
    paths = enumerate_paths(dag, config.max_paths)
    ranked = merge_templates(label_slots(p, words, config.theta) for p in paths)
    ranked = ranked[: config.top_k]
    if config.require_slot:
        ranked = [t for t in ranked if t.has_slot]
    return ranked


def format_tsv(templates):
    return "".join(f"{i}\t{t.weight}\t{t.render()}\n" for i, t in enumerate(templates, 1))
