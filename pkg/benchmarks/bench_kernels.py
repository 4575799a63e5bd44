"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--lines 1000]

Times three workloads per backend: raw reachability queries on a large
graph, relaxed construction (which runs a reachability query on every
share attempt) and the full extraction pipeline.
"""
import argparse
import random
import time
from array import array

from seqbdd import kernels
from seqbdd.extract import ExtractConfig, extract
from seqbdd.store import Mode, Store
from seqbdd.synth import tweetbot_corpus


def random_phrases(n, seed=0, alphabet="abcdefgh", max_len=12):
    rng = random.Random(seed)
    return ["".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_len))) for _ in range(n)]


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_reaches(backend, phrases, queries):
    store = Store(Mode.ORIGINAL, backend=backend)
    root = store.construct(phrases)
    nodes = store.topo_order(root)
    rng = random.Random(1)
    pairs = [(rng.choice(nodes), rng.choice(nodes)) for _ in range(queries)]
    k = kernels.load(backend)
    lo, hi = store._lo, store._hi
    stamp = array("q", bytes(8 * len(lo)))

    def run():
        for epoch, (a, b) in enumerate(pairs, 1):
            k.reaches(lo, hi, stamp, epoch, a, b)

    return run


def bench_relaxed(backend, phrases):
    def run():
        Store(Mode.RELAXED, backend=backend).construct(phrases)

    return run


def bench_extract(backend, corpus):
    tags = [p.tags for p in corpus]

    def run():
        store = Store(Mode.RELAXED, backend=backend)
        root = store.construct(tags)
        extract(store, root, corpus, ExtractConfig())

    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    # relaxed graphs over high-entropy random strings grow very fast past a
    # couple of thousand phrases; tagged corpora stay small
    ap.add_argument("--lines", type=int, default=1000, help="random phrases per workload")
    ap.add_argument("--corpus", type=int, default=3000, help="tagged lines for the pipeline")
    ap.add_argument("--queries", type=int, default=2000)
    args = ap.parse_args()

    backends = kernels.available()
    phrases = random_phrases(args.lines)
    corpus = tweetbot_corpus(args.corpus)
    workloads = [
        ("reaches", lambda b: bench_reaches(b, phrases, args.queries)),
        ("relaxed build", lambda b: bench_relaxed(b, phrases)),
        ("extract pipeline", lambda b: bench_extract(b, corpus)),
    ]
    print(f"{'workload':<18}" + "".join(f"{b:>12}" for b in backends) + "     speedup")
    for name, make in workloads:
        times = [best_of(args.repeat, make(b)) for b in backends]
        row = f"{name:<18}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[1] / times[0]:>8.2f}x"
        print(row)


if __name__ == "__main__":
    main()
