import pytest
from hypothesis import strategies as st

from seqbdd import kernels
from seqbdd.store import Mode, Store

BACKENDS = kernels.available()

FIG2 = ["ac", "abc", "aac", "acc", "abbc"]
FIG6 = ["abefi", "acegi", "adehi"]
FIG3_TWO = [("w1", "x1", "w2", "x3", "w3"), ("w1", "x2", "w2", "x4", "w3")]


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def store(backend):
    return Store(Mode.ORIGINAL, backend=backend)


@pytest.fixture
def rstore(backend):
    return Store(Mode.RELAXED, backend=backend)


def words(s):
    return ["".join(w) for w in s]


phrase_sets = st.lists(
    st.text(alphabet="abcde", min_size=1, max_size=6), min_size=1, max_size=50
)
adversarial_sets = st.lists(
    st.one_of(
        st.text(alphabet="abcde", min_size=1, max_size=6),
        st.tuples(st.sampled_from("abc"), st.sampled_from("abc"), st.integers(1, 7)).map(
            lambda t: "".join((t[0], t[1])[i % 2] for i in range(t[2]))
        ),
    ),
    min_size=1,
    max_size=40,
)


# PASS/FAIL lines from test_acceptance, repeated in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
