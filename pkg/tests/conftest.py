import itertools

import pytest

from sylowlab.corpus import builtin_corpus
from sylowlab.permcore import GeneratedGroup, bfs_elements

ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [(n, G) for n, G in corpus if G.order() <= 5000]


@pytest.fixture
def acceptance_log():
    def record(label, ok, detail=""):
        ACCEPTANCE_RESULTS.append((label, ok, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}  {detail}")


def group(degree, *cycles):
    return GeneratedGroup.from_cycles(degree, list(cycles))


def compose_t(a, b):
    return tuple(b[i] for i in a)


def closure(gens, n):
    """Subgroup generated by tuples, by naive closure (oracle)."""
    ident = tuple(range(n))
    out = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for s in gens:
                y = compose_t(x, s)
                if y not in out:
                    out.add(y)
                    new.append(y)
        frontier = new
    return frozenset(out)


def subgroups_of_order(G, m):
    """All subgroups of order m generated by at most two elements of G (oracle).

    Every Sylow subgroup in the small groups this is used on is 2-generated.
    """
    elems = bfs_elements(G)
    n = G.degree
    cands = [x for x in elems if m % _order(x) == 0]
    found = set()
    for x, y in itertools.combinations_with_replacement(cands, 2):
        H = closure([x, y], n)
        if len(H) == m:
            found.add(H)
    return found


def _order(x):
    ident = tuple(range(len(x)))
    k, y = 1, x
    while y != ident:
        y = compose_t(y, x)
        k += 1
    return k
