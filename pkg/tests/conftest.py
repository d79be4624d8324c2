import pytest

from glbounds import corpus_entries, membership_for_bound, parse


@pytest.fixture(scope="session")
def corpus_by_name():
    return {entry.name: entry for entry in corpus_entries()}


@pytest.fixture(scope="session")
def membership_report(corpus_by_name):
    """Cached grid-64 membership scans, keyed by (entry name, q)."""
    cache = {}

    def lookup(name, q):
        key = (name, q)
        if key not in cache:
            entry = corpus_by_name[name]
            cache[key] = membership_for_bound(parse(entry.expression), entry.interval, q)
        return cache[key]

    return lookup
