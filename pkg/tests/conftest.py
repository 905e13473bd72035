import pytest

from splitarc import enumerate_split_graphs, make_graph


def sun_graph():
    """The 3-sun with clique {1, 3, 5} (0-indexed), matching the labeled
    example used across the model tests."""
    return make_graph(
        6,
        [(1, 3), (3, 5), (1, 5), (0, 1), (0, 5), (2, 1), (2, 3), (4, 3), (4, 5)],
    )


@pytest.fixture(scope="session")
def small_split_corpus():
    """All split graphs on at most 6 vertices, one per isomorphism class."""
    corpus = []
    for n in range(7):
        corpus.extend(enumerate_split_graphs(n))
    return corpus
