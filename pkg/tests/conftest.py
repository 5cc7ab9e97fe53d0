"""Shared labeled representatives of the nine 3-point preorder classes.

The letters follow the usual hand-drawn catalogue: a discrete, b one 2-chain
plus a singleton, c one bottom under two tops, d two bottoms under one top,
e the 3-chain, f a 2-bubble plus a singleton, g a 2-bubble under a singleton,
h a singleton under a 2-bubble, i coarse.
"""

import pytest

from ordkit.relations import Preorder


def three_point_classes() -> dict[str, Preorder]:
    return {
        "a": Preorder.discrete(3),
        "b": Preorder.from_pairs(3, [(0, 1)]),
        "c": Preorder.from_pairs(3, [(0, 1), (0, 2)]),
        "d": Preorder.from_pairs(3, [(0, 2), (1, 2)]),
        "e": Preorder.from_pairs(3, [(0, 1), (1, 2)]),
        "f": Preorder.from_pairs(3, [(0, 1), (1, 0)]),
        "g": Preorder.from_pairs(3, [(0, 1), (1, 0), (0, 2)]),
        "h": Preorder.from_pairs(3, [(1, 2), (2, 1), (0, 1)]),
        "i": Preorder.coarse(3),
    }


@pytest.fixture(scope="session")
def classes():
    return three_point_classes()
