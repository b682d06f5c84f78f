import math
import random

import pytest

from greechie.diagram import MmpDiagram


def random_diagram(rng: random.Random, max_atoms: int = 13, max_blocks: int = 5,
                   sizes=(3,)) -> MmpDiagram:
    """A random diagram with dense atoms; no structural guarantees."""
    n = rng.randrange(4, max_atoms + 1)
    usable = [s for s in sizes if s <= n]
    cap = sum(math.comb(n, s) for s in usable)
    m = rng.randrange(1, min(max_blocks, cap) + 1)
    blocks = set()
    while len(blocks) < m:
        size = rng.choice(usable)
        blocks.add(tuple(sorted(rng.sample(range(n), size))))
    used = sorted({a for b in blocks for a in b})
    remap = {a: i for i, a in enumerate(used)}
    return MmpDiagram(len(used), tuple(tuple(remap[a] for a in b) for b in blocks))


def random_admissible(rng: random.Random, max_blocks: int = 6) -> MmpDiagram:
    """Grow a random Greechie-admissible diagram block by block."""
    from greechie.structure import validate

    blocks: list[tuple[int, ...]] = [(0, 1, 2)]
    n = 3
    target = rng.randrange(1, max_blocks + 1)
    attempts = 0
    while len(blocks) < target and attempts < 60:
        attempts += 1
        new_atoms = rng.randrange(2, 4)
        stock = rng.sample(range(n), 3 - new_atoms)
        cand = tuple(sorted(stock + list(range(n, n + new_atoms))))
        trial = blocks + [cand]
        trial_n = n + new_atoms
        rep = validate(MmpDiagram(trial_n, tuple(trial)))
        if rep.pairwise_intersections and (rep.girth is None or rep.girth >= 5):
            blocks = trial
            n = trial_n
    return MmpDiagram(n, tuple(blocks))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
