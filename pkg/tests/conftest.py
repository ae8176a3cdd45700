import random

import pytest

from brodmann.monomials import MonomialIdeal, minimize

CORPUS_SEED = 96821
CORPUS_SIZE = 120


def random_ideal(rng: random.Random) -> MonomialIdeal:
    r = rng.choice((2, 3))
    s = rng.randint(1, 4)
    gens = []
    for _ in range(s):
        v = (0,) * r
        while not any(v):
            v = tuple(rng.randint(0, 4) for _ in range(r))
        gens.append(v)
    return minimize(gens, r)


@pytest.fixture(scope="session")
def corpus() -> list[MonomialIdeal]:
    """Seeded pool of distinct proper nonzero ideals, r <= 3, s <= 4,
    exponents <= 4.  Every corpus-wide acceptance property runs over this."""
    rng = random.Random(CORPUS_SEED)
    seen: set[MonomialIdeal] = set()
    out: list[MonomialIdeal] = []
    while len(out) < CORPUS_SIZE:
        I = random_ideal(rng)
        if I.is_zero() or I.is_unit() or I in seen:
            continue
        seen.add(I)
        out.append(I)
    return out
