import random
from dataclasses import dataclass
from fractions import Fraction

import pytest

from threegap.cli import named_partials
from threegap.numtheory import CFKind, ContinuedFraction, cf_from_rational

CORPUS_SEED = 1729
RANDOM_COUNT = 50
RANDOM_DEPTH = 20


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    z: Fraction
    cf: ContinuedFraction  # canonical complete expansion of z


def _realize(name: str, partials) -> CorpusEntry:
    z = ContinuedFraction(tuple(partials), CFKind.IRRATIONAL_PREFIX).value()
    return CorpusEntry(name, z, cf_from_rational(z))


def build_corpus() -> list[CorpusEntry]:
    entries = [
        _realize("golden-30", named_partials("golden", 30)),
        _realize("sqrt2-30", named_partials("sqrt2", 30)),
        _realize("e-24", named_partials("e", 24)),
    ]
    rng = random.Random(CORPUS_SEED)
    for i in range(RANDOM_COUNT):
        partials = tuple(rng.randint(1, 9) for _ in range(RANDOM_DEPTH))
        entries.append(_realize(f"random-{i:02d}", partials))
    return entries


@pytest.fixture(scope="session")
def corpus() -> list[CorpusEntry]:
    return build_corpus()
