import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from saturata.family import SetFamily, up_closure  # noqa: E402


def random_family(rng, n, density=None):
    p = rng.random() if density is None else density
    return SetFamily(n, rng.random(1 << n) < p)


def random_increasing(rng, n, gens=None):
    k = int(rng.integers(1, 2 * n + 1)) if gens is None else gens
    width = int(rng.integers(1, n + 1))
    masks = []
    for _ in range(k):
        elems = rng.choice(n, size=int(rng.integers(0, width + 1)), replace=False)
        masks.append(int(sum(1 << int(e) for e in elems)))
    return up_closure(SetFamily.from_masks(n, masks))


def structured_corpus(n):
    """Small hand-picked families: empty, full, stars, up-sets, layers, parity."""
    idx = np.arange(1 << n)
    pc = np.bitwise_count(idx)
    fams = [SetFamily.empty(n), SetFamily.full(n), SetFamily.from_masks(n, [0])]
    for i in range(n):
        fams.append(SetFamily(n, (idx >> i) & 1 == 1))
    for k in range(n + 1):
        fams.append(SetFamily(n, pc >= k))
        fams.append(SetFamily(n, pc == k))
    fams.append(SetFamily(n, pc % 2 == 0))
    if n >= 2:
        fams.append(SetFamily(n, (idx & 3) != 0))
        fams.append(SetFamily(n, (idx & 3) == 3))
    return fams


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
