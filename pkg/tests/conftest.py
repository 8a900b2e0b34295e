import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=120,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.filter_too_much],
)
settings.load_profile("suite")

EPS = sys.float_info.epsilon


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)


def random_arc_ordinates(rng, count, min_sep=0.0):
    """(y_hi, y_lo) pairs with y_hi > y_lo + min_sep, uniform ordinates."""
    pairs = []
    while len(pairs) < count:
        ya, yb = rng.uniform(0.0, 1.0, 2)
        if ya < yb:
            ya, yb = yb, ya
        if ya - yb > min_sep:
            pairs.append((float(ya), float(yb)))
    return pairs
