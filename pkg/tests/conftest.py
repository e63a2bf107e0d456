import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from weightcalc.seqcore import from_quotients  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@st.composite
def lc_sequences(draw, min_P=4, max_P=48):
    """Normalized log-convex sequences: nonnegative increments of log mu,
    starting from log mu_1 >= 0."""
    P = draw(st.integers(min_P, max_P))
    first = draw(st.floats(0.0, 2.0, allow_nan=False))
    inc = draw(st.lists(st.floats(0.0, 3.0, allow_nan=False), min_size=P - 1, max_size=P - 1))
    return from_quotients(np.cumsum([first, *inc]))


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20241016)
