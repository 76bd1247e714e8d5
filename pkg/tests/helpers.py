import math
import os

import numpy as np
from hypothesis import strategies as st


@st.composite
def disk_points(draw, max_radius=0.95):
    r = draw(st.floats(0.0, max_radius))
    t = draw(st.floats(0.0, 2 * math.pi))
    return complex(r * math.cos(t), r * math.sin(t))


DATA = os.path.join(os.path.dirname(__file__), "data")

angles = st.floats(0.0, 2 * math.pi, exclude_max=True)
sizes = st.floats(0.05, 20.0)


def uniform_disk(rng, n, max_radius=1.0):
    r = max_radius * np.sqrt(rng.uniform(size=n))
    t = rng.uniform(0, 2 * np.pi, n)
    return r * np.exp(1j * t)
