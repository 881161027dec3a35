import os

from hypothesis import HealthCheck, settings, strategies as st

from facering.complex import from_facets
from facering.linalg import GF2, GF3, QQ, FieldSpec

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIELDS = (GF2, GF3, QQ)
fields = st.sampled_from(FIELDS + (FieldSpec(5),))


@st.composite
def complexes(draw, max_m=5, max_facets=6):
    """Small complexes on 1..m, ghosts allowed."""
    m = draw(st.integers(0, max_m))
    if m == 0:
        return from_facets(0, [])
    verts = st.integers(1, m)
    facets = draw(st.lists(st.sets(verts, min_size=1, max_size=m), max_size=max_facets))
    return from_facets(m, facets)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5, lo=-3, hi=3):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    return [draw(st.lists(st.integers(lo, hi), min_size=c, max_size=c)) for _ in range(r)], c
