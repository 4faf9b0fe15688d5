from hypothesis import strategies as st

from minkcx.complex import from_facets


@st.composite
def complexes(draw, n_min=0, n_max=6, max_facets=5):
    n = draw(st.integers(n_min, n_max))
    verts = st.sets(st.integers(1, n), max_size=n) if n else st.just(set())
    facets = draw(st.lists(verts, min_size=1, max_size=max_facets))
    return from_facets(n, facets)


@st.composite
def complexes_or_void(draw, **kw):
    cx = draw(complexes(**kw))
    if draw(st.integers(0, 9)) == 0:
        return from_facets(cx.n, [])
    return cx
