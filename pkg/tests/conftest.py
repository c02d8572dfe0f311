from hypothesis import HealthCheck, settings, strategies as st

from coinvariants.combinatorics import Partition, Permutation

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def partitions(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    parts = []
    remaining = n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=min(remaining, parts[-1] if parts else remaining)))
        parts.append(part)
        remaining -= part
    return Partition(parts)


@st.composite
def permutations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def bounded_partitions(draw, max_parts, max_part):
    parts = draw(st.lists(st.integers(min_value=0, max_value=max_part),
                          min_size=max_parts, max_size=max_parts))
    return Partition(sorted(parts, reverse=True))


@st.composite
def diagrams_cells(draw, min_n=1, max_n=5, bound=6, strict=False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    cell = st.tuples(st.integers(0, bound), st.integers(0, bound))
    if strict:
        return draw(st.lists(cell, min_size=n, max_size=n, unique=True))
    return draw(st.lists(cell, min_size=n, max_size=n))
