"""hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from src.poset import random_poset


@st.composite
def posets(draw, max_size: int = 7):
    """Random posets from a seed, a size and a density."""
    n = draw(st.integers(min_value=0, max_value=max_size))
    density = draw(st.floats(min_value=0.0, max_value=1.0))
    seed = draw(st.integers(min_value=0, max_value=10_000))
    return random_poset(n, density=density, seed=seed)


@st.composite
def integer_partitions(draw, max_n: int = 8):
    """Weakly decreasing positive parts summing to at most max_n."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    parts = []
    remaining = n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=min(remaining, parts[-1] if parts else remaining)))
        parts.append(part)
        remaining -= part
    return parts
