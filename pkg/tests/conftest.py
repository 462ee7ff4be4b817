import hypothesis.strategies as st
from hypothesis import settings

from holeyhex.lattice import HexDims, hexagon_triangles

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def small_dims(draw, cap=3):
    return HexDims(*(draw(st.integers(1, cap)) for _ in range(3)))


@st.composite
def hole_sets(draw, cap=3, max_pairs=3, balanced=True):
    """A shape and some of its triangles (equal numbers of each colour if ``balanced``)."""
    dims = draw(small_dims(cap))
    tris = hexagon_triangles(dims)
    left = [t for t in tris if t.is_left]
    right = [t for t in tris if not t.is_left]
    k = draw(st.integers(0, min(max_pairs, len(left))))
    holes = draw(st.lists(st.sampled_from(left), min_size=k, max_size=k, unique=True))
    k2 = k if balanced else draw(st.integers(0, min(max_pairs, len(right))))
    holes += draw(st.lists(st.sampled_from(right), min_size=k2, max_size=k2, unique=True))
    return dims, holes


# filled in by test_acceptance, printed once at the end of the session
ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k.split("-")[1])):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
