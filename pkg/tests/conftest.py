import pytest

from sipoly.census import all_polyhedra_tutte, si_census_expand, si_census_oracle
from sipoly.planar_map import build_map, embed_planar
from sipoly.polyhedron import from_code, from_rotations, validate

K4_ROTATIONS = {0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)}
CUBE_ADJACENCY = [[1, 3, 4], [0, 2, 5], [1, 3, 6], [0, 2, 7], [0, 5, 7], [1, 4, 6], [2, 5, 7], [3, 4, 6]]


@pytest.fixture(scope="session")
def k4():
    return from_rotations(K4_ROTATIONS)


@pytest.fixture(scope="session")
def cube():
    return validate(build_map(embed_planar(CUBE_ADJACENCY)))


@pytest.fixture(scope="session")
def small_polyhedra():
    """Every polyhedron with at most 8 vertices, in canonical labeling."""
    return [from_code(c) for c in sorted(all_polyhedra_tutte(8, 18))]


@pytest.fixture(scope="session")
def census9():
    return si_census_expand(9)


@pytest.fixture(scope="session")
def oracle9():
    return si_census_oracle(9)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
