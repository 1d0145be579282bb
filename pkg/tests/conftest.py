import numpy as np
import pytest

from plankit.env import OccupancyGrid
from plankit.netpbm import encode_pgm


def grid_from_rows(rows):
    """Grid from strings, '#' = occupied, '.' = free."""
    return OccupancyGrid(np.array([[c == "#" for c in r] for r in rows]))


def write_map(path, occupied):
    occupied = np.asarray(occupied, dtype=bool)
    path.write_bytes(encode_pgm(np.where(occupied, 0, 255).astype(np.uint8)))
    return path


@pytest.fixture
def empty_map(tmp_path):
    return write_map(tmp_path / "empty.pgm", np.zeros((100, 100), dtype=bool))


@pytest.fixture
def sealed_map(tmp_path):
    occ = np.zeros((100, 100), dtype=bool)
    occ[70:100, 70:100] = True
    occ[85:95, 85:95] = False
    occ[88:92, 88:92] = False
    return write_map(tmp_path / "sealed.pgm", occ)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
