from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def load_figure1_pairs() -> set[tuple[int, int]]:
    pairs = set()
    for line in (FIXTURES / "figure1_improved.txt").read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            d, n = line.split()
            pairs.add((int(d), int(n)))
    return pairs


@pytest.fixture(scope="session")
def figure1_pairs():
    return load_figure1_pairs()


@pytest.fixture(scope="session")
def grid75():
    from coeffbound.experiments import figure1_grid

    return figure1_grid(75)


def load_figure2_poles() -> dict[int, list[tuple[float, float]]]:
    """``n -> [(phase_deg, modulus), ...]`` as plotted."""
    out: dict[int, list[tuple[float, float]]] = {}
    for line in (FIXTURES / "figure2_poles.txt").read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            n, phase, r = line.split()
            out.setdefault(int(n), []).append((float(phase), float(r)))
    return out


@pytest.fixture(scope="session")
def figure2_poles():
    return load_figure2_poles()


# acceptance criteria report one line each; shown even when output is captured
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
