from fractions import Fraction

import pytest

from diskarr.geometry import Disk, pt


def rect(i, x0, y0, x1, y1) -> Disk:
    return Disk(i, (pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)))


def bars_and_comb() -> list[Disk]:
    """Two overlapping bars and a three-tooth comb hanging through both.

    The bars meet in one strip; each tooth cuts each bar once, so the pair
    counts are 1, 3, 3.
    """
    comb = [(0, 5), (9, 5), (9, -1), (8, -1), (8, 4), (5, 4), (5, -1), (4, -1), (4, 4),
            (2, 4), (2, -1), (1, -1), (1, 4), (0, 4)]
    return [rect(0, 0, 0, 10, 2), rect(1, Fraction(1, 2), 1, Fraction(21, 2), 3), Disk.from_points(2, comb)]


def octagram() -> list[Disk]:
    half = Fraction(5, 2)
    return [rect(0, -2, -2, 2, 2), Disk(1, (pt(half, 0), pt(0, half), pt(-half, 0), pt(0, -half)))]


SMALL = {
    "square": lambda: [rect(0, 0, 0, 1, 1)],
    "disjoint": lambda: [rect(0, 0, 0, 1, 1), rect(1, 2, 0, 3, 1)],
    "lens": lambda: [rect(0, 0, 0, 2, 2), rect(1, 1, 1, 3, 3)],
    "plus": lambda: [rect(0, 0, 1, 3, 2), rect(1, 1, 0, 2, 3)],
    "octagram": octagram,
    "bars_comb": bars_and_comb,
}


def resolvable_random(count: int, max_resolution: int = 800, start: int = 0):
    """First ``count`` small random instances whose feature size the raster can resolve.

    Selection looks only at the polygons (the oracle's own precondition),
    never at any exact or raster result.
    """
    from diskarr.generators import random_instance
    from diskarr.oracle import required_resolution

    out, seed = [], start
    while len(out) < count:
        inst = random_instance(2 + seed % 3, 8, seed)
        if required_resolution(inst.disks) <= max_resolution:
            out.append((seed, inst))
        seed += 1
    return out


@pytest.fixture(params=sorted(SMALL))
def small_disks(request):
    return SMALL[request.param]()


# acceptance results collected here and echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
