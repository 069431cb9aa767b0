import pytest

from helpers import bmSpec, cuttingVectorSpec, randomGrid
from SCLdpc.AbsCounter import blockView, countAbs
from SCLdpc.BruteForceCounter import enumerateSixCycles
from SCLdpc.Exceptions import WindowSpecException
from SCLdpc.ExitCodes import CountMethod, CouplingMode
from SCLdpc.WindowSpec import WindowSpec
from SCLdpc.WindowedCounter import countAbsWindowed, windowPositions

def test_window_rows():
    assert WindowSpec(2, 1).rowCount(3) == 4
    assert WindowSpec(4, 2).rowCount(3) == 4
    assert WindowSpec(5, 1).rowCount(3) == 13
    assert WindowSpec(3, 1).getStep() == 2
    assert WindowSpec(3, 1, step=1).getStep() == 1

def test_invalid_windows():
    for S, memory, step in ((1, 1, None), (3, 2, None), (4, 3, None), (4, 1, 0)):
        with pytest.raises(WindowSpecException):
            WindowSpec(S, memory, step)

def test_window_over_the_whole_code():
    spec = cuttingVectorSpec((1, 2, 4), 5, 4)
    report = countAbsWindowed(spec, WindowSpec(4, 1))
    assert len(report.getPositions()) == 1
    assert report.getPositions()[0].stopRow == 3 * 5
    assert report.getTotal() == report.getStandardTotal() == countAbs(spec).getTotal()
    assert report.getR2() == 1

def test_window_wider_than_code_or_wrong_memory():
    spec = cuttingVectorSpec((1, 2, 4), 5, 4)
    with pytest.raises(WindowSpecException):
        countAbsWindowed(spec, WindowSpec(5, 1))
    with pytest.raises(WindowSpecException):
        countAbsWindowed(spec, WindowSpec(4, 2))

def test_placements():
    spec = cuttingVectorSpec((1, 2, 4), 5, 7)
    positions = windowPositions(spec, WindowSpec(3, 1))
    assert [(w.firstGroup, w.firstRow, w.stopRow) for w in positions] == [(0, 3, 10), (2, 9, 16), (4, 15, 22)]

@pytest.mark.parametrize("p", [5, 7])
def test_line_matches_brute_per_position(rng, p):
    for m, sizes in ((1, (2, 3)), (2, (4, 5))):
        spec = bmSpec(randomGrid(rng, p, m), m, 7)
        for S in sizes:
            window = WindowSpec(S, m)
            line = countAbsWindowed(spec, window, CountMethod.Line)
            brute = countAbsWindowed(spec, window, CountMethod.Brute)
            assert line.getCounts() == brute.getCounts()
            assert line.getStandardTotal() == brute.getStandardTotal()

def test_windows_do_not_share_absorbing_sets(rng):
    spec = bmSpec(randomGrid(rng, 5, 1), 1, 6)
    window = WindowSpec(2, 1)
    report = countAbsWindowed(spec, window, CountMethod.Brute)
    view = blockView(spec)
    support = view.columnSupport()
    seen = 0
    for cycle in enumerateSixCycles(view):
        inside = [w for w in report.getPositions()
                  if all(w.firstGroup <= j // 5 < w.stopGroup for j in cycle.blockCols)
                  and all(w.firstRow <= q < w.stopRow for j in cycle.blockCols for q in support[j])]
        assert len(inside) <= 1
        seen += len(inside)
    assert seen == report.getTotal()
    assert report.getTotal() <= report.getStandardTotal()

def test_positions_see_the_same_count(rng):
    for m, S in ((1, 2), (1, 3), (2, 4)):
        report = countAbsWindowed(bmSpec(randomGrid(rng, 7, m), m, 9), WindowSpec(S, m))
        assert len(set(report.getCounts())) == 1

def test_tailbiting_spec_uses_its_terminated_form(rng):
    grid = randomGrid(rng, 5, 1)
    window = WindowSpec(2, 1)
    tailbiting = countAbsWindowed(bmSpec(grid, 1, 6, CouplingMode.Tailbiting), window)
    terminated = countAbsWindowed(bmSpec(grid, 1, 6), window)
    assert tailbiting.getCounts() == terminated.getCounts()
    assert tailbiting.toDict()["positions"] == terminated.toDict()["positions"]

def test_first_position_count_grows_with_the_window(rng):
    for m, sizes in ((1, range(2, 7)), (2, range(4, 8))):
        spec = bmSpec(randomGrid(rng, 7, m), m, 8)
        counts = [countAbsWindowed(spec, WindowSpec(S, m)).getCounts()[0] for S in sizes]
        assert counts == sorted(counts)

def test_reference_cutting_vector_windows_at_17():
    spec = cuttingVectorSpec((4, 8, 12), 17, 10)
    counts = []
    for S in (2, 3, 4, 5):
        report = countAbsWindowed(spec, WindowSpec(S, 1))
        assert len(set(report.getCounts())) == 1
        counts.append(report.getCounts()[0])
    assert counts == [1020, 3060, 5100, 7140]
