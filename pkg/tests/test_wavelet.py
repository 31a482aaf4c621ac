from hypothesis import given, strategies as st

from lyndex.wavelet import OccurrenceGrid, WaveletMatrix


def test_wavelet_report_small():
    wm = WaveletMatrix([5, 1, 3, 7, 3, 0], bits=3)
    assert sorted(wm.report(0, 6, 3, 5)) == [0, 2, 4]
    assert sorted(wm.report(1, 3, 0, 7)) == [1, 2]
    assert wm.report(3, 3, 0, 7) == []
    assert wm.report(0, 6, 6, 5) == []


def test_empty_grid():
    grid = OccurrenceGrid([])
    assert len(grid) == 0
    assert grid.report(1, 10, 1, 10) == []


points = st.lists(st.tuples(st.integers(1, 40), st.integers(1, 40), st.integers(1, 1000)),
                  max_size=80)


@given(points, st.integers(0, 41), st.integers(0, 41), st.integers(0, 41), st.integers(0, 41))
def test_grid_matches_brute_force(pts, x1, x2, y1, y2):
    grid = OccurrenceGrid(pts)
    expected = sorted(p for p in pts if x1 <= p[0] <= x2 and y1 <= p[1] <= y2)
    assert sorted(grid.report(x1, x2, y1, y2)) == expected
    assert sorted(grid.points()) == sorted(pts)
