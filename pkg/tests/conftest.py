import numpy as np
import pytest

from tracklight import TrackingData


def make_td(x, y=None, framerate=20.0, ids=None):
    """TrackingData from (F, P) x and y arrays (y defaults to zeros)."""
    x = np.atleast_2d(np.asarray(x, dtype=float).T).T
    y = np.zeros_like(x) if y is None else np.atleast_2d(np.asarray(y, dtype=float).T).T
    ids = ids or [f"p{k}" for k in range(x.shape[1])]
    return TrackingData.from_xy(x, y, framerate, ids)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_td(rng, n_frames=None, n_players=None, missing=0.1, framerate=None):
    n_frames = rng.integers(0, 40) if n_frames is None else n_frames
    n_players = rng.integers(0, 5) if n_players is None else n_players
    coords = rng.normal(0, 30, size=(n_frames, 2 * n_players))
    gaps = rng.random((n_frames, n_players)) < missing
    coords[:, 0::2][gaps] = np.nan
    coords[:, 1::2][gaps] = np.nan
    if framerate is None:
        framerate = float(rng.choice([10.0, 12.5, 20.0, 25.0, 29.97, 30.0, 50.0, 100.0]))
    return TrackingData(coords, framerate, [f"id{k}" for k in range(n_players)])


# acceptance criteria record their outcome here; printed after the run
ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE_RESULTS[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(ACCEPTANCE_RESULTS.items()):
        terminalreporter.write_line(f"{outcome}  {name}")
