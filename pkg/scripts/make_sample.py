"""Regenerate the bundled synthetic handball sample in src/tracklight/data/.

Two teams of seven players and a ball on a 40 x 20 m pitch, 60 s at 20 Hz.
Movement is a team-wide attack/defence shift plus per-player low-frequency
sinusoids and a little measurement noise. A few gaps are cut out so that
missing-data handling is exercised downstream.
"""

from pathlib import Path

import numpy as np

from tracklight.core.xy import TrackingData
from tracklight.io import write_tracking_wide_csv

SEED = 20220314
FRAMERATE = 20.0
N_FRAMES = 1200
OUT = Path(__file__).resolve().parents[1] / "src" / "tracklight" / "data"

rng = np.random.default_rng(SEED)
t = np.arange(N_FRAMES) / FRAMERATE


def wander(n_terms: int, amp: tuple[float, float], freq: tuple[float, float]) -> np.ndarray:
    out = np.zeros_like(t)
    for _ in range(n_terms):
        a = rng.uniform(*amp)
        f = rng.uniform(*freq)
        phase = rng.uniform(0, 2 * np.pi)
        out += a * np.sin(2 * np.pi * f * t + phase)
    return out


def team(base_x: np.ndarray, base_y: np.ndarray, shift: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # goalkeeper (first) follows the team shift only loosely
    follow = np.array([0.2] + [1.0] * (len(base_x) - 1))
    xs, ys = [], []
    for bx, by, w in zip(base_x, base_y, follow):
        x = bx + w * shift + wander(3, (0.3, 1.2), (0.02, 0.12))
        y = by + wander(3, (0.3, 0.9), (0.02, 0.12))
        xs.append(x + rng.normal(0, 0.002, N_FRAMES))
        ys.append(y + rng.normal(0, 0.002, N_FRAMES))
    return np.round(np.array(xs).T, 3), np.round(np.array(ys).T, 3)


shift = 5.0 * np.sin(2 * np.pi * 0.025 * t)
home_x, home_y = team(
    np.array([3.0, 9.0, 10.0, 11.0, 10.0, 9.0, 14.0]),
    np.array([10.0, 3.5, 7.0, 10.0, 13.0, 16.5, 10.0]),
    shift,
)
away_x, away_y = team(
    np.array([37.0, 31.0, 30.0, 29.0, 30.0, 31.0, 26.0]),
    np.array([10.0, 16.5, 13.0, 10.0, 7.0, 3.5, 10.0]),
    shift,
)
ball_x = np.round(np.clip(20.0 + shift + wander(4, (1.0, 3.0), (0.05, 0.3)), 0.2, 39.8), 3)
ball_y = np.round(np.clip(10.0 + wander(4, (1.0, 2.5), (0.05, 0.3)), 0.2, 19.8), 3)

home_x[400:430, 3] = home_y[400:430, 3] = np.nan
away_x[0:20, 5] = away_y[0:20, 5] = np.nan
away_x[900:906, 2] = away_y[900:906, 2] = np.nan
ball_x[1100:1120] = ball_y[1100:1120] = np.nan

home = TrackingData.from_xy(home_x, home_y, FRAMERATE, [f"H{i}" for i in range(1, 8)])
away = TrackingData.from_xy(away_x, away_y, FRAMERATE, [f"A{i}" for i in range(1, 8)])
ball = TrackingData.from_xy(ball_x[:, None], ball_y[:, None], FRAMERATE, ["ball"])

assert np.nanmin(home.coords) > 0 and np.nanmin(away.coords) > 0
assert np.nanmax(home.x) < 40 and np.nanmax(away.x) < 40
assert np.nanmax(home.y) < 20 and np.nanmax(away.y) < 20

for name, td in (("home", home), ("away", away), ("ball", ball)):
    (OUT / f"sample_{name}.csv").write_bytes(write_tracking_wide_csv(td))
