"""Built-in sensor suites and demo scenarios.

The default sensor suite models three seafloor classes ordered from least
to most informative (low detection / high false-alarm through high
detection / low false-alarm), with a mildly noisy class observer.  The
six-region 15x15 demo grid exercises planners on a map whose value is
concentrated in column bands, which is exactly the regime where
whole-row route abstraction gives up reward.
"""

from __future__ import annotations

import numpy as np

from .belief import SensorSuite

__all__ = [
    "default_sensors",
    "DEMO_REGION_DISTRIBUTIONS",
    "demo_region_layout",
    "demo_prior_grid",
    "large_demo_prior_grid",
]


def default_sensors() -> SensorSuite:
    """Three-class suite: difficult, moderate, easy seafloor."""
    conf = np.array(
        [
            [0.82, 0.09, 0.09],
            [0.08, 0.84, 0.08],
            [0.06, 0.06, 0.88],
        ]
    )
    return SensorSuite(
        detection=np.array([0.65, 0.80, 0.95]),
        false_alarm=np.array([0.40, 0.30, 0.05]),
        env_confusion=conf,
        labels=("difficult", "moderate", "easy"),
    )


# Cell-wise class distributions for the six named demo regions.
DEMO_REGION_DISTRIBUTIONS = {
    "A1": (0.95, 0.05, 0.00),
    "A2": (0.85, 0.10, 0.05),
    "A3": (0.10, 0.10, 0.80),
    "A4": (0.30, 0.40, 0.30),
    "A5": (0.00, 0.10, 0.90),
    "A6": (0.10, 0.65, 0.25),
}


def demo_region_layout(n_rows: int = 15, n_cols: int = 15) -> list[dict]:
    """Six rectangular regions tiling the grid: two row bands, three column bands."""
    row_split = n_rows // 2 + 1
    col_a = n_cols // 3
    col_b = 2 * n_cols // 3
    bands = [(0, row_split), (row_split, n_rows)]
    cols = [(0, col_a), (col_a, col_b), (col_b, n_cols)]
    names = [["A1", "A2", "A3"], ["A4", "A5", "A6"]]
    regions = []
    for bi, (r0, r1) in enumerate(bands):
        for ci, (c0, c1) in enumerate(cols):
            name = names[bi][ci]
            regions.append(
                {
                    "name": name,
                    "rows": [r0, r1],
                    "cols": [c0, c1],
                    "dist": list(DEMO_REGION_DISTRIBUTIONS[name]),
                }
            )
    return regions


def prior_grid_from_regions(n_rows: int, n_cols: int, regions: list[dict]) -> np.ndarray:
    """Expand rectangular region specs into an (n_rows, n_cols, m) prior grid."""
    m = len(regions[0]["dist"])
    grid = np.full((n_rows, n_cols, m), np.nan)
    for reg in regions:
        r0, r1 = reg["rows"]
        c0, c1 = reg["cols"]
        if not (0 <= r0 < r1 <= n_rows and 0 <= c0 < c1 <= n_cols):
            raise ValueError(f"region {reg.get('name', '?')} extends outside the grid")
        grid[r0:r1, c0:c1] = np.asarray(reg["dist"], dtype=float)
    if np.isnan(grid).any():
        raise ValueError("regions do not cover the grid")
    return grid


def demo_prior_grid(n_rows: int = 15, n_cols: int = 15) -> np.ndarray:
    """The six-region demo as an (n_rows, n_cols, 3) environment prior grid."""
    return prior_grid_from_regions(n_rows, n_cols, demo_region_layout(n_rows, n_cols))


def large_demo_prior_grid(n_rows: int = 51, n_cols: int = 65) -> np.ndarray:
    """Synthetic harbor-style map: easy swaths separated by difficult bands.

    Deterministic row-banded layout; the top and lower-middle swaths are
    worth surveying, the rest mostly is not, so budgeted tours skip large
    portions of the map.
    """
    easy = (0.05, 0.05, 0.90)
    moderate = (0.30, 0.40, 0.30)
    difficult = (0.85, 0.10, 0.05)
    grid = np.empty((n_rows, n_cols, 3))
    for r in range(n_rows):
        frac = r / (n_rows - 1)
        if frac < 0.20:
            dist = easy
        elif frac < 0.40:
            dist = difficult
        elif frac < 0.62:
            dist = moderate
        elif frac < 0.86:
            dist = easy
        else:
            dist = difficult
        grid[r, :] = dist
    return grid
