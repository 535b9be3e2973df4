"""Optimal straight-leg search planning by best-first branch and bound.

The vehicle scans cells in horizontal straight legs (one budget unit per
scanned cell) and may transit anywhere at Manhattan cost with the sensor
off.  Nodes branch on either extending the current leg one cell or
terminating it and starting a fresh leg at any unsearched cell.  The
frontier is expanded in decreasing upper-bound order; the incumbent is
seeded with a serpentine sweep plus a run-greedy heuristic; dominated or
bound-beaten nodes are dropped, so the returned plan is reward-optimal.

Two admissible bounds are combined.  A per-row knapsack relaxation
charges each row the top-k of its unsearched values at k cells plus one
entry transit per leg (minus one free entry overall).  A windowed
relaxation additionally charges the vertical travel needed to reach each
band of rows from the current position.  Both only ever overestimate the
achievable completion reward, so pruning on their minimum is safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit, types
from numba.typed import Dict

from .errors import InfeasibleBudgetError, NodeCapExceededError

__all__ = [
    "BenefitGrid",
    "Leg",
    "Plan",
    "lawnmower_baseline",
    "upper_bound",
    "plan_exact",
]

DEFAULT_NODE_CAP = 10_000_000
DEFAULT_STORE_CAP = 5_000_000
MAX_EXACT_CELLS = 256  # searched-set bitmask is four 64-bit words

_DOM_KEY = types.UniTuple(types.uint64, 5)
_DOM_VAL = types.int64


@dataclass(frozen=True)
class BenefitGrid:
    """Per-cell expected risk reduction and current risk over the grid."""

    benefit: np.ndarray
    current_risk: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.benefit, dtype=float)
        r = np.asarray(self.current_risk, dtype=float)
        object.__setattr__(self, "benefit", b)
        object.__setattr__(self, "current_risk", r)
        if b.ndim != 2 or b.shape[0] < 1 or b.shape[1] < 1:
            raise ValueError(f"benefit must be a nonempty 2-d matrix, got shape {b.shape}")
        if r.shape != b.shape:
            raise ValueError("current_risk shape must match benefit")
        if not (np.isfinite(b).all() and np.isfinite(r).all()):
            raise ValueError("grid entries must be finite")

    @property
    def n_rows(self) -> int:
        return self.benefit.shape[0]

    @property
    def n_cols(self) -> int:
        return self.benefit.shape[1]

    @classmethod
    def from_benefit(cls, benefit) -> "BenefitGrid":
        b = np.asarray(benefit, dtype=float)
        return cls(b, np.zeros_like(b))


@dataclass(frozen=True)
class Leg:
    """One maximal straight scanning run within a row (inclusive span)."""

    row: int
    col_start: int
    col_end: int

    @property
    def direction(self) -> str:
        return "left" if self.col_end < self.col_start else "right"

    @property
    def length(self) -> int:
        return abs(self.col_end - self.col_start) + 1

    def cells(self):
        step = 1 if self.col_end >= self.col_start else -1
        return [(self.row, c) for c in range(self.col_start, self.col_end + step, step)]


@dataclass(frozen=True)
class Plan:
    """Ordered legs plus the flattened cell sequence and budget accounting."""

    legs: tuple
    searched_cells: tuple
    budget_used: int
    expected_reward: float
    start: tuple = (0, 0)
    stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(set(self.searched_cells)) != len(self.searched_cells):
            raise ValueError("a plan may not search the same cell twice")

    @property
    def num_cells(self) -> int:
        return len(self.searched_cells)


def _legs_from_cells(cells) -> tuple:
    """Group an executed cell sequence into maximal straight runs."""
    legs = []
    for r, c in cells:
        if legs:
            leg_r, c0, c1, direction = legs[-1]
            step = c - c1
            if r == leg_r and step in (-1, 1) and direction in (0, step):
                legs[-1] = (leg_r, c0, c, step)
                continue
        legs.append((r, c, c, 0))
    return tuple(Leg(r, c0, c1) for r, c0, c1, _ in legs)


def plan_cost(cells, start) -> int:
    """Budget consumed by scanning `cells` in order from `start`.

    One unit per scanned cell plus Manhattan transit whenever the next
    cell does not continue the current straight run.
    """
    used = 0
    pos = start
    direction = 0  # 0 = fresh leg, may extend either way
    for r, c in cells:
        dr, dc = r - pos[0], c - pos[1]
        if used > 0 and dr == 0 and dc in (-1, 1) and direction in (0, dc):
            used += 1
            direction = dc
        else:
            used += abs(dr) + abs(dc) + 1
            direction = 0
        pos = (r, c)
    return used


def make_plan(grid: BenefitGrid, cells, start) -> Plan:
    """Assemble a Plan (legs, cost, reward) from an ordered cell sequence."""
    cells = tuple(tuple(c) for c in cells)
    reward = float(sum(grid.benefit[r, c] for r, c in cells))
    return Plan(
        legs=_legs_from_cells(cells),
        searched_cells=cells,
        budget_used=plan_cost(cells, start),
        expected_reward=reward,
        start=tuple(start),
    )


def lawnmower_baseline(grid: BenefitGrid, budget: int, start) -> Plan:
    """Serpentine coverage sweep from `start`, truncated at the budget.

    Sweeps the start row toward its far wall, then alternates direction
    row by row downward; if rows remain above the start row it jumps back
    up and sweeps those the same way.  Used as the initial incumbent.
    """
    if budget < 1:
        raise InfeasibleBudgetError(f"budget must be >= 1, got {budget}")
    n_r, n_c = grid.n_rows, grid.n_cols
    r0, c0 = start
    direction = 1 if c0 <= (n_c - 1) / 2 else -1
    rows = list(range(r0, n_r)) + list(range(r0 - 1, -1, -1))
    cells = []
    used = 0
    pos = (r0, c0)
    for row in rows:
        col = pos[1]
        if row != r0:
            transit = abs(row - pos[0])
            if used + transit + 1 > budget:
                break
            used += transit
        span = range(col, n_c) if direction == 1 else range(col, -1, -1)
        for c in span:
            if used + 1 > budget:
                break
            cells.append((row, c))
            used += 1
            pos = (row, c)
        else:
            direction = -direction
            continue
        break
    return make_plan(grid, cells, start)


def upper_bound(grid: BenefitGrid, budget: int, partial: Plan) -> float:
    """Optimistic completion value: best unsearched cell times residual budget.

    Clamped below by the partial's own reward so it stays admissible when
    every remaining cell has negative value (stopping is always allowed).
    """
    residual = budget - partial.budget_used
    if residual <= 0:
        return partial.expected_reward
    searched = set(partial.searched_cells)
    best = 0.0
    for r in range(grid.n_rows):
        for c in range(grid.n_cols):
            if (r, c) not in searched:
                best = max(best, grid.benefit[r, c])
    return partial.expected_reward + best * residual


def _row_runs(unsearched_row):
    """Maximal [c0, c1] runs of unsearched cells in one row."""
    runs = []
    c = 0
    n = len(unsearched_row)
    while c < n:
        if unsearched_row[c]:
            c0 = c
            while c + 1 < n and unsearched_row[c + 1]:
                c += 1
            runs.append((c0, c))
        c += 1
    return runs


def _greedy_seed(grid: BenefitGrid, budget: int, start):
    """Run-greedy plan: repeatedly take the best value-per-budget leg.

    Candidate legs are prefixes of maximal unsearched runs entered from
    either end; a strong warm start on grids with banded value.
    """
    n_r, n_c = grid.n_rows, grid.n_cols
    benefit = grid.benefit
    unsearched = np.ones((n_r, n_c), dtype=bool)
    pos = tuple(start)
    used = 0
    cells = []
    while True:
        best_score = 0.0
        best = None
        for r in range(n_r):
            for c0, c1 in _row_runs(unsearched[r]):
                for entry in ((c0, c1) if c0 != c1 else (c0,)):
                    step = 1 if entry == c0 else -1
                    transit = abs(r - pos[0]) + abs(entry - pos[1])
                    avail = budget - used - transit
                    if avail < 1:
                        continue
                    length = min(c1 - c0 + 1, avail)
                    val = 0.0
                    nlen = 0
                    acc_best = (0.0, 0)
                    for i in range(length):
                        val += benefit[r, entry + step * i]
                        nlen += 1
                        if val > acc_best[0]:
                            acc_best = (val, nlen)
                    val, length = acc_best
                    if length == 0:
                        continue
                    score = val / (transit + length)
                    if score > best_score + 1e-15:
                        best_score = score
                        best = (r, entry, step, length)
        if best is None:
            break
        r, entry, step, length = best
        for i in range(length):
            c = entry + step * i
            cells.append((r, c))
            unsearched[r, c] = False
        used += abs(r - pos[0]) + abs(entry - pos[1]) + length
        pos = (r, entry + step * (length - 1))
    return make_plan(grid, cells, start)


# ---------------------------------------------------------------------------
# Numba search kernel


@njit(cache=True)
def _leg_dp(unsearched, benefit, cap):
    """Admissible completion values indexed by budget capacity.

    dp[c] bounds the reward of any completion whose scans plus per-leg
    entry transits (one entry refunded globally) fit in capacity c.
    """
    n_r, n_c = benefit.shape
    dp = np.zeros(cap + 1)
    vals = np.empty(n_c)
    for r in range(n_r):
        nv = 0
        for c in range(n_c):
            if unsearched[r, c] and benefit[r, c] > 0.0:
                vals[nv] = benefit[r, c]
                nv += 1
        if nv == 0:
            continue
        run = 0
        longest = 0
        for c in range(n_c):
            if unsearched[r, c]:
                run += 1
                if run > longest:
                    longest = run
            else:
                run = 0
        row_vals = np.sort(vals[:nv])[::-1]
        prefix = np.empty(nv + 1)
        prefix[0] = 0.0
        for i in range(nv):
            prefix[i + 1] = prefix[i] + row_vals[i]
        ndp = dp.copy()
        for k in range(1, nv + 1):
            w = k + (k + longest - 1) // longest
            if w > cap:
                break
            gain = prefix[k]
            for b in range(w, cap + 1):
                cand = dp[b - w] + gain
                if cand > ndp[b]:
                    ndp[b] = cand
        dp = ndp
    best = 0.0
    for b in range(cap + 1):
        if dp[b] > best:
            best = dp[b]
        dp[b] = best
    return dp


@njit(cache=True)
def _windowed_table(unsearched, benefit, residual):
    """F[row, res]: best top-cell total over any row band reachable from
    `row` within res budget, net of the band's vertical travel cost.

    Position-aware admissible bound usable for every child of a node in
    O(1): any completion that starts in `row` with res budget scans at
    most res - V(band) cells, all within some band of rows.
    """
    n_r, n_c = benefit.shape
    F = np.zeros((n_r, residual + 1))
    count = 0
    for r in range(n_r):
        for c in range(n_c):
            if unsearched[r, c] and benefit[r, c] > 0.0:
                count += 1
    if count == 0 or residual <= 0:
        return F
    vals = np.empty(count)
    rows = np.empty(count, np.int64)
    i = 0
    for r in range(n_r):
        for c in range(n_c):
            if unsearched[r, c] and benefit[r, c] > 0.0:
                vals[i] = benefit[r, c]
                rows[i] = r
                i += 1
    order = np.argsort(-vals)
    vals = vals[order]
    rows = rows[order]
    lo = n_r
    hi = -1
    for idx in range(count):
        r = rows[idx]
        if r < lo:
            lo = r
        if r > hi:
            hi = r
    prefix = np.empty(count + 1)
    win_rows = np.empty(count, np.int64)
    for a in range(lo, hi + 1):
        for b in range(a, hi + 1):
            nwin = 0
            prefix[0] = 0.0
            for idx in range(count):
                if a <= rows[idx] <= b:
                    prefix[nwin + 1] = prefix[nwin] + vals[idx]
                    win_rows[nwin] = rows[idx]
                    nwin += 1
            if nwin == 0:
                continue
            for pr in range(n_r):
                if a <= pr <= b:
                    vert = (b - a) + min(pr - a, b - pr)
                elif pr < a:
                    vert = (a - pr) + (b - a)
                else:
                    vert = (pr - b) + (b - a)
                first_res = vert + 1
                if first_res > residual:
                    continue
                for res in range(first_res, residual + 1):
                    s = res - vert
                    if s > nwin:
                        s = nwin
                    v = prefix[s]
                    if v > F[pr, res]:
                        F[pr, res] = v
    return F


@njit(cache=True)
def _heap_less(i, j, hprio, hrew, hcell, hseq):
    if hprio[i] != hprio[j]:
        return hprio[i] > hprio[j]
    if hrew[i] != hrew[j]:
        return hrew[i] > hrew[j]
    if hcell[i] != hcell[j]:
        return hcell[i] < hcell[j]
    return hseq[i] < hseq[j]


@njit(cache=True)
def _search(benefit, budget, pr0, pc0, incumbent0, node_cap, store_cap):
    """Best-first branch and bound over (searched mask, end position).

    Nodes branch on whole legs: a transit to an entry cell inside some
    unsearched run followed by a straight scan of any feasible length in
    either direction.  Every cell-level plan decomposes into such legs at
    identical cost, so the search space is unchanged while permutation
    plateaus collapse onto far fewer states.

    Returns (status, best reward, expansions, winning leg array) where
    status 1 flags the expansion cap and 2 the node-store cap.  Legs are
    encoded as (entry flat cell, signed direction, length) triples; the
    array is empty when no explored node beat the seeded incumbent.
    """
    n_r, n_c = benefit.shape
    eps = 1e-12

    cap_nodes = 16384
    nmask = np.zeros((cap_nodes, 4), np.uint64)
    npos = np.zeros(cap_nodes, np.int16)
    nused = np.zeros(cap_nodes, np.int32)
    nrew = np.zeros(cap_nodes, np.float64)
    npar = np.full(cap_nodes, -1, np.int32)
    nentry = np.full(cap_nodes, -1, np.int16)
    nldir = np.zeros(cap_nodes, np.int8)
    nlen = np.zeros(cap_nodes, np.int16)
    n_nodes = 1
    npos[0] = pr0 * n_c + pc0

    hcap = 16384
    hprio = np.zeros(hcap)
    hrew = np.zeros(hcap)
    hcell = np.zeros(hcap, np.int32)
    hseq = np.zeros(hcap, np.int64)
    hnid = np.zeros(hcap, np.int32)
    hsize = 0
    seq = 0

    unsearched = np.ones((n_r, n_c), np.bool_)
    dp = _leg_dp(unsearched, benefit, budget + 1)
    fw = _windowed_table(unsearched, benefit, budget)
    root_ub = min(dp[budget + 1], fw[pr0, budget])
    hprio[0] = root_ub
    hrew[0] = 0.0
    hcell[0] = npos[0]
    hseq[0] = seq
    hnid[0] = 0
    hsize = 1
    seq += 1

    dom = Dict.empty(_DOM_KEY, _DOM_VAL)

    incumbent = incumbent0
    best_node = -1
    expansions = 0
    status = 0

    while hsize > 0:
        top_prio = hprio[0]
        top_nid = hnid[0]
        hsize -= 1
        hprio[0] = hprio[hsize]
        hrew[0] = hrew[hsize]
        hcell[0] = hcell[hsize]
        hseq[0] = hseq[hsize]
        hnid[0] = hnid[hsize]
        i = 0
        while True:
            l = 2 * i + 1
            r = l + 1
            m = i
            if l < hsize and _heap_less(l, m, hprio, hrew, hcell, hseq):
                m = l
            if r < hsize and _heap_less(r, m, hprio, hrew, hcell, hseq):
                m = r
            if m == i:
                break
            hprio[i], hprio[m] = hprio[m], hprio[i]
            hrew[i], hrew[m] = hrew[m], hrew[i]
            hcell[i], hcell[m] = hcell[m], hcell[i]
            hseq[i], hseq[m] = hseq[m], hseq[i]
            hnid[i], hnid[m] = hnid[m], hnid[i]
            i = m

        if top_prio <= incumbent + eps:
            break
        nid = top_nid
        m0, m1, m2, m3 = nmask[nid, 0], nmask[nid, 1], nmask[nid, 2], nmask[nid, 3]
        pos = int(npos[nid])
        used = int(nused[nid])
        reward = nrew[nid]

        key = (m0, m1, m2, m3, np.uint64(pos))
        if key in dom and dom[key] <= used:
            continue
        dom[key] = used

        residual = budget - used
        if residual <= 0:
            continue

        for cell in range(n_r * n_c):
            word = cell >> 6
            bit = np.uint64(1) << np.uint64(cell & 63)
            unsearched[cell // n_c, cell % n_c] = (nmask[nid, word] & bit) == np.uint64(0)
        pr = pos // n_c
        pc = pos % n_c

        dp = _leg_dp(unsearched, benefit, residual + 1)
        fw = _windowed_table(unsearched, benefit, residual)
        if nid != 0:
            tight = reward + min(dp[residual + 1], fw[pr, residual])
            if tight <= incumbent + eps:
                continue

        expansions += 1
        if expansions > node_cap:
            status = 1
            break

        for row in range(n_r):
            vert = pr - row if pr >= row else row - pr
            if vert + 1 > residual:
                continue
            col = 0
            while col < n_c:
                if not unsearched[row, col]:
                    col += 1
                    continue
                run_a = col
                while col + 1 < n_c and unsearched[row, col + 1]:
                    col += 1
                run_b = col
                col += 1
                for entry in range(run_a, run_b + 1):
                    horiz = pc - entry if pc >= entry else entry - pc
                    base = used + vert + horiz
                    if base + 1 > budget:
                        continue
                    for d in range(2):
                        step = 1 if d == 0 else -1
                        span = run_b - entry + 1 if step == 1 else entry - run_a + 1
                        # Single-cell legs are direction-free; emit them only once.
                        start_len = 1 if step == 1 else 2
                        if span < start_len:
                            continue
                        acc = benefit[row, entry] if step == -1 else 0.0
                        for length in range(start_len, span + 1):
                            end_col = entry + step * (length - 1)
                            acc += benefit[row, end_col]
                            nused_c = base + length
                            if nused_c > budget:
                                break
                            nreward = reward + acc
                            store = False
                            if nreward > incumbent + eps:
                                incumbent = nreward
                                store = True
                            cres = budget - nused_c
                            fwv = fw[row, cres] if cres <= residual else fw[row, residual]
                            cub = nreward + min(dp[cres + 1], fwv)
                            push = cub > incumbent + eps
                            if not (push or store):
                                continue
                            if n_nodes >= store_cap:
                                status = 2
                                break
                            if n_nodes == cap_nodes:
                                new_cap = cap_nodes * 2
                                nmask2 = np.zeros((new_cap, 4), np.uint64)
                                nmask2[:cap_nodes] = nmask
                                nmask = nmask2
                                npos2 = np.zeros(new_cap, np.int16)
                                npos2[:cap_nodes] = npos
                                npos = npos2
                                nused2 = np.zeros(new_cap, np.int32)
                                nused2[:cap_nodes] = nused
                                nused = nused2
                                nrew2 = np.zeros(new_cap, np.float64)
                                nrew2[:cap_nodes] = nrew
                                nrew = nrew2
                                npar2 = np.full(new_cap, -1, np.int32)
                                npar2[:cap_nodes] = npar
                                npar = npar2
                                nentry2 = np.full(new_cap, -1, np.int16)
                                nentry2[:cap_nodes] = nentry
                                nentry = nentry2
                                nldir2 = np.zeros(new_cap, np.int8)
                                nldir2[:cap_nodes] = nldir
                                nldir = nldir2
                                nlen2 = np.zeros(new_cap, np.int16)
                                nlen2[:cap_nodes] = nlen
                                nlen = nlen2
                                cap_nodes = new_cap
                            end_cell = row * n_c + end_col
                            entry_cell = row * n_c + entry
                            nmask[n_nodes, 0] = m0
                            nmask[n_nodes, 1] = m1
                            nmask[n_nodes, 2] = m2
                            nmask[n_nodes, 3] = m3
                            for off in range(length):
                                cc = entry + step * off
                                cell = row * n_c + cc
                                nmask[n_nodes, cell >> 6] |= np.uint64(1) << np.uint64(cell & 63)
                            npos[n_nodes] = end_cell
                            nused[n_nodes] = nused_c
                            nrew[n_nodes] = nreward
                            npar[n_nodes] = nid
                            nentry[n_nodes] = entry_cell
                            nldir[n_nodes] = step
                            nlen[n_nodes] = length
                            if store:
                                best_node = n_nodes
                            if push:
                                if hsize == hcap:
                                    new_hcap = hcap * 2
                                    hprio2 = np.zeros(new_hcap)
                                    hprio2[:hcap] = hprio
                                    hprio = hprio2
                                    hrew2 = np.zeros(new_hcap)
                                    hrew2[:hcap] = hrew
                                    hrew = hrew2
                                    hcell2 = np.zeros(new_hcap, np.int32)
                                    hcell2[:hcap] = hcell
                                    hcell = hcell2
                                    hseq2 = np.zeros(new_hcap, np.int64)
                                    hseq2[:hcap] = hseq
                                    hseq = hseq2
                                    hnid2 = np.zeros(new_hcap, np.int32)
                                    hnid2[:hcap] = hnid
                                    hnid = hnid2
                                    hcap = new_hcap
                                hprio[hsize] = cub
                                hrew[hsize] = nreward
                                hcell[hsize] = end_cell
                                hseq[hsize] = seq
                                hnid[hsize] = n_nodes
                                j = hsize
                                hsize += 1
                                seq += 1
                                while j > 0:
                                    par = (j - 1) // 2
                                    if _heap_less(j, par, hprio, hrew, hcell, hseq):
                                        hprio[j], hprio[par] = hprio[par], hprio[j]
                                        hrew[j], hrew[par] = hrew[par], hrew[j]
                                        hcell[j], hcell[par] = hcell[par], hcell[j]
                                        hseq[j], hseq[par] = hseq[par], hseq[j]
                                        hnid[j], hnid[par] = hnid[par], hnid[j]
                                        j = par
                                    else:
                                        break
                            n_nodes += 1
                        if status != 0:
                            break
                    if status != 0:
                        break
                if status != 0:
                    break
            if status != 0:
                break
        if status != 0:
            break

    legs = np.empty((0, 3), np.int64)
    if best_node >= 0:
        depth = 0
        nid = best_node
        while nid > 0:
            depth += 1
            nid = npar[nid]
        legs = np.empty((depth, 3), np.int64)
        nid = best_node
        i = depth - 1
        while nid > 0:
            legs[i, 0] = nentry[nid]
            legs[i, 1] = nldir[nid]
            legs[i, 2] = nlen[nid]
            nid = npar[nid]
            i -= 1
    return status, incumbent, expansions, legs


def plan_exact(
    grid: BenefitGrid,
    budget: int,
    start,
    node_cap: int = DEFAULT_NODE_CAP,
    store_cap: int = DEFAULT_STORE_CAP,
) -> Plan:
    """Reward-maximal feasible plan under the straight-leg motion model.

    Raises NodeCapExceededError rather than returning silently suboptimal
    plans when either the expansion cap or the node-store cap trips.
    """
    if budget < 1:
        raise InfeasibleBudgetError(f"budget must be >= 1, got {budget}")
    n_r, n_c = grid.n_rows, grid.n_cols
    if n_r * n_c > MAX_EXACT_CELLS:
        raise ValueError(
            f"exact planner supports up to {MAX_EXACT_CELLS} cells, got {n_r * n_c}; "
            "use the orienteering planner for larger grids"
        )
    r0, c0 = start
    if not (0 <= r0 < n_r and 0 <= c0 < n_c):
        raise ValueError(f"start {tuple(start)} outside the grid")

    seeds = [lawnmower_baseline(grid, budget, start), _greedy_seed(grid, budget, start)]
    seed = max(seeds, key=lambda p: p.expected_reward)
    incumbent0 = max(seed.expected_reward, 0.0)

    status, reward, expansions, best_legs = _search(
        np.ascontiguousarray(grid.benefit),
        int(budget),
        int(r0),
        int(c0),
        float(incumbent0),
        int(node_cap),
        int(store_cap),
    )
    if status == 1:
        raise NodeCapExceededError(
            f"exact search exceeded the node cap of {node_cap} expansions"
        )
    if status == 2:
        raise NodeCapExceededError(
            f"exact search exceeded the stored-node cap of {store_cap}"
        )

    if len(best_legs) > 0:
        cells = []
        for entry_cell, step, length in best_legs:
            row, col = int(entry_cell) // n_c, int(entry_cell) % n_c
            for off in range(int(length)):
                cells.append((row, col + int(step) * off))
        plan = make_plan(grid, cells, start)
    elif seed.expected_reward >= 0.0:
        plan = seed
    else:
        plan = make_plan(grid, [], start)  # doing nothing beats a negative sweep
    plan.stats["node_expansions"] = int(expansions)
    plan.stats["optimal_reward"] = float(reward)
    return plan
