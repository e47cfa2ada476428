import io

import numpy as np
from hypothesis import given, strategies as st

from combburn.formulas import bnc_bound
from combburn.greedy import t_greedy, t_greedy_spine_closed, t_greedy_tooth_fast
from combburn.sweep import SWEEP_HEADER, ceil_sqrt_array, isqrt_array, sweep, sweep_row


@given(st.lists(st.integers(0, 2**52), min_size=1, max_size=50))
def test_isqrt_array_exact(xs):
    from math import isqrt
    assert isqrt_array(np.array(xs)).tolist() == [isqrt(x) for x in xs]
    assert all(c * c >= x for c, x in zip(ceil_sqrt_array(np.array(xs)).tolist(), xs))


@given(st.integers(1, 3000), st.integers(1, 300))
def test_row_matches_scalar(n, m_max):
    t, bnc = sweep_row(n, m_max)
    for m in range(1, m_max + 1, max(1, m_max // 25)):
        expect = t_greedy_spine_closed(n, m) if m <= n else t_greedy_tooth_fast(n, m)
        assert t[m - 1] == expect and bnc[m - 1] == bnc_bound(n, m)


def test_row_matches_simulation():
    for n in range(1, 25):
        t, _ = sweep_row(n, 40)
        assert t.tolist() == [t_greedy(n, m) for m in range(1, 41)]


def run_csv(n, m, threads):
    buf = io.StringIO()
    res = sweep(n, m, threads, buf)
    return res, buf.getvalue()


def test_csv_schema_and_gap_invariants():
    res, text = run_csv(60, 80, 1)
    lines = text.split("\n")
    assert lines[0] == ",".join(SWEEP_HEADER) and lines[-1] == ""
    rows = np.loadtxt(io.StringIO(text), delimiter=",", skiprows=1, dtype=np.int64)
    assert len(rows) == 60 * 80
    n, m, t, bnc, gap = rows.T
    assert (gap == bnc - t).all() and (gap >= 0).all()
    tooth = n <= m
    assert (gap[tooth] <= (n[tooth] + 1) // 2).all()
    assert res.tooth_side.max_gap == gap[tooth].max()
    assert res.spine_side.max_gap == gap[n >= m].max()


def test_thread_count_does_not_change_output():
    a = run_csv(120, 90, 1)
    b = run_csv(120, 90, 4)
    assert a == b


def test_trivial_sweep():
    res, text = run_csv(1, 1, 1)
    assert text == "n,m,t_greedy,bnc,gap\n1,1,1,1,0\n"
    assert res.tooth_side.max_gap == 0 and res.spine_side.count == 1
    assert "max gap 0" in res.tooth_side.describe("n <= m")
