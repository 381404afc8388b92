from grdisc.sweep import HEADER, edges_for_density, grid, run_sweep, sweep_csv


def test_half_density_rows():
    rows = run_sweep(2, [20], ["0.5"], 3, ["proof", "exact"])
    assert len(rows) == 6
    assert all(row.within_bound is True for row in rows)
    assert [(r.seed, r.variant) for r in rows] == [
        (0, "proof"), (0, "exact"), (1, "proof"), (1, "exact"), (2, "proof"), (2, "exact"),
    ]
    assert all(r.m == 95 for r in rows)


def test_extreme_densities_have_zero_ratio():
    rows = run_sweep(2, [12], ["0", "1"], 2, ["proof", "exact"])
    assert {r.ratio for r in rows} == {"0"}
    assert all(r.within_bound for r in rows)
    rows = run_sweep(3, [7], ["1"], 1, ["exact"])
    assert rows[0].m == 35 and rows[0].ratio == "0"


def test_edges_for_density_rounds_half_up():
    assert edges_for_density(5, 2, "0.05") == 1  # 0.5 rounds up
    assert edges_for_density(5, 2, "0.15") == 2  # 1.5 rounds up
    assert edges_for_density(20, 2, 0.1) == 19


def test_grid_order():
    points = grid(2, [5, 6], ["0.1", "0.2"], 2, ["exact"])
    assert [(n, q, s) for n, _, q, s, _ in points] == [
        (5, "0.1", 0), (5, "0.1", 1), (5, "0.2", 0), (5, "0.2", 1),
        (6, "0.1", 0), (6, "0.1", 1), (6, "0.2", 0), (6, "0.2", 1),
    ]


def test_csv_is_identical_across_runs_and_workers():
    args = (2, [10, 14], ["0.2", "0.7"], 2, ["proof", "exact"])
    a = sweep_csv(run_sweep(*args))
    b = sweep_csv(run_sweep(*args))
    c = sweep_csv(run_sweep(*args, workers=3))
    assert a == b == c
    assert a.splitlines()[0] == ",".join(HEADER)


def test_failures_become_error_rows():
    rows = run_sweep(2, [3], ["2"], 1, ["proof"])  # density above 1
    text = sweep_csv(rows)
    header, row = text.splitlines()
    assert header.endswith(",error")
    assert "TooManyEdges" in row and rows[0].within_bound is None
