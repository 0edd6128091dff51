"""Smoke tests for the python bindings; run via ctest with PYTHONPATH set."""

import menagerie as m


def test_roster():
    algos = m.list_algorithms()
    assert len(algos) == 34
    assert algos[0] == "GA"
    assert "BB-BC" in algos
    assert set(m.list_benchmarks()) == {"sphere", "rosenbrock", "rastrigin", "ackley", "griewank"}


def test_run_is_deterministic_and_monotone():
    a = m.run("PSO", benchmark="sphere", dims=2, budget=1000, seed=42)
    b = m.run("PSO", benchmark="sphere", dims=2, budget=1000, seed=42)
    assert a == b
    assert a["evals"] <= 1000
    bests = [r[2] for r in a["records"]]
    assert all(x >= y for x, y in zip(bests, bests[1:]))
    assert a["best"] == bests[-1]


def test_params_flow_through():
    d = m.default_params("PSO")
    assert d["inertia"] == 0.7
    out = m.run("PSO", budget=500, seed=1, params={"inertia": 0.5})
    assert out["evals"] <= 500
    try:
        m.run("PSO", budget=500, seed=1, params={"bogus": 1.0})
    except ValueError:
        pass
    else:
        raise AssertionError("unknown parameter must raise")


def test_beats_random_search():
    pso = m.run("PSO", benchmark="sphere", dims=2, budget=5000, seed=0)["best"]
    rs = m.random_search(benchmark="sphere", dims=2, budget=5000, seed=0)["best"]
    assert pso < rs


def test_taxonomy():
    assert m.algorithms_with("restarts") == ["ABC", "BFO", "BeA", "CS", "SFLA"]
    assert m.algorithms_with("spiral-trajectory") == ["GWO", "MFO", "WOA"]
    fa = m.manifest("FA")
    assert "inverse-square-attraction" in fa["features"]
    assert "population-based" in fa["concepts"]
    assert m.similarity("FA", "GSA") > m.similarity("FA", "GA")
    meta = {r["acronym"]: r for r in m.metadata()}
    assert meta["CS"]["citations"] == "~3000 citations"
    assert meta["GA"]["year"] == 1975


def test_benchmark_values():
    assert m.evaluate_benchmark("sphere", [0.0, 0.0]) == 0.0
    assert m.evaluate_benchmark("rosenbrock", [1.0, 1.0]) == 0.0


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"ok  {name}")
    print("python smoke tests passed")
