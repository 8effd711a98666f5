"""Smoke tests for the python bindings: a small end-to-end pass."""

import os

import pytest

import tourcast as tc


def test_version_and_constants():
    assert tc.__version__
    assert tc.DEFAULT_BREAK_LIMIT == 4
    assert tc.DEFAULT_ENUMERATION_CAP == 1_000_000
    assert tc.NOMINAL_MOVES_PER_SECOND == 200_000
    assert tc.RNG_ALGORITHM == "mt19937_64/reject-index/53bit-unit"


def test_generate_construct_anneal():
    gp = tc.GeneratorParams()
    gp.num_cities = 4
    gp.num_days = 10
    inst = tc.generate_random_instance(gp, 42)
    assert inst.num_cities == 4
    assert inst.num_days == 10
    tc.validate_instance(inst)

    tour = tc.construct_initial(inst, 1)
    assert tc.is_complete(tour, inst)

    weights = tc.Weights(20, -200, 200)
    penalties = tc.Penalties(10_000, 1_000_000, 10_000, 10_000, 2_000_000)
    params = tc.SAParams()
    params.max_moves = 20_000
    params.seed = 3
    res = tc.simulated_annealing(inst, tour, weights, penalties, params)
    assert res.best_cost <= tc.cost_of(tour, inst, weights, penalties)
    assert tc.is_complete(res.best, inst)
    assert res.trace.total_moves == 20_000

    # On a space this small the annealer must land on the enumerated optimum.
    truth = tc.brute_force_best(inst, weights, penalties)
    assert res.best_cost == pytest.approx(truth.best_cost, abs=1e-9)


def test_evaluation_and_cost():
    gp = tc.GeneratorParams()
    gp.num_cities = 3
    gp.num_days = 8
    inst = tc.generate_random_instance(gp, 7)
    tour = tc.construct_initial(inst, 2)
    ev = tc.evaluate(tour, inst)
    assert ev.objectives.total_miles >= 0
    again = tc.recount_evaluation(tour, inst)
    assert ev.objectives.total_miles == again.objectives.total_miles
    assert ev.violations.sep_type1 == again.violations.sep_type1

    weights = tc.Weights(20, -200, 200)
    clean = tc.Penalties(0, 0, 0, 0, 0)
    assert tc.relaxed_cost(ev, weights, clean).total == tc.strict_cost(ev.objectives, weights)


def test_report_round_trip():
    gp = tc.GeneratorParams()
    gp.num_cities = 3
    gp.num_days = 8
    inst = tc.generate_random_instance(gp, 11)
    tour = tc.construct_initial(inst, 4)
    report = tc.make_report(tour, inst)
    text = tc.render_report(report, inst)
    assert "Properties:" in text
    assert tc.parse_property_block(text) == tc.property_block_of(report)
    blob = tc.report_json(report)
    assert '"tour"' in blob


def test_bundled_sample_instance():
    data = os.environ.get("TOURCAST_DATA_DIR")
    if not data:
        pytest.skip("TOURCAST_DATA_DIR not set")
    manifest = tc.load_manifest(os.path.join(data, "sample", "instance.manifest"))
    inst = tc.load_instance(manifest)
    assert inst.num_cities == 15
    assert inst.num_days == 42
    with open(os.path.join(data, "tours", "reference1.tour")) as fh:
        tour = [int(cell) for cell in fh.readline().split(",")]
    assert tc.is_complete(tour, inst)
    ev = tc.evaluate(tour, inst)
    assert ev.objectives.bad_days == 6
    assert ev.objectives.good_days == 3
    assert ev.violations.break_count == 0
