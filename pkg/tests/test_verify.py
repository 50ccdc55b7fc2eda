"""Suite machinery: determinism, population shape, small-cap runs."""

import pytest

from liemult.randgen import Lcg
from liemult.verify import (
    SUITES,
    build_population,
    run_suite,
)


def test_lcg_stream_is_documented_and_stable():
    rng = Lcg(7)
    # frozen expected prefix of the documented LCG (seed 7): regressions
    # here would silently change every randomized sweep
    assert [rng.next_u32() for _ in range(4)] == [
        2118330556, 4104526463, 3893713506, 1171437346,
    ]
    rng = Lcg(7)
    assert [rng.randint(0, 9) for _ in range(5)] == [6, 3, 6, 6, 0]


def test_lcg_randint_bounds():
    rng = Lcg(1)
    for _ in range(200):
        v = rng.randint(-3, 3)
        assert -3 <= v <= 3
    with pytest.raises(ValueError):
        rng.randint(3, 2)


def test_population_is_deterministic():
    a = build_population(2, 1, 7)
    b = build_population(2, 1, 7)
    assert a is b or list(a) == list(b)
    ids = [c.case_id for c in a]
    assert len(ids) == len(set(ids))


def test_population_contains_all_closure_kinds():
    pop = build_population(2, 1, 7)
    kinds = {c.case_id.split("[")[0] for c in pop if "[" in c.case_id}
    assert {"sum", "cob", "quo"} <= kinds


def test_population_default_caps_reach_500():
    pop = build_population(4, 3, 7)
    assert len(pop) >= 500


def test_all_suites_pass_at_small_caps():
    for name in sorted(SUITES):
        report = run_suite(name, max_m=2, max_k=1, max_n=5, seed=7)
        failing = [r for r in report.results if not r.ok]
        assert not failing, (name, failing[:5])


def test_reports_are_sorted_and_repeatable():
    r1 = run_suite("formulas", max_m=2, max_k=1, max_n=5, seed=7)
    r2 = run_suite("formulas", max_m=2, max_k=1, max_n=5, seed=7)
    assert r1.lines() == r2.lines()
    ids = [r.case_id for r in r1.results]
    assert ids == sorted(ids)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("nope")
