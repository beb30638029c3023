from __future__ import annotations

import json

import pytest

from rees_commute.errors import InputError
from rees_commute.suite import (
    CHECK_IDS,
    DEFAULT_FIXTURE,
    SuiteFixture,
    load_fixture,
    run_suite,
    summarize,
)


def small(**kw):
    obj = {"groups": ["C2", "S3"], "index_pairs": [[2, 1], [1, 2]], "seeds": [0, 1], "checks": "all"}
    obj.update(kw)
    return SuiteFixture.from_json(obj)


def test_empty_matrix():
    assert run_suite(SuiteFixture.from_json({"groups": []})) == []


def test_small_matrix_all_pass():
    results = run_suite(small())
    assert results and all(r.verdict == "pass" for r in results)
    summary = summarize(results)
    assert summary["pass"] == summary["total"] == len(results)


def test_order_is_deterministic_and_parallel_safe():
    fx = small(attainability=[2, 3])
    seq = [r.to_json() for r in run_suite(fx)]
    par = [r.to_json() for r in run_suite(fx, workers=3)]
    assert json.dumps(seq) == json.dumps(par)
    assert seq[-1]["check_id"] == "attainability"


def test_over_cap_instance_skipped():
    results = run_suite(small(groups=["S5"]))
    assert [r.verdict for r in results][:1] == ["skipped"]
    assert "SizeLimitExceeded" in results[0].reason


def test_group_one_by_one_preconditions_become_skips():
    results = run_suite(small(groups=["S3"], index_pairs=[[1, 1]], checks=["center_empty", "girth"]))
    verdicts = {(r.check_id, r.instance): r.verdict for r in results}
    assert verdicts[("center_empty", "M(S3;1,1;seed=0)")] == "skipped"
    assert verdicts[("girth", "group S3")] == "pass"


def test_fault_injection_fails_with_witness():
    results = run_suite(small(groups=["S3"], checks=["commutation_lemma"], fault="flip_entry"))
    assert results and all(r.verdict == "fail" and r.witness for r in results)


def test_fixture_validation():
    with pytest.raises(InputError):
        SuiteFixture.from_json({"checks": ["bogus"]})
    with pytest.raises(InputError):
        SuiteFixture.from_json({"index_pairs": [[0, 1]]})
    with pytest.raises(InputError):
        SuiteFixture.from_json({"seeds": [-1]})
    with pytest.raises(InputError):
        SuiteFixture.from_json({"wat": 1})
    with pytest.raises(InputError):
        SuiteFixture.from_json({"fault": "meteor"})
    with pytest.raises(InputError):
        SuiteFixture.from_json([])


def test_fast_keeps_first_seed():
    assert small().fast().seeds == (0,)


def test_default_fixture_and_file(tmp_path):
    fx = load_fixture(None)
    assert fx.checks == CHECK_IDS and len(fx.groups) == 10
    path = tmp_path / "f.json"
    path.write_text(json.dumps(DEFAULT_FIXTURE))
    assert load_fixture(path) == fx
    path.write_text("nope")
    with pytest.raises(InputError):
        load_fixture(path)
