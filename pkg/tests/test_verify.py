"""Claim registry behaviour: coverage, selection, determinism, honest verdicts."""

from __future__ import annotations

import json

import pytest

from chromatic_zagreb.coloring import Coloring
from chromatic_zagreb.generators import generate, parse_family_spec
from chromatic_zagreb.indices import chromatic_m2, chromatic_m3
from chromatic_zagreb.verify import (
    REGISTRY,
    ClaimResult,
    CorpusConfig,
    UnknownClaimError,
    build_report,
    claim_ids,
    report_to_csv,
    report_to_json,
    run_claims,
    select_claims,
)

SMALL = CorpusConfig(max_order=5, random_graph_count=12, random_tree_count=10,
                     monotonicity_samples=1, tree_max_order=6)


class TestRegistry:
    def test_every_numbered_statement_covered(self):
        ids = claim_ids()
        required_prefixes = [
            "obs-i", "obs-ii", "obs-iii", "obs-iv", "obs-v", "obs-vi", "obs-vii",
            "obs-viii", "obs-ix", "obs-x", "obs-xi", "obs-xii",
            "prop-2.1-i", "prop-2.1-ii", "prop-2.1-iii",
            "thm-2.2-i", "thm-2.2-ii", "thm-2.2-iii",
            "cor-2.3-i", "cor-2.3-ii", "cor-2.3-iii",
            "thm-3.1-i", "thm-3.1-ii", "thm-3.1-iii",
            "lem-3.2-i", "lem-3.2-ii-max", "lem-3.2-ii-min-printed",
            "lem-3.2-ii-min-corrected", "lem-3.2-iii-printed", "lem-3.2-iii-minmax",
            "prop-3.3-i", "prop-3.3-ii", "prop-3.3-iii-printed",
            "prop-3.3-iii-corrected",
            "thm-3.4-i", "thm-3.4-ii", "thm-3.4-iii", "thm-3.4-iv", "thm-3.4-v",
            "thm-3.4-vi",
            "thm-4.2-i", "thm-4.2-ii", "thm-4.4", "prop-4.6",
            "oracle-extrema", "oracle-enumeration",
        ]
        for rid in required_prefixes:
            assert rid in ids, f"registry is missing {rid}"

    def test_must_hold_set(self):
        must = {c.claim_id for c in REGISTRY if c.must_hold}
        assert must == {f"obs-{r}" for r in
                        ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii",
                         "ix", "x", "xi", "xii")} | {"oracle-extrema",
                                                     "oracle-enumeration"}

    def test_ids_unique(self):
        ids = claim_ids()
        assert len(ids) == len(set(ids))


class TestSelection:
    def test_all(self):
        assert len(select_claims("all")) == len(REGISTRY)

    def test_range(self):
        got = [c.claim_id for c in select_claims("obs-i..obs-xii")]
        assert len(got) == 12 and got[0] == "obs-i" and got[-1] == "obs-xii"

    def test_prefix(self):
        got = [c.claim_id for c in select_claims("lem-3.2")]
        assert all(c.startswith("lem-3.2") for c in got) and len(got) == 6

    def test_comma_list_dedupes_and_keeps_registry_order(self):
        got = [c.claim_id for c in select_claims("thm-4.4,obs-i,thm-4.4")]
        assert got == ["obs-i", "thm-4.4"]

    def test_unknown(self):
        with pytest.raises(UnknownClaimError):
            select_claims("nonsense")
        with pytest.raises(UnknownClaimError):
            select_claims("obs-i..nonsense")
        with pytest.raises(UnknownClaimError):
            select_claims("obs-xii..obs-i")
        with pytest.raises(UnknownClaimError):
            select_claims("")


class TestDeterminism:
    def test_reports_byte_identical(self):
        a = report_to_json(build_report(SMALL, run_claims(SMALL, "all")))
        b = report_to_json(build_report(SMALL, run_claims(SMALL, "all")))
        assert a == b

    def test_jobs_do_not_change_results(self):
        seq = run_claims(SMALL, "obs-i..thm-3.1-iii", jobs=1)
        par = run_claims(SMALL, "obs-i..thm-3.1-iii", jobs=4)
        assert seq == par

    def test_family_list_restricts_corpus(self):
        cfg = CorpusConfig(max_order=5, random_graph_count=0, random_tree_count=5,
                           monotonicity_samples=1, tree_max_order=5,
                           families=("path", "star"))
        res = run_claims(cfg, "oracle-extrema")
        kinds = {r.instance.split(":")[0] for r in res}
        assert kinds == {"path", "star"}

    def test_seed_changes_random_instances(self):
        other = CorpusConfig(max_order=5, random_graph_count=12, random_tree_count=10,
                             monotonicity_samples=1, tree_max_order=6, seed=1)
        a = [r.actual for r in run_claims(SMALL, "thm-2.2-i")]
        b = [r.actual for r in run_claims(other, "thm-2.2-i")]
        assert a != b


class TestVerdicts:
    def test_golden_observations_all_verified(self):
        res = run_claims(SMALL, "obs-i..obs-xii")
        assert len(res) == 12
        assert all(r.verdict == "verified" for r in res)

    def test_printed_min_form_counterexample_on_k22(self):
        res = run_claims(SMALL, "lem-3.2-ii-min-printed")
        k22 = [r for r in res if r.instance == "multipartite:2,2"]
        assert len(k22) == 1 and k22[0].verdict == "counterexample"
        assert "cm2_min=0" in k22[0].expected and "cm2_min=8" in k22[0].actual

    def test_corrected_min_form_verified_everywhere(self):
        res = run_claims(SMALL, "lem-3.2-ii-min-corrected")
        assert len(res) == 31  # every sorted size tuple, r in 2..4, parts in 1..3
        assert all(r.verdict == "verified" for r in res)

    def test_minmax_assertion_refuted_at_1_1_2(self):
        res = run_claims(SMALL, "lem-3.2-iii-minmax")
        hit = [r for r in res if r.instance == "multipartite:1,1,2"]
        assert hit[0].verdict == "counterexample"
        assert "cm3=(6,7)" in hit[0].actual

    def test_printed_equal_partite_cm3_counterexample_on_k3(self):
        res = run_claims(SMALL, "prop-3.3-iii-printed")
        k3 = [r for r in res if r.instance == "equal-multipartite:1,3"]
        assert k3[0].verdict == "counterexample"
        assert "6" in k3[0].expected and "cm3=(4,4)" in k3[0].actual

    def test_thorn_skips_recorded_beyond_budget(self):
        res = run_claims(SMALL, "thm-3.4-i")
        skipped = [r for r in res if r.verdict == "skipped_budget"]
        assert skipped and all("budget" in r.actual for r in skipped)
        in_budget = [r for r in res if r.verdict != "skipped_budget"]
        assert in_budget and all(r.verdict == "verified" for r in in_budget)

    def test_prop_4_6_double_star_counterexample_recorded(self):
        cfg = CorpusConfig(max_order=7, random_graph_count=5, random_tree_count=5,
                           monotonicity_samples=1, tree_max_order=6)
        res = run_claims(cfg, "prop-4.6")
        bad = [r for r in res if r.verdict == "counterexample"]
        assert len(bad) == 1
        assert "rho = theta1*theta2 - size = 6" in bad[0].expected
        assert "5" in bad[0].actual

    def test_counterexample_witnesses_reevaluate_through_public_api(self):
        for claim, fn, field in [
            ("lem-3.2-ii-min-printed", chromatic_m2, "cm2_min="),
            ("lem-3.2-iii-minmax", chromatic_m3, "cm3=("),
        ]:
            for r in run_claims(SMALL, claim):
                if r.verdict != "counterexample":
                    continue
                assert r.witness is not None
                g = generate(parse_family_spec(r.instance))
                got = fn(g, Coloring.from_assignment(r.witness))
                assert str(got) in r.actual


class TestReportShapes:
    def test_summary_and_schema(self, schema_validator):
        res = run_claims(SMALL, "obs-i..obs-xii,thm-3.4-i")
        report = build_report(SMALL, res)
        schema_validator(report, "verify_report.schema.json")
        s = report["summary"]
        assert s["instances"] == len(res)
        assert s["verified"] + s["counterexample"] + s["skipped_budget"] == len(res)
        assert s["must_hold_failures"] == []
        assert report["config"]["seed"] == 0

    def test_must_hold_failure_listed(self):
        fake = [ClaimResult("oracle-extrema", "x", "e", "a", "counterexample", True)]
        report = build_report(SMALL, fake)
        assert report["summary"]["must_hold_failures"] == ["oracle-extrema"]

    def test_csv(self):
        res = run_claims(SMALL, "obs-i")
        text = report_to_csv(res)
        lines = text.strip().split("\n")
        assert lines[0].startswith("claim_id,instance")
        assert len(lines) == 2 and '"obs-i"' in lines[1]

    def test_json_round_trips(self):
        res = run_claims(SMALL, "obs-i..obs-iii")
        text = report_to_json(build_report(SMALL, res))
        assert json.loads(text)["summary"]["verified"] == 3
