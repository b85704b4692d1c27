"""Law language: golden parser corpus, canonical printing, and both evaluators."""

import json
from importlib import resources
from pathlib import Path

import pytest

from ginvlab.engine import InverseKind
from ginvlab.laws import (
    LawSyntaxError,
    UnknownKindError,
    evaluate_law,
    necessity_probe,
    parse_law,
    print_law,
)
from ginvlab.rings import ring_build
from ginvlab.sampling import MatrixSampler

CORPUS = json.loads(
    (Path(__file__).parent / "data" / "law_corpus.json").read_text(encoding="utf-8")
)
LAW_DIR = resources.files("ginvlab") / "laws"
LAW_FILES = sorted(p.name for p in LAW_DIR.iterdir() if p.name.endswith(".law"))


def _law_text(name):
    return (LAW_DIR / name).read_text(encoding="utf-8")


def test_corpus_is_large_enough():
    assert len(LAW_FILES) + len(CORPUS["valid"]) + len(CORPUS["malformed"]) >= 30
    assert len(LAW_FILES) == 15


@pytest.mark.parametrize("filename", LAW_FILES)
def test_shipped_law_files_parse_and_round_trip(filename):
    law = parse_law(_law_text(filename))
    printed = print_law(law)
    assert print_law(parse_law(printed)) == printed
    assert law.variables


@pytest.mark.parametrize(
    "case", CORPUS["valid"], ids=[c["name"] for c in CORPUS["valid"]]
)
def test_corpus_valid(case):
    law = parse_law(case["text"])
    assert print_law(law) == case["printed"]
    assert len(law.warnings) == case["warnings"]
    # the canonical form is a fixpoint of parse-then-print
    assert print_law(parse_law(case["printed"])) == case["printed"]


@pytest.mark.parametrize(
    "case", CORPUS["malformed"], ids=[c["name"] for c in CORPUS["malformed"]]
)
def test_corpus_malformed_positions(case):
    with pytest.raises(LawSyntaxError) as excinfo:
        parse_law(case["text"])
    err = excinfo.value
    assert (err.line, err.col) == (case["line"], case["col"])
    assert case["contains"] in str(err)
    if case.get("unknown_kind"):
        assert isinstance(err, UnknownKindError)
        assert err.expected  # names the legal kinds


def test_variables_in_first_mention_order():
    law = parse_law("b*a = 0 => a^{mp}*c in mp(b)")
    assert law.variables == ("b", "a", "c")


# -- exhaustive evaluation on rings -------------------------------------------------


@pytest.fixture(scope="module")
def z6():
    return ring_build("Zn:6")


def test_trivial_membership_counts_mp_possessors(z6):
    report = evaluate_law("a^{mp} in mp(a)", z6)
    assert report.status == "pass"
    possessors = [a for a in z6.elements() if z6.possesses(a, InverseKind.MP)]
    assert report.bindings_satisfying == len(possessors) > 0


def test_wd_additivity_passes_on_z6(z6):
    report = evaluate_law(_law_text("wd_add.law"), z6)
    assert report.status == "pass"
    assert report.bindings_satisfying == 78
    assert report.conclusion_failures == 0


def test_unhypothesized_additivity_fails_on_z5():
    ring = ring_build("Zn:5")
    report = evaluate_law(_law_text("wd_add_unhyp.law"), ring, budget=2)
    assert report.status == "fail"
    assert report.conclusion_failures == 44
    assert len(report.counterexamples) == 2
    assert report.budget_exhausted
    cx = report.counterexamples[0]
    assert set(cx) == {"variables", "witnesses"}
    full = evaluate_law(_law_text("wd_add_unhyp.law"), ring, budget=1000)
    assert {"a": 1, "b": 1} in [c["variables"] for c in full.counterexamples]
    assert not full.budget_exhausted


def test_vacuous_hypotheses_are_reported_distinctly(z6):
    report = evaluate_law("a = a + 1 => a = 0", z6)
    assert report.status == "vacuous"
    assert report.bindings_satisfying == 0
    assert report.passed  # vacuous is not a counterexample


def test_rewrite_warning_surfaces_in_report(z6):
    report = evaluate_law("(a+b)^{wd} = a^{wd} + b^{wd}", z6)
    assert any("rewritten" in w for w in report.warnings)


def test_report_json_shape(z6):
    data = evaluate_law(_law_text("wd_add.law"), z6).to_json()
    assert data["carrier"] == {"type": "ring", "spec": "Zn:6", "size": 6}
    assert data["mode"] == "exhaustive"
    assert data["seed"] == 0 and data["budget"] == 10
    assert data["status"] == "pass"
    assert "counterexamples" in data and "hits" not in data


def test_mode_and_carrier_validation(z6):
    with pytest.raises(ValueError):
        evaluate_law("a = a", z6, mode="sampled")
    with pytest.raises(ValueError):
        evaluate_law("a = a", MatrixSampler(2, "Q"), mode="exhaustive")
    with pytest.raises(ValueError):
        evaluate_law("a = a", z6, mode="turbo")


# -- sampled evaluation on matrices ---------------------------------------------------


def test_sampled_idempotent_law_is_non_vacuous():
    sampler = MatrixSampler(2, "Q", seed=1, strategy="commuting_projectors")
    report = evaluate_law(_law_text("wd_idemp.law"), sampler, mode="sampled", samples=40)
    assert report.status == "pass"
    assert report.bindings_satisfying > 0
    assert report.carrier["type"] == "matrix"


def test_sampled_runs_are_deterministic_and_thread_independent(monkeypatch):
    def run():
        sampler = MatrixSampler(3, "Q", seed=7, strategy="mixed")
        return evaluate_law(
            "a*a^{mp}*a = a", sampler, mode="sampled", samples=60
        ).to_json()

    base = run()
    again = run()
    assert base == again
    monkeypatch.setenv("GINV_THREADS", "4")
    threaded = run()
    assert threaded == base


def test_sampled_failure_records_matrix_counterexamples():
    sampler = MatrixSampler(2, "Q", seed=0, strategy="mixed")
    report = evaluate_law(
        _law_text("wd_rol_unhyp.law"), sampler, mode="sampled", samples=60
    )
    assert report.status == "fail"
    cx = report.counterexamples[0]
    assert cx["variables"]["a"]["field"] == "Q"
    assert "witnesses" in cx


# -- necessity probe ---------------------------------------------------------------


def test_probe_requires_hypotheses_and_a_ring(z6):
    with pytest.raises(ValueError):
        necessity_probe("a^{wd} in wd(a)", z6)
    with pytest.raises(ValueError):
        necessity_probe(_law_text("wd_rol_a.law"), MatrixSampler(2, "Q"))


def test_probe_is_empty_on_commutative_z6(z6):
    report = necessity_probe(_law_text("wd_rol_a.law"), z6)
    assert report.status == "empty"
    assert report.conclusion_failures == 0
    assert report.to_json()["hits"] == []


def test_probe_finds_hypothesis_free_hits_on_m2z2():
    report = necessity_probe(_law_text("wd_rol_a.law"), ring_build("M2:Z2"), budget=12)
    assert report.status == "nonempty"
    assert report.conclusion_failures == 1266
    assert 0 < len(report.counterexamples) <= 12
    data = report.to_json()
    assert data["hits_found"] == 1266
    assert "counterexamples" not in data
