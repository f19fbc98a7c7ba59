from dataclasses import replace

import networkx as nx
import pytest

from lamkernel.models.corpus import CorpusConfig
from lamkernel.models.graph import GraphStatus, GraphSummary, ReductionGraph
from lamkernel.models.term import REC, SUCC, ZERO, Abs, App, Const, Var, VarRef, apply, lam, v
from lamkernel.models.types import NAT
from lamkernel.schemas.report import lemma_results_schema
from lamkernel.utils import lemma_suite
from lamkernel.utils.lemma_suite import LEMMAS, run_suite
from lamkernel.utils.normalization import count_succ, numeral
from lamkernel.utils.substitution import Subst, identity, update


def capturing_subst(term, sigma):
    """Substitution that never renames binders."""
    if isinstance(term, Const):
        return term
    if isinstance(term, VarRef):
        return sigma(term.var)
    if isinstance(term, App):
        return App(capturing_subst(term.fun, sigma), capturing_subst(term.arg, sigma))
    return Abs(term.var, capturing_subst(term.body, update(sigma, term.var, VarRef(term.var))))


def without_timing(report):
    records = lemma_results_schema.dump(report.results)
    for record in records:
        record.pop("millis")
    return records


def test_registry_covers_both_rule_sets():
    for name in ("compat_subst", "comm_alpha", "preserves_fresh", "neutral_heads",
                 "reduct_completeness"):
        assert f"{name}[beta]" in LEMMAS
        assert f"{name}[systemt]" in LEMMAS


def test_small_system_t_suite_passes(small_config):
    report = run_suite(small_config)
    assert [r.name for r in report.results] == sorted(LEMMAS)
    failing = [line for r in report.results if not r.passed for line in r.log_lines()]
    assert failing == []
    assert report.passed
    assert report.result("rec_arithmetic").cases == 32
    assert report.result("strong_normalization").cases > 0
    assert report.result("v_succ").cases > 0


def test_small_pure_suite_passes(pure_config):
    report = run_suite(pure_config)
    assert report.total_failures == 0
    assert report.result("rec_arithmetic").cases == 0
    assert report.result("nontermination_witness").cases == 3


def test_report_is_reproducible(small_config):
    names = ["subst_lemma", "compat_subst[beta]", "typing_principality"]
    first = run_suite(small_config, names)
    second = run_suite(replace(small_config), names)
    assert without_timing(first) == without_timing(second)


def test_parallel_run_matches_serial(small_config):
    names = ["alpha_equivalence", "strong_normalization", "v_decrease", "alpha_sn"]
    serial = run_suite(small_config, names)
    parallel = run_suite(replace(small_config, workers=4), names)
    assert without_timing(serial) == without_timing(parallel)


def test_capturing_substitution_is_caught(monkeypatch, small_config):
    monkeypatch.setattr(lemma_suite, "subst", capturing_subst)
    monkeypatch.setattr(lemma_suite, "random_substitutions",
                        lambda cfg, domain: [identity(), Subst({Var(0): v(1)})])
    report = run_suite(small_config, ["subst_free_vars", "fresh_choice"])
    broken = report.result("subst_free_vars")
    assert broken.failure_count > 0
    assert broken.failures
    assert any("\\v1. v0" in failure.case for failure in broken.failures)
    assert report.result("fresh_choice").passed


def test_failures_are_truncated(monkeypatch, small_config):
    monkeypatch.setattr(lemma_suite, "subst", capturing_subst)
    monkeypatch.setattr(lemma_suite, "random_substitutions",
                        lambda cfg, domain: [Subst({Var(0): v(1)}), Subst({Var(1): v(0)})])
    cfg = replace(small_config, max_reported_failures=1)
    result = run_suite(cfg, ["subst_free_vars"]).result("subst_free_vars")
    assert result.failure_count > 1
    assert len(result.failures) == 1


def test_unknown_lemma_is_rejected(small_config):
    with pytest.raises(ValueError):
        run_suite(small_config, ["no_such_lemma"])


def test_log_lines(small_config):
    report = run_suite(small_config, ["spine_roundtrip"])
    lines = report.to_log_lines()
    assert lines[0].startswith("PASS  spine_roundtrip  cases=")
    assert "failures=0" in lines[0]
    assert lines[-1].startswith("1 lemmas, 0 failed")


@pytest.mark.slow
def test_default_corpus_has_no_failures():
    report = run_suite(CorpusConfig())
    assert report.total_failures == 0


def test_recursion_measure_on_rec_spines(small_config):
    corpus = lemma_suite.Corpus(small_config)
    corpus.typed = [(apply(lemma_suite.ADD, numeral(2), numeral(1)), NAT),
                    (apply(REC, ZERO, lam(0, lam(1, App(SUCC, v(1)))), numeral(2)), NAT)]
    recorder = lemma_suite.Recorder("recursion_measure", 5)
    LEMMAS["recursion_measure"](corpus, recorder)
    assert recorder.result.cases > 0
    assert recorder.result.failure_count == 0


def test_graph_lemmas_keep_only_summaries(small_config):
    corpus = lemma_suite.Corpus(small_config)
    for name in ("strong_normalization", "v_decrease", "v_succ"):
        recorder = lemma_suite.Recorder(name, 5)
        LEMMAS[name](corpus, recorder)
        assert recorder.result.failure_count == 0
    assert corpus._summaries
    for summary in corpus._summaries.values():
        assert isinstance(summary, GraphSummary)
        assert not any(isinstance(field, (nx.MultiDiGraph, ReductionGraph)) for field in summary)


def test_summary_matches_exploration(small_config, identity_fn):
    corpus = lemma_suite.Corpus(small_config)
    term = App(identity_fn, ZERO)
    first = corpus.summary(term)
    assert first == GraphSummary(GraphStatus.FINITE, 1)
    assert corpus.summary(term) == first
    assert ("systemt", term) in corpus._summaries
    assert corpus.explore(term).heights[term] == 1


def test_recursion_measure_reads_successor_heights(monkeypatch, small_config):
    corpus = lemma_suite.Corpus(small_config)
    corpus.typed = [(apply(REC, ZERO, lam(0, lam(1, App(SUCC, v(1)))), numeral(2)), NAT)]
    honest = corpus.summary

    def skewed(term, rules=None):
        summary = honest(term, rules)
        if isinstance(term, App) and term.fun == SUCC:
            return summary._replace(height=summary.height - count_succ(term))
        return summary

    monkeypatch.setattr(corpus, "summary", skewed)
    recorder = lemma_suite.Recorder("recursion_measure", 5)
    LEMMAS["recursion_measure"](corpus, recorder)
    assert recorder.result.failure_count > 0
    assert any("(v, ℓ)" in failure.detail for failure in recorder.result.failures)
