"""Benchmark harness: corpus loading, experiment runs, report rendering."""

import json

import pytest

from avlkit import (
    BenchmarkReport,
    Corpus,
    CorpusError,
    ExperimentConfig,
    ReplacementStrategy,
    load_corpus,
    render_report,
    run_experiment,
)


@pytest.fixture
def small_corpus():
    return Corpus.from_words([f"w{i:03d}" for i in range(40)])


def small_config(**overrides):
    defaults = dict(iterations=3, seed=5)
    defaults.update(overrides)
    return ExperimentConfig(**defaults)


class TestLoadCorpus:
    def test_dedup_and_blank_removal(self, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("a\nb\na\n\n", encoding="utf-8")
        corpus = load_corpus(path)
        assert corpus.words == ("a", "b")
        assert corpus.original_count == 4
        assert corpus.source_path == str(path)
        assert len(corpus.sha256) == 64

    def test_whitespace_trimmed(self, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text("  spaced  \nplain\n", encoding="utf-8")
        assert load_corpus(path).words == ("spaced", "plain")

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("\n\n  \n", encoding="utf-8")
        with pytest.raises(CorpusError):
            load_corpus(path)

    def test_missing_file_raises_oserror(self, tmp_path):
        with pytest.raises(OSError):
            load_corpus(tmp_path / "nope.txt")

    def test_from_words_requires_content(self):
        with pytest.raises(CorpusError):
            Corpus.from_words(["", "  "])


class TestExperimentConfig:
    def test_rejects_bad_values(self):
        with pytest.raises(ValueError):
            ExperimentConfig(iterations=0)
        with pytest.raises(ValueError):
            ExperimentConfig(strategies=())
        with pytest.raises(ValueError):
            ExperimentConfig(sample_size=0)

    def test_sample_size_above_corpus_rejected(self, small_corpus):
        with pytest.raises(ValueError):
            run_experiment(small_corpus, small_config(sample_size=999))


class TestRunExperiment:
    def test_single_word_corpus_has_no_rotations(self):
        corpus = Corpus.from_words(["solo"])
        report = run_experiment(corpus, ExperimentConfig(iterations=1, seed=1))
        for row in report.rows:
            assert row.delete_totals.sum == 0
            assert row.insert_totals.sum == 0
        assert report.percentages is None  # zero baselines: no comparison row

    def test_insert_phase_identical_across_strategies(self, small_corpus):
        report = run_experiment(small_corpus, small_config())
        totals = {row.insert_totals.as_dict()["sum"] for row in report.rows}
        dicts = [row.insert_totals.as_dict() for row in report.rows]
        assert dicts[0] == dicts[1] == dicts[2]
        assert len(totals) == 1

    def test_averages_are_totals_over_iterations(self, small_corpus):
        config = small_config()
        report = run_experiment(small_corpus, config)
        for row in report.rows:
            assert row.delete_average.ll == row.delete_totals.ll / config.iterations
            assert row.delete_average.sum == pytest.approx(
                row.delete_totals.sum / config.iterations)

    def test_identical_config_gives_identical_reports(self, small_corpus):
        a = run_experiment(small_corpus, small_config())
        b = run_experiment(small_corpus, small_config())
        assert render_report(a, "csv") == render_report(b, "csv")
        assert render_report(a, "json") == render_report(b, "json")

    def test_different_seeds_change_counts(self, small_corpus):
        a = run_experiment(small_corpus, small_config(seed=5))
        b = run_experiment(small_corpus, small_config(seed=6))
        assert render_report(a, "csv") != render_report(b, "csv")

    def test_row_order_follows_config(self, small_corpus):
        config = small_config(strategies=(
            ReplacementStrategy.OPTIMUM,
            ReplacementStrategy.RIGHTMOST_OF_LEFT,
            ReplacementStrategy.LEFTMOST_OF_RIGHT,
        ))
        report = run_experiment(small_corpus, config)
        assert [row.strategy for row in report.rows] == list(config.strategies)
        assert report.percentages is not None  # all three present, any order

    def test_single_strategy_run_has_no_percentage_row(self, small_corpus):
        config = small_config(strategies=(ReplacementStrategy.OPTIMUM,))
        report = run_experiment(small_corpus, config)
        assert [row.strategy for row in report.rows] == [ReplacementStrategy.OPTIMUM]
        assert report.percentages is None

    def test_sample_size_is_deterministic_subset(self, small_corpus):
        a = run_experiment(small_corpus, small_config(sample_size=10))
        b = run_experiment(small_corpus, small_config(sample_size=10))
        assert render_report(a, "json") == render_report(b, "json")
        assert a.sample_size == 10

    def test_config_echo_matches_inputs(self, small_corpus):
        report = run_experiment(small_corpus, small_config())
        assert report.seed == 5
        assert report.iterations == 3
        assert report.corpus_sha256 == small_corpus.sha256
        assert report.sample_size is None

    def test_midrun_invariant_failure_aborts(self, small_corpus, monkeypatch):
        import avlkit.bench
        from avlkit import StructuralError

        class LyingTree(avlkit.bench.AvlTree):
            def delete(self, key, strategy=None, trace=None):
                return False, []  # pretends every word is already gone

        monkeypatch.setattr(avlkit.bench, "AvlTree", LyingTree)
        with pytest.raises(StructuralError):
            run_experiment(small_corpus, small_config())


class TestRenderReport:
    def test_table_contains_all_row_labels(self, small_corpus):
        report = run_experiment(small_corpus, small_config())
        table = render_report(report, "table")
        for label in ["Rightmost of Left", "Leftmost of Right", "Optimum", "Percentage"]:
            assert label in table
        assert "Algorithm" in table and "Sum" in table

    def test_json_round_trips(self, small_corpus):
        report = run_experiment(small_corpus, small_config())
        parsed = BenchmarkReport.from_dict(json.loads(render_report(report, "json")))
        assert parsed == report

    def test_json_config_schema(self, small_corpus):
        report = run_experiment(small_corpus, small_config())
        data = json.loads(render_report(report, "json"))
        assert set(data["config"]) == {"seed", "iterations", "corpus_sha256", "sample_size"}
        assert set(data) == {"config", "rows", "percentages"}
        for row in data["rows"]:
            assert set(row) == {"strategy", "insert", "delete"}
            for phase in ("insert", "delete"):
                assert set(row[phase]) == {"totals", "averages"}
                assert set(row[phase]["totals"]) == {"ll", "lr", "rl", "rr", "sum"}

    def test_csv_shape(self, small_corpus):
        report = run_experiment(small_corpus, small_config())
        lines = render_report(report, "csv").splitlines()
        assert lines[0].startswith("#")
        assert lines[1] == "algorithm,ll,lr,rl,rr,sum"
        body = lines[2:]
        assert len(body) == 4
        assert body[0].startswith("Rightmost of Left,")
        assert body[3].startswith("percentage,")
        for line in body:
            assert len(line.split(",")) == 6

    def test_csv_percentage_row_is_full_precision(self, small_corpus):
        report = run_experiment(small_corpus, small_config())
        percentage_line = render_report(report, "csv").splitlines()[-1]
        values = [float(v) for v in percentage_line.split(",")[1:]]
        assert values == [report.percentages.ll, report.percentages.lr,
                          report.percentages.rl, report.percentages.rr,
                          report.percentages.sum]

    def test_unknown_format_rejected(self, small_corpus):
        report = run_experiment(small_corpus, small_config())
        with pytest.raises(ValueError):
            render_report(report, "xml")
