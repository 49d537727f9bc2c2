import csv
import io
import json

import pytest

from muclab.experiment import (ExperimentConfig, GrowthRecord, GrowthReport,
                               emit_report, render_growth_figure,
                               run_growth_experiment)


class TestConfig:
    def test_defaults(self):
        cfg = ExperimentConfig("chain", 2, 5)
        assert cfg.budget == 1 << 24 and cfg.clause_cap == 1 << 16

    def test_empty_range_rejected(self):
        with pytest.raises(ValueError):
            ExperimentConfig("chain", 5, 4)

    def test_bad_family(self):
        with pytest.raises(ValueError):
            ExperimentConfig("fibonacci", 1, 2)

    def test_bad_cap(self):
        with pytest.raises(ValueError):
            ExperimentConfig("chain", 1, 2, clause_cap=0)

    def test_from_json(self):
        cfg = ExperimentConfig.from_json(
            '{"family": "chain", "n_min": 2, "n_max": 4, "clause_cap": 100}')
        assert cfg == ExperimentConfig("chain", 2, 4, clause_cap=100)


class TestRun:
    def test_chain_linear(self):
        rep = run_growth_experiment(ExperimentConfig("chain", 2, 8))
        assert [r.n for r in rep.records] == list(range(2, 9))
        for r in rep.records:
            assert r.output_clauses == r.n + 2
            assert r.verified and not r.cap_hit
        assert len(rep.confirmed()) == 7

    def test_parity_growth(self):
        rep = run_growth_experiment(ExperimentConfig("parity-contradiction", 3, 5))
        for r in rep.records:
            assert r.verified and r.output_clauses >= 1 << (r.n - 1)

    def test_cap_hit_flagged_not_fatal(self):
        rep = run_growth_experiment(
            ExperimentConfig("parity-contradiction", 3, 5, clause_cap=9))
        flags = [r.cap_hit for r in rep.records]
        assert flags == [False, True, True]  # n=3 needs no cuts
        assert not rep.records[1].verified
        assert rep.confirmed() == [rep.records[0]]

    def test_determinism(self):
        cfg = ExperimentConfig("parity-contradiction", 3, 4)
        a = run_growth_experiment(cfg)
        b = run_growth_experiment(cfg)
        strip = lambda r: (r.n, r.input_clauses, r.input_vars, r.output_clauses,
                           r.steps, r.verified, r.cap_hit)
        assert [strip(r) for r in a.records] == [strip(r) for r in b.records]


class TestEmit:
    def _report(self):
        cfg = ExperimentConfig("chain", 2, 3)
        return GrowthReport(cfg, [
            GrowthRecord(2, 4, 3, 4, 6, 1.5, True, False),
            GrowthRecord(3, 5, 4, 0, 0, 0.2, False, True),
        ])

    def test_csv_shape(self):
        text = emit_report(self._report(), "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["n", "input_clauses", "input_vars", "output_clauses",
                           "steps", "wall_time_ms", "verified", "cap_hit"]
        assert rows[1][:5] == ["2", "4", "3", "4", "6"]
        assert rows[2][-1] == "true"  # cap-hit row retained

    def test_json_mirrors_csv(self):
        rep = self._report()
        doc = json.loads(emit_report(rep, "json"))
        rows = list(csv.DictReader(io.StringIO(emit_report(rep, "csv"))))
        for rec, row in zip(doc["records"], rows):
            for key in ("n", "input_clauses", "output_clauses", "steps"):
                assert rec[key] == int(row[key])
            assert rec["verified"] == (row["verified"] == "true")
            assert rec["cap_hit"] == (row["cap_hit"] == "true")

    def test_summary_excludes_flagged(self):
        rep = self._report()
        assert "n=2" in rep.summary() and "n=3" not in rep.summary()
        assert "1 points" in rep.summary()

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report(self._report(), "xml")


class TestFigure:
    def test_renders_png(self, tmp_path):
        rep = run_growth_experiment(ExperimentConfig("chain", 2, 4))
        out = tmp_path / "growth.png"
        render_growth_figure([rep], str(out))
        assert out.stat().st_size > 0
