import json
import re

import pytest
from click.testing import CliRunner

from src.cli.commands import RunOptions, explain_vector, main, parse_vector, run
from src.cli.report import layer_table, render_report
from src.reliability.exact import exact_reliability
from src.cli.problem import parse_problem
from src.utils.errors import StateError
from src.utils.config import save_config

VECTOR_ROW = re.compile(r"^\s*(\d+)\s+\(1,")


@pytest.fixture
def runner():
    return CliRunner()


class TestReport:

    def test_crisp_chain(self, runner, problem_path):
        result = runner.invoke(main, [problem_path("chains_crisp.rel")])
        assert result.exit_code == 0
        assert result.output.endswith("R = 0.995984\n")
        assert "connected vectors: 37" in result.output
        assert "total vectors: 64" in result.output

    def test_trace_prints_every_vector(self, runner, problem_path):
        result = runner.invoke(main, [problem_path("chains_crisp.rel"), "--trace"])
        assert result.exit_code == 0
        indices = [int(m.group(1)) for m in map(VECTOR_ROW.match, result.output.splitlines()) if m]
        assert indices == list(range(1, 65))
        assert "0.585325" in result.output

    def test_monte_carlo_line(self, runner, problem_path):
        result = runner.invoke(main, [problem_path("chains_crisp.rel"), "--mc", "20000", "--seed", "7"])
        assert result.exit_code == 0
        assert re.search(r"monte carlo: estimate = 0\.99\d+, std_error = \S+, samples = 20000, seed = 7",
                         result.output)
        assert result.output.endswith("R = 0.995984\n")

    def test_deterministic(self, runner, problem_path):
        args = [problem_path("chains_aon.rel"), "--trace", "--mc", "5000", "--seed", "3"]
        assert runner.invoke(main, args).output == runner.invoke(main, args).output

    def test_fuzzy_chain_resolution_table(self, runner, problem_path):
        result = runner.invoke(main, [problem_path("chains_aon.rel")])
        assert result.exit_code == 0
        assert "Uncertainty components" in result.output
        assert "0.552239" in result.output
        assert "0.995000" in result.output
        assert "0.987185" in result.output
        assert "[0.0666667α, 0.233333 - 0.166667α]" in result.output
        assert "fuzzy" in result.output

    def test_vector_explanation(self, runner, problem_path):
        result = runner.invoke(main, [problem_path("bridge_aoa.rel"), "--vector", "1,1,0,1,1,0"])
        assert result.exit_code == 0
        assert "Layered search for X = (1, 1, 0, 1, 1, 0)" in result.output
        assert "{2, 3}" in result.output
        assert "X is connected" in result.output

    def test_bad_vector(self, runner, problem_path):
        result = runner.invoke(main, [problem_path("bridge_aoa.rel"), "--vector", "1,1,0"])
        assert result.exit_code == 1
        assert "Error" in result.output

    def test_json_summary(self, runner, problem_path, tmp_path):
        target = tmp_path / "out" / "summary.json"
        result = runner.invoke(main, [problem_path("chains_aon.rel"), "--json", str(target)])
        assert result.exit_code == 0
        summary = json.loads(target.read_text())
        assert summary['summary']['total_vectors'] == 64
        assert 'exact' in summary['timings']
        assert summary['results']['mode'] == 'aon'
        assert summary['results']['resolution']['4']['reliability'] == pytest.approx(0.995, abs=1e-6)

    def test_workers_do_not_change_the_result(self, runner, problem_path):
        single = runner.invoke(main, [problem_path("chains_crisp.rel")])
        several = runner.invoke(main, [problem_path("chains_crisp.rel"), "--workers", "3"])
        assert single.output == several.output


class TestErrors:

    def test_bad_problem_file(self, runner, tmp_path):
        bad = tmp_path / "bad.rel"
        bad.write_text("mode aon\nnodes 4\narc 1 2\narc 2 4\nratings 2 = XH\n")
        result = runner.invoke(main, [str(bad)])
        assert result.exit_code == 1
        assert "Error" in result.output
        assert "XH" in result.output

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(main, [str(tmp_path / "nope.rel")])
        assert result.exit_code == 1

    def test_size_limit(self, runner, problem_path):
        result = runner.invoke(main, [problem_path("chains_crisp.rel"), "--max-bits", "4"])
        assert result.exit_code == 1
        assert "max-bits" in result.output


class TestConfiguration:

    def test_config_file_sets_defaults(self, runner, problem_path, tmp_path):
        config_path = tmp_path / "relcalc.yaml"
        save_config(str(config_path), {
            'report': {'precision': 2, 'trace': True},
            'logging': {'event_log': str(tmp_path / "events.json")},
        })
        result = runner.invoke(main, [problem_path("chains_crisp.rel"), "--config", str(config_path)])
        assert result.exit_code == 0
        assert result.output.endswith("R = 0.995984\n")
        assert "Vectors" in result.output
        # precision applies to the table columns only
        assert re.search(r"\b0\.59\b", result.output)
        assert "0.585325" not in result.output
        events = json.loads((tmp_path / "events.json").read_text())
        assert [event['stage'] for event in events] == ['preprocess', 'enumerate']

    def test_missing_config(self, runner, problem_path, tmp_path):
        result = runner.invoke(main, [problem_path("chains_crisp.rel"), "--config", str(tmp_path / "x.yaml")])
        assert result.exit_code == 1

    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert "relcalc" in result.output


class TestLibraryEntryPoints:

    def test_run_returns_report_text(self, problem_path):
        with open(problem_path("chains_crisp.rel")) as f:
            problem = parse_problem(f.read())
        text = run(problem, RunOptions())
        assert text.endswith("R = 0.995984\n")

    @pytest.mark.parametrize("text", ["1,1,0,1,1,0", "1 1 0 1 1 0", "110110"])
    def test_vector_formats(self, bridge, text):
        assert parse_vector(text, bridge).bits == (1, 1, 0, 1, 1, 0)

    def test_vector_rejects_other_digits(self, bridge):
        with pytest.raises(StateError):
            parse_vector("1,2,0,1,1,0", bridge)

    def test_explain_vector(self, problem_path):
        with open(problem_path("bridge_aoa.rel")) as f:
            problem = parse_problem(f.read())
        vector, trace = explain_vector(problem, (0, 1, 1, 1, 0, 0))
        assert str(vector) == "(0, 1, 1, 1, 0, 0)"
        frame = layer_table(trace)
        assert list(frame['Q_i']) == ["{1}", "{3, 4}", "{2}"]
        assert list(frame['Q_i+1']) == ["{3, 4}", "{2}", "{}"]
        assert frame['remark'].iloc[-1] == "X is disconnected"


class TestExitStatus:

    def test_malformed_config(self, runner, problem_path, tmp_path):
        config_path = tmp_path / "broken.yaml"
        config_path.write_text("report: [unclosed\n")
        result = runner.invoke(main, [problem_path("chains_crisp.rel"), "--config", str(config_path)])
        assert result.exit_code == 1
        assert isinstance(result.exception, SystemExit)
        assert "Error" in result.output
        assert "R = " not in result.output

    def test_non_numeric_config_value(self, runner, problem_path, tmp_path):
        config_path = tmp_path / "bad_value.yaml"
        config_path.write_text("report:\n  precision: many\n")
        result = runner.invoke(main, [problem_path("chains_crisp.rel"), "--config", str(config_path)])
        assert result.exit_code == 1
        assert isinstance(result.exception, SystemExit)
        assert "Error" in result.output

    def test_unwritable_json_target(self, runner, problem_path, tmp_path):
        blocker = tmp_path / "plain_file"
        blocker.write_text("")
        result = runner.invoke(main, [problem_path("chains_crisp.rel"), "--json", str(blocker / "s.json")])
        assert result.exit_code == 1
        assert isinstance(result.exception, SystemExit)
        assert "Error" in result.output
        assert "R = " not in result.output

    def test_report_line_ignores_precision(self, chain, chain_dist):
        report = exact_reliability(chain, chain_dist)
        text = render_report(report, chain_dist, chain.mode, precision=2)
        assert text.endswith("R = 0.995984\n")
