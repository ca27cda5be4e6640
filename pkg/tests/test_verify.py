"""Tests for the invariant-suite runner and its CLI wiring."""

import infolab.cli as cli
from infolab.measures import bz_measure, shannon
from infolab.verify import PropertyCheck, find_ordering_witness, run_all


def test_full_suite_passes():
    results = run_all(seed=42)
    failed = [check.name for check in results if not check.passed]
    assert not failed, f"failing properties: {failed}"
    assert len(results) >= 20
    assert all(check.detail for check in results)


def test_find_ordering_witness_margins():
    p, q = find_ordering_witness(step=0.02, margin=1e-6)
    assert shannon(p) < shannon(q) - 1e-6
    assert bz_measure(p) < bz_measure(q) - 1e-6
    assert abs(sum(p) - 1.0) <= 1e-9 and abs(sum(q) - 1.0) <= 1e-9


class TestVerifyCommand:
    def _patched(self, monkeypatch, results):
        calls = {}

        def fake_run_all(seed):
            calls["seed"] = seed
            return results

        monkeypatch.setattr(cli, "run_all", fake_run_all)
        return calls

    def test_all_pass_exits_zero(self, monkeypatch, capsys):
        results = [PropertyCheck("alpha", True, "ok"), PropertyCheck("beta", True, "fine")]
        calls = self._patched(monkeypatch, results)
        code = cli.parse_and_dispatch(["verify"])
        out = capsys.readouterr().out
        assert code == 0
        assert "PASS alpha: ok" in out and "PASS beta: fine" in out
        assert "2/2 properties passed" in out
        assert calls["seed"] == 42

    def test_failure_exits_one(self, monkeypatch, capsys):
        results = [PropertyCheck("alpha", True, "ok"), PropertyCheck("beta", False, "broke")]
        self._patched(monkeypatch, results)
        code = cli.parse_and_dispatch(["verify"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL beta: broke" in out
        assert "1/2 properties passed" in out

    def test_seed_flag_reaches_runner(self, monkeypatch, capsys):
        calls = self._patched(monkeypatch, [PropertyCheck("alpha", True, "ok")])
        assert cli.parse_and_dispatch(["--seed", "9", "verify"]) == 0
        capsys.readouterr()
        assert calls["seed"] == 9

    def test_env_seed_reaches_runner(self, monkeypatch, capsys):
        calls = self._patched(monkeypatch, [PropertyCheck("alpha", True, "ok")])
        monkeypatch.setenv("INFOLAB_SEED", "31415")
        assert cli.parse_and_dispatch(["verify"]) == 0
        capsys.readouterr()
        assert calls["seed"] == 31415
