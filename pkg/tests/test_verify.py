"""The verification suite and the command-line interface."""

import json
from math import factorial

import numpy as np
import pytest

from doubleforms.cli import main
from doubleforms.forms import contract, kn_product, metric, metric_power
from doubleforms.random_tensors import random_bianchi_22
from doubleforms.tensorio import save_form
from doubleforms.verify import IDENTITIES, SuiteConfig, run_suite
from doubleforms import weitzenboeck as wz
from doubleforms.exterior import AlgebraContext


QUICK = dict(n_min=5, n_max=5, seeds=2, trials=10)


def test_suite_quick_run_passes():
    # n = 5 avoids the half-dimension cells where the order-n/2 operator
    # genuinely has a kernel and the injectivity claim fails
    report = run_suite(SuiteConfig(**QUICK))
    bad = [r for r in report.records if not r.passed]
    assert not bad, bad[:3]
    assert report.passed


def test_suite_covers_all_identities():
    # even dimensions are needed for the half-dimension (tachibana) cells
    report = run_suite(SuiteConfig(n_min=4, n_max=6, seeds=1, trials=5))
    seen = {r.identity for r in report.records}
    assert seen == set(IDENTITIES)


def test_suite_reports_known_kernel_cells():
    cfg = SuiteConfig(n_min=4, n_max=4, seeds=1, trials=5,
                      identities=("weitzenboeck_injectivity",))
    report = run_suite(cfg)
    bad = [r for r in report.records if not r.passed]
    assert [(r.n, r.p) for r in bad] == [(4, 2)]
    assert "n = 2p" in bad[0].note


def test_suite_determinism():
    cfg = SuiteConfig(**QUICK)
    a = run_suite(cfg).to_json()
    b = run_suite(cfg).to_json()
    assert a == b
    assert "timing" not in a


def test_different_seeds_differ():
    cfg1 = SuiteConfig(n_min=4, n_max=4, seeds=1, trials=5, base_seed=1,
                       identities=("closed_form",))
    cfg2 = SuiteConfig(n_min=4, n_max=4, seeds=1, trials=5, base_seed=2,
                       identities=("closed_form",))
    r1 = run_suite(cfg1).records[0].residual
    r2 = run_suite(cfg2).records[0].residual
    assert r1 != r2


def test_mutation_corrupted_coefficient_fails(monkeypatch):
    # a closed form with -2 drifted to -1.9 must trip the main comparison
    def corrupted(omega, p):
        from doubleforms.forms import as_form22

        w = as_form22(omega)
        ctx = w.ctx
        part = kn_product(metric(ctx), contract(w)) / (p - 1) - 1.9 * w
        return kn_product(part, metric_power(p - 2, ctx)) / factorial(p - 2)

    monkeypatch.setattr(wz, "np_formula", corrupted)
    cfg = SuiteConfig(n_min=4, n_max=4, seeds=2, trials=5, identities=("closed_form",))
    report = run_suite(cfg)
    assert not report.passed
    assert all(not r.passed for r in report.records)


def test_fitted_factor_diagnostic(monkeypatch):
    # a closed form off by a constant factor is reported with that factor
    true_rhs = wz.np_contraction_rhs

    def half_rhs(omega, p, k):
        return 0.5 * true_rhs(omega, p, k)

    monkeypatch.setattr(wz, "np_contraction_rhs", half_rhs)
    cfg = SuiteConfig(n_min=4, n_max=4, seeds=2, trials=5, identities=("contraction_orders",))
    report = run_suite(cfg)
    assert not report.passed
    diag = [r for r in report.records if "systematic mismatch" in r.note]
    assert diag, "expected a fitted-factor diagnostic record"
    assert diag[0].residual == pytest.approx(2.0, rel=1e-6)


def test_config_validation():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(n_min=6, n_max=4))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(n_min=2, n_max=5))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(seeds=0))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(trials=0))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(tolerance=0.0))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(identities=("no_such_identity",)))


# -- command line -----------------------------------------------------------


def _quick_cli(extra=()):
    return ["verify", "--n-min", "5", "--n-max", "5", "--seeds", "1",
            "--trials", "5", *extra]


def test_cli_verify_passes(capsys):
    assert main(_quick_cli()) == 0
    out = capsys.readouterr().out
    assert "suite: PASS" in out


def test_cli_verify_json(capsys):
    assert main(_quick_cli(["--json"])) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["passed"] is True
    assert doc["config"]["n_min"] == 5


def test_cli_verify_identity_failure_exit_code(capsys):
    # the n = 4 sweep includes the genuine half-dimension kernel cell
    code = main(["verify", "--n-min", "4", "--n-max", "4", "--seeds", "1",
                 "--trials", "5", "--identity", "weitzenboeck_injectivity"])
    assert code == 1


def test_cli_usage_errors(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["weitzenboeck", "--p", "2"]) == 2  # missing --input
    assert main(["verify", "--n-min", "9"]) == 2


@pytest.fixture()
def tensor_file(tmp_path):
    path = tmp_path / "t.json"
    save_form(random_bianchi_22(3, AlgebraContext(5)), path)
    return str(path)


def test_cli_weitzenboeck_both_methods(tensor_file, tmp_path, capsys):
    out_path = str(tmp_path / "n2.json")
    assert main(["weitzenboeck", "--input", tensor_file, "--p", "2",
                 "--output", out_path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert main(["weitzenboeck", "--input", tensor_file, "--p", "2",
                 "--method", "definition", "--json"]) == 0
    doc2 = json.loads(capsys.readouterr().out)
    a = np.asarray(doc["matrix"])
    b = np.asarray(doc2["matrix"])
    assert np.max(np.abs(a - b)) <= 1e-9 * max(np.linalg.norm(a), 1.0)
    saved = json.loads((tmp_path / "n2.json").read_text())
    assert saved["p"] == 2


def test_cli_weitzenboeck_formula_range(tensor_file, capsys):
    assert main(["weitzenboeck", "--input", tensor_file, "--p", "4"]) == 2
    err = capsys.readouterr().err
    assert "np_definition" in err


def test_cli_spectrum(tensor_file, capsys):
    assert main(["spectrum", "--input", tensor_file, "--p", "2",
                 "--samples", "20", "--seed", "1", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["min_eigenvalue"] <= doc["min_sampled_sectional"] + 1e-10
    assert len(doc["eigenvalues"]) == 10


def test_cli_decompose(tensor_file, capsys):
    assert main(["decompose", "--input", tensor_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["omega2_norm"] > 0
    assert "scalar_curvature" in doc


def test_cli_sectional(tensor_file, capsys):
    assert main(["sectional", "--input", tensor_file, "--p", "3",
                 "--samples", "15", "--seed", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["values"]) == 15
    assert doc["min"] <= doc["mean"] <= doc["max"]


def test_cli_pcurvature(tensor_file, capsys):
    assert main(["pcurvature", "--input", tensor_file, "--p", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["eigenvalues"]) == 10


def test_cli_strict_flag(tmp_path, capsys):
    path = tmp_path / "witness.json"
    path.write_text(json.dumps({
        "n": 4,
        "entries": [{"ij": [1, 2], "kl": [3, 4], "value": 1.0}],
    }))
    assert main(["decompose", "--input", str(path), "--strict"]) == 2
    assert main(["decompose", "--input", str(path), "--project", "--json"]) == 0


def test_cli_missing_file():
    assert main(["decompose", "--input", "/nonexistent/t.json"]) == 2
