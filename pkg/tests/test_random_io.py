"""Generators and the tensor file format."""

import json

import numpy as np
import pytest

from doubleforms.exterior import AlgebraContext
from doubleforms.forms import (
    CurvatureTensor,
    bianchi_residual,
    contract,
    contract_iter,
    kn_product,
    metric,
    metric_power,
    sectional,
)
from doubleforms.random_tensors import (
    bianchi_from_squares,
    conformally_flat,
    constant_curvature,
    positive_operator_perturbation,
    random_bianchi_22,
    random_form,
    random_symmetric_11,
    weyl_part_tensor,
)
from doubleforms.tensorio import load_tensor, project_bianchi, save_form
from doubleforms.weitzenboeck import decompose_22, jacobi_eigenvalues


def test_random_symmetric_determinism_and_symmetry():
    ctx = AlgebraContext(5)
    a = random_symmetric_11(123, ctx)
    b = random_symmetric_11(123, ctx)
    c = random_symmetric_11(124, ctx)
    assert np.array_equal(a.coeffs, b.coeffs)
    assert not np.array_equal(a.coeffs, c.coeffs)
    assert a.is_symmetric()


def test_random_symmetric_entry_scale():
    # loose Monte Carlo sanity on the entry magnitude
    ctx = AlgebraContext(4)
    mags = [float(np.mean(np.abs(random_symmetric_11(s, ctx).coeffs))) for s in range(200)]
    assert 0.3 <= float(np.mean(mags)) <= 1.2


def test_random_form_shapes():
    ctx = AlgebraContext(5)
    w = random_form(0, 2, 3, ctx)
    assert w.coeffs.shape == (10, 10)
    s = random_form(1, 2, 2, ctx, symmetric=True)
    assert s.is_symmetric()
    with pytest.raises(ValueError):
        random_form(0, 1, 2, ctx, symmetric=True)


def test_square_of_metric_is_metric_power():
    ctx = AlgebraContext(4)
    built = bianchi_from_squares([metric(ctx)])
    assert np.array_equal(built.form.coeffs, metric_power(2, ctx).coeffs)


def test_random_bianchi_construction():
    for n in (4, 5, 6):
        ctx = AlgebraContext(n)
        w = random_bianchi_22(7, ctx)
        assert bianchi_residual(w.form) <= 1e-12 * w.form.norm()
        again = random_bianchi_22(7, ctx)
        assert np.array_equal(w.form.coeffs, again.form.coeffs)


def test_random_bianchi_is_weyl_generic():
    ctx = AlgebraContext(5)
    for seed in range(5):
        comps = decompose_22(random_bianchi_22(seed, ctx))
        assert comps.omega2.norm() > 1e-3


def test_random_bianchi_term_count_validation():
    with pytest.raises(ValueError):
        random_bianchi_22(0, AlgebraContext(4), terms=0)


def test_constant_curvature_properties():
    ctx = AlgebraContext(5)
    w = constant_curvature(1.0, ctx)
    rng = np.random.default_rng(2)
    for _ in range(5):
        assert sectional(w.form, rng.standard_normal((2, 5))) == pytest.approx(1.0, abs=1e-12)
    ric = contract(w.form)
    assert np.allclose(ric.coeffs, 4.0 * np.eye(5))
    assert constant_curvature(0.0, ctx).form.norm() == 0.0
    w2 = constant_curvature(2.5, ctx)
    assert sectional(w2.form, np.eye(5)[:2]) == pytest.approx(2.5, abs=1e-12)


def test_conformally_flat_has_no_weyl_part():
    ctx = AlgebraContext(6)
    w = conformally_flat(3, ctx)
    comps = decompose_22(w)
    assert comps.omega2.norm() <= 1e-12 * max(w.form.norm(), 1.0)


def test_weyl_part_tensor_is_traceless_bianchi():
    ctx = AlgebraContext(5)
    w = weyl_part_tensor(4, ctx)
    assert contract(w.form).norm() <= 1e-12 * w.form.norm()
    assert bianchi_residual(w.form) <= 1e-10 * w.form.norm()


def test_positive_operator_perturbation_margin():
    ctx = AlgebraContext(5)
    for seed in range(5):
        w = positive_operator_perturbation(seed, ctx, margin=0.5)
        assert jacobi_eigenvalues(w.form.coeffs)[0] >= 0.5 - 1e-12


# -- file format ------------------------------------------------------------


def test_round_trip(tmp_path):
    ctx = AlgebraContext(5)
    w = random_bianchi_22(11, ctx)
    path = tmp_path / "tensor.json"
    save_form(w, path)
    back = load_tensor(path)
    assert np.array_equal(back.form.coeffs, w.form.coeffs)


def test_save_general_form_fields(tmp_path):
    ctx = AlgebraContext(5)
    from doubleforms.weitzenboeck import np_definition

    form = np_definition(random_bianchi_22(1, ctx), 3)
    path = tmp_path / "n3.json"
    save_form(form, path)
    doc = json.loads(path.read_text())
    assert doc["p"] == 3 and doc["q"] == 3 and doc["n"] == 5
    with pytest.raises(ValueError):
        load_tensor(path)  # not a (2,2) tensor


def test_single_entry_sets_symmetric_images(tmp_path):
    path = tmp_path / "one.json"
    path.write_text(json.dumps({
        "n": 4,
        "entries": [{"ij": [1, 2], "kl": [3, 4], "value": 1.0}],
    }))
    t = load_tensor(path)  # warn mode keeps the tensor despite the violation
    assert t.form.value((1, 2), (3, 4)) == 1.0
    assert t.form.value((3, 4), (1, 2)) == 1.0


def test_diagonal_entry_file(tmp_path):
    path = tmp_path / "diag.json"
    path.write_text(json.dumps({
        "n": 4,
        "entries": [{"ij": [1, 2], "kl": [1, 2], "value": 1.0}],
    }))
    t = load_tensor(path)
    assert t.form.value((1, 2), (1, 2)) == 1.0
    assert bianchi_residual(t.form) == 0.0


@pytest.mark.parametrize("doc, fragment", [
    ({"entries": []}, "missing dimension"),
    ({"n": "four", "entries": []}, "'n' must be an integer"),
    ({"n": 4, "entries": [{"ij": [1], "kl": [1, 2], "value": 1.0}]}, "entries[0].ij"),
    ({"n": 4, "entries": [{"ij": [1, 5], "kl": [1, 2], "value": 1.0}]}, "entries[0].ij"),
    ({"n": 4, "entries": [{"ij": [2, 1], "kl": [1, 2], "value": 1.0}]}, "strictly increasing"),
    ({"n": 4, "entries": [{"ij": [1, 2], "kl": [1, 2]}]}, "missing fields"),
    ({"n": 4, "entries": [{"ij": [1, 2], "kl": [1, 2], "value": "x"}]}, "entries[0].value"),
    ({"n": 4, "entries": "nope"}, "'entries' must be a list"),
])
def test_malformed_files(tmp_path, doc, fragment):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(ValueError, match="bad.json"):
        try:
            load_tensor(path)
        except ValueError as exc:
            assert fragment in str(exc)
            raise


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ValueError, match="not valid JSON"):
        load_tensor(path)


def test_conflicting_symmetric_entries(tmp_path):
    path = tmp_path / "conflict.json"
    path.write_text(json.dumps({
        "n": 4,
        "entries": [
            {"ij": [1, 2], "kl": [1, 3], "value": 1.0},
            {"ij": [1, 3], "kl": [1, 2], "value": 2.0},
        ],
    }))
    with pytest.raises(ValueError, match="conflicts"):
        load_tensor(path)


def _witness_file(tmp_path):
    # the (e_12, e_34)-supported tensor violating the Bianchi identity
    path = tmp_path / "witness.json"
    path.write_text(json.dumps({
        "n": 4,
        "entries": [{"ij": [1, 2], "kl": [3, 4], "value": 1.0}],
    }))
    return path


def test_strict_mode_rejects_witness(tmp_path):
    path = _witness_file(tmp_path)
    with pytest.raises(ValueError, match="Bianchi"):
        load_tensor(path, on_bianchi="strict")


def test_warn_mode_reports(tmp_path, capsys):
    path = _witness_file(tmp_path)
    t = load_tensor(path, on_bianchi="warn")
    err = capsys.readouterr().err
    assert "warning" in err and "Bianchi" in err
    assert bianchi_residual(t.form) == 1.0


def test_project_mode_returns_bianchi_tensor(tmp_path):
    path = _witness_file(tmp_path)
    t = load_tensor(path, on_bianchi="project")
    assert bianchi_residual(t.form) <= 1e-9 * max(t.form.norm(), 1.0)


def test_projection_fixes_bianchi_forms():
    ctx = AlgebraContext(4)
    w = random_bianchi_22(5, ctx)
    projected = project_bianchi(w.form)
    assert (projected - w.form).norm() <= 1e-10 * w.form.norm()
    # idempotent
    again = project_bianchi(projected)
    assert (again - projected).norm() <= 1e-10 * max(projected.norm(), 1.0)


def test_unknown_policy(tmp_path):
    path = _witness_file(tmp_path)
    with pytest.raises(ValueError, match="on_bianchi"):
        load_tensor(path, on_bianchi="ignore")
