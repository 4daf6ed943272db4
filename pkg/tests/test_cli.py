"""Check registry and command line behaviour: exit codes, report formats,
parameter binding and catalog overrides."""

import json
import shutil
import subprocess
import sys

import pytest

from jqsphere.catalog import default_catalog_dir
from jqsphere.checks import (
    CHECKS,
    CheckReport,
    check_ids,
    describe_checks,
    resolve_ids,
    run_check,
    run_checks,
)
from jqsphere.cli import main
from jqsphere.errors import UnknownCheckId
from jqsphere.jordanian import build_catalog

FAST = ["pbw-funh", "determinant", "grouplike-j1", "scaling-left"]


@pytest.fixture(scope="module")
def cat():
    return build_catalog()


# -- registry ------------------------------------------------------------


def test_registry_shape():
    ids = check_ids()
    assert len(ids) == len(set(ids)) == 29
    for name, fn in CHECKS.items():
        assert name == name.strip()
        assert fn.__doc__, f"{name} has no docstring"
    for name, summary in describe_checks():
        assert summary


def test_resolve_ids_canonical_order():
    assert resolve_ids([]) == list(check_ids())
    assert resolve_ids("all") == list(check_ids())
    assert resolve_ids(["all"]) == list(check_ids())
    picked = resolve_ids(["determinant", "pbw-funh", "determinant"])
    assert picked == ["pbw-funh", "determinant"]
    with pytest.raises(UnknownCheckId, match="no-such"):
        resolve_ids(["determinant", "no-such"])


def test_run_check_pass(cat):
    report = run_check(cat, "determinant")
    assert isinstance(report, CheckReport)
    assert report.status == "pass"
    assert report.residuals == []
    assert report.elapsed_ms >= 0
    d = report.to_dict()
    assert set(d) == {"check_id", "status", "residuals", "elapsed_ms", "parameters"}


def test_run_check_unknown_id(cat):
    with pytest.raises(UnknownCheckId):
        run_check(cat, "nope")


def test_run_check_turns_engine_errors_into_reports():
    bad = build_catalog(bindings={"rho": 0})
    report = run_check(bad, "primitive-PL")
    assert report.status == "error"
    assert report.residuals and report.residuals[0][0] == "error"
    assert "vanishes" in report.residuals[0][1]


def test_run_checks_streams_in_order(cat):
    ids = [r.check_id for r in run_checks(cat, FAST[:2])]
    assert ids == ["pbw-funh", "determinant"]


# -- command line ---------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_flag(capsys):
    code, out, err = run_cli(capsys, "--list")
    assert code == 0 and not err
    lines = out.strip().splitlines()
    assert len(lines) == 29
    listed = [line.split()[0] for line in lines]
    assert listed == list(check_ids())


def test_text_run_passes(capsys):
    code, out, err = run_cli(capsys, *FAST)
    assert code == 0 and not err
    for cid in FAST:
        assert f"{cid}: pass" in out


def test_requested_order_is_ignored(capsys):
    code, out, _ = run_cli(capsys, "determinant", "pbw-funh")
    assert code == 0
    assert out.index("pbw-funh: pass") < out.index("determinant: pass")


def test_unknown_check_exits_2(capsys):
    code, out, err = run_cli(capsys, "no-such-check")
    assert code == 2 and not out
    assert "unknown check id(s): no-such-check" in err


def test_bad_set_value_exits_2(capsys):
    code, _, err = run_cli(capsys, "determinant", "--set", "h=1/0")
    assert code == 2
    assert "division by zero" in err
    code, _, err = run_cli(capsys, "determinant", "--set", "wat")
    assert code == 2 and "param=value" in err
    code, _, err = run_cli(capsys, "determinant", "--set", "zeta=1")
    assert code == 2 and "unknown parameter" in err


def test_set_accepts_expressions(capsys):
    code, out, _ = run_cli(
        capsys, "determinant", "--set", "beta=rho^2 + 2*k^2", "--set", "h=1"
    )
    assert code == 0
    assert "determinant: pass" in out
    assert "beta=2*k^2 + rho^2" in out and "h=1" in out


def test_iff_checks_keep_their_pivot_symbolic(capsys):
    # the embedding check unbinds beta on purpose: it proves the residual
    # is exactly the beta constraint, so a user binding would hide the iff
    code, out, _ = run_cli(
        capsys, "embedding-left-beta", "--set", "beta=7", "--set", "h=1"
    )
    assert code == 0
    assert "embedding-left-beta: pass" in out
    assert "beta" not in out.split("parameters:")[1]


def test_bound_parameters_are_echoed(capsys):
    code, out, _ = run_cli(capsys, "determinant", "--set", "h=3/2")
    assert code == 0
    assert "parameters: h=3/2" in out


def test_json_format_and_canonical_order(capsys):
    code, out, err = run_cli(capsys, "--format", "json", *reversed(FAST))
    assert code == 0 and not err
    reports = json.loads(out)
    assert [r["check_id"] for r in reports] == FAST
    for r in reports:
        assert set(r) == {"check_id", "status", "residuals", "elapsed_ms", "parameters"}
        assert r["status"] == "pass"
        assert r["residuals"] == []


def test_json_is_deterministic_modulo_timing(capsys):
    def snap():
        code, out, _ = run_cli(capsys, "--format", "json", "--set", "k=2", *FAST)
        assert code == 0
        reports = json.loads(out)
        for r in reports:
            r["elapsed_ms"] = 0
        return json.dumps(reports, sort_keys=True)

    assert snap() == snap()


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "--format", "json", "--out", str(target), "determinant"
    )
    assert code == 0 and not out
    reports = json.loads(target.read_text())
    assert reports[0]["check_id"] == "determinant"


def test_catalog_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.cat"
    bad.write_text("algebra broken\n generators x\n relation x*?\n")
    code, _, err = run_cli(capsys, "--catalog", str(bad), "determinant")
    assert code == 2
    assert "bad.cat:3:" in err


def test_missing_catalog_path_exits_2(tmp_path, capsys):
    code, _, err = run_cli(capsys, "--catalog", str(tmp_path / "ghost.cat"), "determinant")
    assert code == 2 and "cannot read" in err


def perturbed_data_dir(tmp_path, needle, replacement, filename):
    data = tmp_path / "data"
    shutil.copytree(default_catalog_dir(), data)
    f = data / filename
    text = f.read_text()
    assert needle in text
    f.write_text(text.replace(needle, replacement))
    return data


def test_failing_check_exits_1(tmp_path, capsys):
    # halving one matrix entry breaks the group-like property, nothing else
    data = perturbed_data_dir(
        tmp_path, "entry p m : (1/2)*c^2", "entry p m : c^2", "maps.cat"
    )
    code, out, err = run_cli(
        capsys, "--catalog", str(data), "--format", "json", "grouplike-j1"
    )
    assert code == 1 and not err
    (report,) = json.loads(out)
    assert report["status"] == "fail"
    labels = [label for label, _ in report["residuals"]]
    assert labels and all(label.startswith("coproduct:") for label in labels)
    values = [value for _, value in report["residuals"]]
    assert all(value != "0" for value in values)


def test_inconsistent_catalog_reports_an_error(tmp_path, capsys):
    # shifting the determinant constant collapses the whole presentation:
    # the cross relations already force that constant, so completion
    # derives a nonzero scalar and the check must say so, not crash
    data = perturbed_data_dir(
        tmp_path,
        "relation det : a*d - b*c - h*a*c - 1",
        "relation det : a*d - b*c - h*a*c - 2",
        "funh.cat",
    )
    code, out, err = run_cli(
        capsys, "--catalog", str(data), "--format", "json", "determinant"
    )
    assert code == 1 and not err
    (report,) = json.loads(out)
    assert report["status"] == "error"
    assert "inconsistent" in report["residuals"][0][1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jqsphere", "--list"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "determinant" in proc.stdout
