"""Command-line interface: reports, exit codes, determinism."""

import json

import pytest

from freecurves.cli import run


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def conic_file(tmp_path):
    path = tmp_path / "conic.txt"
    path.write_text("# smooth conic\nx^2 + y^2 + z^2\n")
    return str(path)


@pytest.fixture()
def cubic_file(tmp_path):
    path = tmp_path / "cubic.txt"
    path.write_text("x^3 + y^3 - x*y*z\n")
    return str(path)


def test_mdr_on_conic(capsys, conic_file):
    code, out, _ = run_cli(capsys, "mdr", conic_file)
    assert code == 0
    report = json.loads(out)
    assert report["result"]["mdr"] == 1
    assert len(report["result"]["witness_syzygy"]) == 3


def test_tjurina_and_certify(capsys, cubic_file):
    code, out, _ = run_cli(capsys, "tjurina", cubic_file)
    assert code == 0
    assert json.loads(out)["result"]["tjurina"] == 1
    code, out, _ = run_cli(capsys, "certify", cubic_file)
    assert code == 0
    report = json.loads(out)
    assert report["result"]["status"] == "neither"


def test_classify_node(capsys, cubic_file):
    code, out, _ = run_cli(
        capsys, "classify", "--curve", cubic_file, "--point", "0 : 0 : 1"
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["type"] == "A1"
    assert result["milnor"] == 1 and result["tjurina"] == 1


def test_parse_error_is_machine_readable(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("x^2 + y")
    code, out, err = run_cli(capsys, "certify", str(bad))
    assert code == 1
    assert not out
    payload = json.loads(err)
    assert payload["error"]["key"] in ("parse_error", "invalid_input")


def test_missing_file(capsys):
    code, _, err = run_cli(capsys, "certify", "/does/not/exist.txt")
    assert code == 1
    assert json.loads(err)["error"]["key"] == "file_not_found"


def test_catalog_build_roundtrip(capsys, tmp_path):
    out_path = tmp_path / "arr.txt"
    code, out, _ = run_cli(capsys, "catalog", "build", "F(1,2)", "--out", str(out_path))
    assert code == 0
    code, out, _ = run_cli(capsys, "certify", str(out_path))
    assert code == 0
    report = json.loads(out)
    assert report["result"]["status"] == "free"
    assert report["result"]["exponents"] == [2, 3]


def test_catalog_build_unknown_name(capsys):
    code, _, err = run_cli(capsys, "catalog", "build", "nope")
    assert code == 1
    assert json.loads(err)["error"]["key"] == "invalid_input"


def test_combinatorics_enumerate_csv(capsys, tmp_path):
    csv_path = tmp_path / "out.csv"
    code, out, _ = run_cli(
        capsys,
        "combinatorics",
        "enumerate",
        "--d", "1", "--k", "1", "--l", "1",
        "--csv", str(csv_path),
    )
    assert code == 0
    report = json.loads(out)
    assert report["result"]["solutions"] == 62
    header = csv_path.read_text().splitlines()[0]
    assert header == "d,k,l,n2,t3,n3,t5,t7,t11,d14,slack_num,slack_den,pass"
    assert len(csv_path.read_text().splitlines()) == 63


def test_combinatorics_cap_error(capsys):
    code, _, err = run_cli(
        capsys,
        "combinatorics", "enumerate",
        "--d", "9", "--k", "9", "--l", "9",
    )
    assert code == 1
    assert json.loads(err)["error"]["key"] == "size_cap_exceeded"


def test_reports_are_byte_identical(capsys, conic_file):
    _, out1, _ = run_cli(capsys, "mdr", conic_file)
    _, out2, _ = run_cli(capsys, "mdr", conic_file)
    assert out1 == out2


def test_catalog_verify(capsys):
    code, out, _ = run_cli(capsys, "catalog", "verify")
    assert code == 0
    assert json.loads(out)["result"]["ok"] is True
