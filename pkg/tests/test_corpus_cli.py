import io
import json

import pytest

from plane_syzygy.analysis import SCHEMA_VERSION, analyze, dumps, to_report
from plane_syzygy.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, run_cli
from plane_syzygy.corpus import compare_expected, corpus, family, load_records, record_from_dict

RECORDS = corpus(include_stress=True)


@pytest.mark.parametrize("rec", RECORDS, ids=[r.name for r in RECORDS])
def test_corpus_record(rec):
    a = analyze(rec.poly(), rec.name, rec.meta)
    assert compare_expected(a, rec.expected) == []
    assert a.failed_checks() == []


def test_corpus_names_unique():
    names = [r.name for r in RECORDS]
    assert len(names) == len(set(names))
    assert sum(r.stress for r in RECORDS) == 1


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, records):
    p = tmp_path / "curves.json"
    p.write_text(json.dumps(records))
    return str(p)


def test_report_schema_and_order():
    rep = to_report(analyze("x^5-y^2z^3-xz^4", "bolza"))
    assert list(rep) == ["schema_version", "curve", "invariants", "hilbert", "classification", "bourbaki", "dpw",
                         "audit"]
    assert rep["schema_version"] == SCHEMA_VERSION
    assert list(rep["invariants"]) == ["m", "exponents", "e_list", "epsilons", "tau", "nu", "sigma", "ct", "st",
                                       "reg", "T"]
    assert rep["invariants"]["exponents"] == [2, 4, 4]
    assert json.loads(dumps(rep)) == rep


def test_free_curve_report_has_nulls():
    rep = to_report(analyze("x(x^2+xy+z^2)"))
    assert rep["bourbaki"] is None
    assert rep["invariants"]["sigma"] is None


def test_analyze_json_is_deterministic(tmp_path):
    path = write(tmp_path, [{"name": "folium", "f": "(x^2+y^2)^2-4xy^2z", "expected": {"tau": 5}},
                            {"name": "bolza", "f": "x^5-y^2z^3-xz^4"}])
    c1, out1, _ = cli("analyze", "--input", path, "--jobs", "1")
    c2, out2, _ = cli("analyze", "--input", path, "--jobs", "2")
    assert c1 == c2 == EXIT_OK
    assert out1 == out2
    reps = json.loads(out1)
    assert [r["curve"]["name"] for r in reps] == ["bolza", "folium"]


def test_analyze_poly_text_format():
    code, out, _ = cli("analyze", "--poly", "x^3+y^3+z^3", "--format", "text")
    assert code == EXIT_OK
    assert "Smooth" in out


@pytest.mark.parametrize("records, fragment", [
    ([{"f": "x^3+y^2"}], "homogeneous"),
    ([{"f": "x^2y(x+y+z)"}], "reduced"),
    ([{"f": "(x+y)^2(x^3+y^3+z^3)"}], "reduced"),
    ([{"f": "x^3 + 1.5y^3"}], "^"),
    ([{"name": "nof"}], "'f'"),
])
def test_input_errors_exit_1(tmp_path, records, fragment):
    code, out, err = cli("analyze", "--input", write(tmp_path, records))
    assert code == EXIT_INPUT
    assert fragment in err
    assert out == ""


def test_missing_file_and_bad_json(tmp_path):
    assert cli("analyze", "--input", str(tmp_path / "missing.json"))[0] == EXIT_INPUT
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert cli("analyze", "--input", str(p))[0] == EXIT_INPUT
    assert cli("no-such-command")[0] == EXIT_INPUT


def test_max_degree_guard():
    assert cli("analyze", "--poly", "x^8+y^8+z^8", "--max-degree", "7")[0] == EXIT_INPUT


def test_wrong_expectation_exit_2(tmp_path):
    path = write(tmp_path, [{"name": "folium", "f": "(x^2+y^2)^2-4xy^2z", "expected": {"tau": 6}}])
    code, out, _ = cli("analyze", "--input", path, "--format", "text")
    assert code == EXIT_FAIL
    assert "EXPECTATION tau: expected 6, got 5" in out


def test_corpus_command():
    code, out, _ = cli("corpus", "--filter", "two-branch", "--audit", "--jobs", "1")
    assert code == EXIT_OK
    assert "2 curves, 0 with expectation mismatches" in out
    assert cli("corpus", "--filter", "no-such-curve")[0] == EXIT_INPUT


@pytest.mark.parametrize("name, params, tau", [
    ("two-branch", ["k=4"], 81 - 36 + 5),
    ("large-nu", ["n=3"], 6 * 13 - 54),
    ("nearly-cuspidal", ["r=3"], 10),
    ("thom-sebastiani", ["multiplicities=2,1,1"], 3 * 1),
])
def test_family_command(name, params, tau):
    code, out, _ = cli("family", name, "--params", *params)
    assert code == EXIT_OK
    assert json.loads(out)[0]["invariants"]["tau"] == tau


@pytest.mark.parametrize("name, params", [("two-branch", {"k": 1}), ("large-nu", {"n": 2}),
                                          ("thom-sebastiani", {"multiplicities": [1, 1, 1]}),
                                          ("nearly-cuspidal", {}), ("nope", {"k": 2})])
def test_family_validation(name, params):
    with pytest.raises(ValueError):
        family(name, **params)


def test_family_cli_validation():
    assert cli("family", "two-branch", "--params", "k=1")[0] == EXIT_INPUT
    assert cli("family", "two-branch", "--params", "k")[0] == EXIT_INPUT


def test_oracle_command(tmp_path):
    path = write(tmp_path, [{"name": "bolza", "f": "x^5-y^2z^3-xz^4"}])
    code, out, _ = cli("oracle", "--input", path, "--max-degree", "11")
    assert code == EXIT_OK
    row = json.loads(out)[0]
    assert row["agree"] and row["engine"] == row["oracle"]


def test_record_round_trip(tmp_path):
    rec = RECORDS[0]
    assert record_from_dict(rec.to_dict()) == rec
    p = tmp_path / "one.json"
    p.write_text(json.dumps(rec.to_dict()))
    assert load_records(str(p)) == [rec]
