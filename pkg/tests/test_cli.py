import json

from heyde.cli import main
from heyde import serialize, validate_spec

Z5_SPEC = {"components": [{"p": 5, "k": 1, "kind": "finite"}]}
Z9_SPEC = {"components": [{"p": 3, "k": 2, "kind": "finite"}]}


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def degenerate_instance(x1, x2, alpha):
    return {
        "spec": Z5_SPEC,
        "mu1": [{"x": [x1], "num": 1, "den": 1}],
        "mu2": [{"x": [x2], "num": 1, "den": 1}],
        "alpha": [alpha],
    }


def test_check_symmetric_instance(tmp_path, capsys):
    path = write(tmp_path, "inst.json", degenerate_instance(3, 1, 2))
    code = main(["check", "--input", path])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out) == {"symmetric": True, "heyde_equation": True, "agree": True}


def test_check_asymmetric_instance_is_not_an_error(tmp_path, capsys):
    path = write(tmp_path, "inst.json", degenerate_instance(1, 1, 2))
    code = main(["check", "--input", path])
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert out == {"symmetric": False, "heyde_equation": False, "agree": True}


def test_check_output_is_byte_stable(tmp_path, capsys):
    path = write(tmp_path, "inst.json", degenerate_instance(3, 1, 2))
    main(["check", "--input", path])
    first = capsys.readouterr().out
    main(["check", "--input", path])
    second = capsys.readouterr().out
    assert first == second


def test_decompose_constructed_fixture(tmp_path, capsys):
    construction = {
        "spec": Z9_SPEC,
        "subgroup": [0],
        "alpha": [2],
        "rho": [{"x": [0], "num": 1, "den": 1}],
        "x2": [4],
    }
    cpath = write(tmp_path, "construction.json", construction)
    ipath = str(tmp_path / "instance.json")
    code = main(["construct", "--input", cpath, "--output", ipath])
    assert code == 0
    capsys.readouterr()

    code = main(["decompose", "--input", ipath])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["symmetric"] is True
    dec = report["decomposition"]
    assert dec["all_flags_true"] is True
    assert all(dec["flags"].values())
    assert dec["subgroup"] == [1]


def test_decompose_asymmetric_reports_without_failure(tmp_path, capsys):
    path = write(tmp_path, "inst.json", degenerate_instance(1, 1, 2))
    code = main(["decompose", "--input", path])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report == {"symmetric": False, "decomposition": None}


def test_invalid_spec_exits_2(tmp_path, capsys):
    bad = degenerate_instance(3, 1, 2)
    bad["spec"] = {"components": [{"p": 2, "k": 1, "kind": "finite"}]}
    path = write(tmp_path, "inst.json", bad)
    code = main(["check", "--input", path])
    out = json.loads(capsys.readouterr().out)
    assert code == 2
    assert "2-torsion" in out["error"]


def test_non_automorphism_exits_2(tmp_path, capsys):
    bad = {
        "spec": Z9_SPEC,
        "mu1": [{"x": [0], "num": 1, "den": 1}],
        "mu2": [{"x": [0], "num": 1, "den": 1}],
        "alpha": [3],
    }
    path = write(tmp_path, "inst.json", bad)
    code = main(["check", "--input", path])
    assert code == 2
    assert "automorphism" in json.loads(capsys.readouterr().out)["error"]


def test_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    code = main(["check", "--input", str(path)])
    assert code == 2
    assert "malformed JSON" in json.loads(capsys.readouterr().out)["error"]


def test_bad_mass_exits_2(tmp_path, capsys):
    bad = degenerate_instance(3, 1, 2)
    bad["mu1"] = [{"x": [3], "num": 1, "den": 2}]
    path = write(tmp_path, "inst.json", bad)
    code = main(["check", "--input", path])
    assert code == 2
    assert "total mass" in json.loads(capsys.readouterr().out)["error"]


def test_sweep_exhaustive_small(tmp_path, capsys):
    config = {
        "specs": [{"components": [{"p": 3, "k": 1, "kind": "finite"}]}],
        "mode": "exhaustive",
        "denominator": 2,
        "seed": 0,
    }
    path = write(tmp_path, "sweep.json", config)
    out_path = str(tmp_path / "report.json")
    code = main(["sweep", "--input", path, "--output", out_path])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["instances"] == 72  # 6 pmfs squared, both automorphisms
    assert report["disagreements"] == 0
    assert report["violations"] == 0
    assert json.loads(open(out_path).read()) == report


def test_sweep_random_seeded(tmp_path, capsys):
    config = {
        "specs": [Z9_SPEC],
        "mode": "random",
        "budget": 40,
        "max_denominator": 8,
        "seed": 11,
    }
    path = write(tmp_path, "sweep.json", config)
    code = main(["sweep", "--input", path])
    first = capsys.readouterr().out
    assert code == 0
    main(["sweep", "--input", path])
    assert capsys.readouterr().out == first  # reproducible by seed


def test_sweep_inline_spec_with_flags(capsys):
    code = main(["sweep", "--spec", json.dumps(Z5_SPEC), "--budget", "10", "--seed", "3"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["instances"] == 10


def test_verify_lemmas_on_symmetric_instance(tmp_path, capsys):
    construction = {
        "spec": Z9_SPEC,
        "subgroup": [2],
        "alpha": [8],
        "rho": [{"x": [0], "num": 1, "den": 1}],
        "x2": [1],
    }
    cpath = write(tmp_path, "construction.json", construction)
    ipath = str(tmp_path / "instance.json")
    main(["construct", "--input", cpath, "--output", ipath])
    capsys.readouterr()
    code = main(["verify-lemmas", "--input", ipath, "--tolerance", "1e-9"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["fixed_point_lemma"]["evaluated"] is True
    assert report["fixed_point_lemma"]["substitution_f_ok"] is True
    # degenerate margins give identically-one tables, so logs exist
    assert report["difference_lemma"]["evaluated"] is True
    assert report["difference_lemma"]["max_log_residual"] <= 1e-9


def test_verify_lemmas_hypothesis_failure_is_a_result(tmp_path, capsys):
    inst = {
        "spec": Z5_SPEC,
        "mu1": [{"x": [0], "num": 1, "den": 2}, {"x": [1], "num": 1, "den": 2}],
        "mu2": [{"x": [0], "num": 1, "den": 1}],
        "alpha": [2],
    }
    path = write(tmp_path, "inst.json", inst)
    code = main(["verify-lemmas", "--input", path])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["difference_lemma"]["evaluated"] is False


def test_construct_writes_loadable_instance(tmp_path, capsys):
    construction = {"spec": Z9_SPEC, "subgroup": [1], "alpha": [2], "seed": 9}
    cpath = write(tmp_path, "construction.json", construction)
    ipath = str(tmp_path / "instance.json")
    code = main(["construct", "--input", cpath, "--output", ipath])
    printed = capsys.readouterr().out
    assert code == 0
    inst = serialize.instance_from_obj(json.loads(printed))
    assert inst.spec == validate_spec([(3, 2)])
    assert open(ipath).read() == printed


GOLDEN = __import__("pathlib").Path(__file__).parent / "golden"


def test_golden_check_report(capsys):
    code = main(["check", "--input", str(GOLDEN / "instance_degenerate_z5.json")])
    assert code == 0
    assert capsys.readouterr().out == (GOLDEN / "check_report.json").read_text()


def test_golden_construct_and_decompose(tmp_path, capsys):
    code = main(["construct", "--input", str(GOLDEN / "construction_z9.json")])
    assert code == 0
    assert capsys.readouterr().out == (GOLDEN / "constructed_instance_z9.json").read_text()
    code = main(["decompose", "--input", str(GOLDEN / "constructed_instance_z9.json")])
    assert code == 0
    assert capsys.readouterr().out == (GOLDEN / "decompose_report_z9.json").read_text()


def test_golden_sweep_report(capsys):
    code = main(["sweep", "--input", str(GOLDEN / "sweep_config_z3.json")])
    assert code == 0
    assert capsys.readouterr().out == (GOLDEN / "sweep_report_z3.json").read_text()


def test_golden_verify_lemmas_report(capsys):
    code = main(["verify-lemmas", "--input", str(GOLDEN / "constructed_instance_z9.json")])
    assert code == 0  # a failed hypothesis is a result, not a finding
    assert capsys.readouterr().out == (GOLDEN / "verify_lemmas_report_z9.json").read_text()
