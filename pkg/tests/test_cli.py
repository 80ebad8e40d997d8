import io
import json
import xml.etree.ElementTree as ET

import pytest

from boson_ordering import cli, verify
from boson_ordering.normal_order import NormalForm, normal_order_p
from boson_ordering.polyp import PolyP
from boson_ordering.words import parse_word


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_normal_p():
    code, out, _ = run("normal", "--word", "(da)^3", "--model", "p")
    assert code == 0
    assert out == "(a†)^3 a^3 + (2p+1) (a†)^2 a^2 + p^2 a† a\n"


def test_normal_standard_and_omega():
    assert run("normal", "--word", "adaadaa", "--model", "standard")[1] == \
        "(a†)^2 a^5 + 4 a† a^4 + 2 a^3\n"
    assert run("normal", "--word", "(da)^2", "--model", "omega")[1] == \
        "(a†)^2 a^2 + w1 a† a\n"


def test_normal_json_round_trip():
    code, out, _ = run("normal", "--word", "(da)^3", "--model", "p", "--json")
    assert code == 0
    nf = NormalForm.from_json_obj(json.loads(out))
    assert nf == normal_order_p(parse_word("(da)^3"))


def test_output_is_deterministic():
    args = ("normal", "--word", "a^2d^2ad", "--model", "omega", "--json")
    assert run(*args)[1] == run(*args)[1]
    args = ("contractions", "--word", "(ad)^3", "--list")
    assert run(*args)[1] == run(*args)[1]


def test_stirling_and_bell():
    assert run("stirling", "--kind", "p", "--n", "1", "--k", "1")[1] == "1\n"
    assert run("stirling", "--kind", "p", "--n", "4", "--k", "2")[1] == "3p^2+3p+1\n"
    assert run("stirling", "--n", "5", "--k", "2")[1] == "15\n"
    assert run("stirling", "--kind", "knm", "--n", "4", "--k", "2", "--m", "1")[1] == "3\n"
    assert run("stirling", "--kind", "omega", "--n", "3", "--k", "2")[1] == "2w1+w3\n"
    assert run("bell", "--p0", "--n", "5")[1] == "15\n"
    assert run("bell", "--n", "5")[1] == "52\n"
    table = run("stirling", "--kind", "p", "--n", "3")[1].splitlines()
    assert table[0] == "n\tk=1\tk=2\tk=3"
    assert table[3] == "3\tp^2\t2p+1\t1"
    obj = json.loads(run("stirling", "--n", "2", "--json")[1])
    assert obj["rows"] == [{"n": 1, "values": ["1"]}, {"n": 2, "values": ["1", "1"]}]


def test_contractions():
    assert run("contractions", "--word", "aadd")[1] == "7\n"
    assert run("contractions", "--word", "(da)^5", "--count")[1] == "52\n"
    out = run("contractions", "--word", "adad", "--list")[1].splitlines()
    assert len(out) == 5 and out[0].startswith("(null)\tadad")
    listing = run("contractions", "--word", "(da)^5", "--list")[1]
    assert "[word multiplicity 2]" in listing
    obj = json.loads(run("contractions", "--word", "ad", "--list", "--json")[1])
    assert obj["contractions"] == [{"edges": "", "word": "ad", "multiplicity": 1},
                                   {"edges": "1-2", "word": "p", "multiplicity": 1}]


def test_bijection_all_entry_points_agree():
    objs = [json.loads(run("bijection", *a, "--json")[1]) for a in (
        ("--partition", "{1,2},{3}"), ("--vector", "1,e"), ("--contraction", "4-5", "--n", "3"))]
    assert objs[0] == objs[1] == objs[2]
    assert objs[0]["rises"] == objs[0]["p_degree"] == 1
    assert objs[0]["blocks"] == 2


def test_usage_errors():
    assert run("normal", "--word", "a(")[0] == 1
    assert run("normal", "--word", "axd")[0] == 1
    assert run("normal", "--word", "a^0")[0] == 1
    assert run("nonsense")[0] == 1
    assert run("stirling", "--kind", "knm", "--n", "3", "--k", "1")[0] == 1
    assert run("bijection", "--contraction", "2-3")[0] == 1
    code, _, err = run("normal", "--word", "a(")
    assert "offset" in err


def test_domain_errors():
    code, _, err = run("normal", "--word", "(da)^7", "--guard", "100")
    assert code == 2 and "capacity" in err
    assert run("bijection", "--vector", "3,e")[0] == 2
    assert run("diagram", "--word", "ad", "--contraction", "2-1")[0] == 2
    assert run("stirling", "--n", "-1")[0] == 2
    assert run("bell", "--n", "0")[0] == 2


def test_diagram_svg(tmp_path):
    code, out, _ = run("diagram", "--word", "adad", "--contraction", "1-4")
    assert code == 0
    root = ET.fromstring(out)
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == f"{ns}svg"
    assert len(root.findall(f"{ns}path")) == 1
    circles = root.findall(f"{ns}circle")
    assert [c.get("fill") for c in circles] == ["white", "black", "white", "black"]
    target = tmp_path / "d.svg"
    assert run("diagram", "--word", "adad", "--contraction", "1-4", "--out", str(target)) \
        == (0, "", "")
    assert target.read_text() == out


def test_diagram_ascii():
    code, out, _ = run("diagram", "--word", "adad", "--contraction", "1-2,3-4",
                       "--format", "ascii")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2].split() == ["o", "*", "o", "*"]
    assert sum(1 for ln in lines if "+" in ln) == 2


def test_verify_passes():
    code, out, _ = run("verify", "--max-n", "5", "--order", "6")
    assert code == 0
    assert "fail" not in out
    obj = json.loads(run("verify", "--max-n", "4", "--order", "5", "--json")[1])
    statuses = {c["name"]: c["status"] for c in obj["checks"]}
    assert statuses["erratum_omega_n4"] == "erratum-confirmed"
    assert obj["ok"] is True


def test_verify_small_max_n():
    code, out, _ = run("verify", "--max-n", "1", "--order", "2")
    assert code == 0
    assert "erratum_omega_n4" not in out


def test_verify_negative_control(monkeypatch):
    real = verify.stirling_p_rec

    def corrupted(n, k):
        s = real(n, k)
        return s + PolyP.p() if (n, k) == (3, 2) else s

    results = verify.run_verification(4, 5, stirling_p=corrupted)
    failed = {r.name for r in results if not r.ok}
    assert {"stirling_three_routes", "egf_bivariate", "classical_collapses"} <= failed

    monkeypatch.setattr(verify, "stirling_p_rec", corrupted)
    code, out, _ = run("verify", "--max-n", "4", "--order", "5")
    assert code == 3
    assert "fail" in out
