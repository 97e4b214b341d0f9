import json

import pytest

import sshg


def test_canonical_form():
    assert sshg.canonical("g2*g1 + 2*g1*g2") == "g1*g2"
    assert sshg.canonical("omega^4") == "-1"
    assert sshg.equal("r*r", "1 + exp(phi1 - phi2 - 2*tau)")


def test_parse_error():
    with pytest.raises(sshg.ParseError):
        sshg.canonical("sigma + * phi0")
    assert issubclass(sshg.ParseError, sshg.Error)


def test_names():
    assert "fusion-product" in sshg.check_names()
    assert list(sshg.check_names()) == sorted(sshg.check_names())
    assert "fused-matrix" in sshg.object_names()
    assert sshg.print_object("type1-conditions").startswith("@conditions type-I")


def test_verify_fusion():
    report, status = sshg.verify(["fusion-product"])
    assert status == 0
    assert report["schema_version"] == sshg.SCHEMA_VERSION
    (r,) = report["reports"]
    assert r["check"] == "fusion-product"
    assert r["status"] == "pass"
    assert r["residuals"] == []


def test_verify_json_and_errors():
    text, status = sshg.verify_json(["el-type2"])
    assert status == 1
    assert json.loads(text)["reports"][0]["status"] == "fail"
    with pytest.raises(sshg.ConfigError):
        sshg.verify(["no-such-check"])
