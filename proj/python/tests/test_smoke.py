import json

import pytest

import compound_det as cd


def test_enumerate_matches_listing():
    assert cd.enumerate_Z(3, 2) == ["(2,0,0)", "(1,1,0)", "(1,0,1)", "(0,2,0)", "(0,1,1)", "(0,0,2)"]
    assert cd.iota([1, 1, 0], 3, 2) == [1, 3]
    assert cd.partitions_in_box(1, 2) == ["(1,1)", "(1,0)", "(0,0)"]


def test_main_symbolic_reproduces_columns():
    r = cd.verify_main(2, 2, mode="symbolic")
    assert r["equal"]
    assert r["params"]["rhs_columns"] == "123,134"
    assert r["lhs_hash"] == r["rhs_hash"]


def test_numeric_is_deterministic():
    a = cd.verify_main(3, 3, seed=42)
    b = cd.verify_main(3, 3, seed=42)
    assert a["equal"] and a == b


def test_characters_and_gram():
    assert cd.verify_schur_det("even-orth", 2, 2, seed=1)["equal"]
    assert cd.verify_prop12("sp", 3, 2, seed=1)["sign"] in (1, -1)
    assert cd.verify_gram(3, 2, variant="lemma2", k0=1)["equal"]
    assert cd.verify_denominators(3)["equal"]


def test_macdonald_reports_prefactor_mismatch():
    ok = cd.verify_macdonald(2, 1, "2/3", "1/5")
    assert ok["equal"]
    r = cd.verify_macdonald(2, 2, "2/3", "1/5")
    assert r["params"]["p_identity"] == "ok"
    assert r["params"]["q_identity_box_product"] == "ok"
    assert r["params"]["prefactor_identity"] == "fails"


def test_errors_map_to_python_exceptions():
    with pytest.raises(cd.CapabilityError):
        cd.verify_main(6, 6, mode="symbolic")
    with pytest.raises(ValueError):
        cd.verify_main(2, 2, mode="fuzzy")
    with pytest.raises(ValueError):
        cd.verify_macdonald(2, 2, "1/0", "1/2")


def test_cli_round_trip():
    code, out, _ = cd.run_cli(["verify", "main", "--s", "2", "--n", "2", "--mode", "symbolic"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["all_equal"]
    code, _, err = cd.run_cli(["verify", "main", "--s", "2"])
    assert code == 2 and "missing" in err
