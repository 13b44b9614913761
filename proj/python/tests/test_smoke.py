import json

import pytest

import sixlogic


def test_entailment_and_countermodel():
    r = sixlogic.entails(["p", "~p"], "q")
    assert not r["holds"]
    assert r["countermodel"]["text"] == "p=1/3, q=0 @ bound=1/3"
    assert sixlogic.entails(["p & q"], "q | r")["holds"]
    assert sixlogic.entails(["p", "~p"], "q", algebra="L2")["holds"]


def test_truth_table_of_consistency():
    t = sixlogic.truth_table("o p")
    assert t["vars"] == ["p"]
    assert [v for _, v in t["rows"]] == ["1", "0", "0", "0", "0", "1"]


def test_conjunctive_form_worked_example():
    nf = sixlogic.conjunctive_form("#((p & ~#q) | #q)")
    assert nf["form"] == "(#p | #q) & (~#q | #q)"
    assert nf["blocks"] == 4
    assert sixlogic.equivalent("#((p & ~#q) | #q)", nf["form"])
    with pytest.raises(sixlogic.BudgetError):
        sixlogic.conjunctive_form("#((p & ~#q) | #q)", max_blocks=3)


def test_prove_and_verify_round_trip():
    r = sixlogic.prove("~#~p => p")
    assert r["proved"]
    tree = json.loads(r["proof"])
    assert tree["sequent"] == "~#~p => p"
    assert sixlogic.verify(r["proof"])["ok"]

    macro = sixlogic.prove("#((p & ~#q) | #q) => #p | #q")
    assert '"macro"' in macro["proof"]
    assert not sixlogic.verify(macro["proof"])["ok"]
    assert sixlogic.verify(macro["proof"], expand_macros=True)["ok"]

    bad = sixlogic.prove("p => q")
    assert not bad["proved"]
    assert bad["countermodel"]["valuation"] == {"p": "1/3", "q": "0"}


def test_audits():
    assert all(r["holds"] for r in sixlogic.audit_identities())
    failing = {r["name"] for r in sixlogic.audit_identities("B4") if not r["holds"]}
    assert "IS15" in failing
    assert all(c["holds"] == c["expected"] for c in sixlogic.lfi_audit())
    assert sixlogic.dat_check(["p", "~p"], "q")["agree"]


def test_errors_and_cli():
    with pytest.raises(ValueError):
        sixlogic.normalize("p &")
    code, out, _ = sixlogic.run_cli(["nf", "#((p & ~#q) | #q)"])
    assert code == 0
    assert out == "(#p | #q) & (~#q | #q)  blocks=4\n"
    assert sixlogic.run_cli(["check", "p |="])[0] == 2
