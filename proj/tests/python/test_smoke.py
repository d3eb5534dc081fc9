import pytest

import mcperm


def test_stats_of_worked_element():
    s = mcperm.Signature.parse("3,2")
    pi = mcperm.Element.parse(s, "3^(0,0) 1^(2,1) 2^(0,1)")
    assert mcperm.stats(pi) == {
        "exc": 13,
        "exc_A": 1,
        "csum": 7,
        "csum_per_palette": [2, 1],
        "fix": 0,
        "cyc": 1,
    }
    assert mcperm.exc_definitional(pi) == 13
    assert str(pi) == "3^(0,0) 1^(2,1) 2^(0,1)"


def test_group_law():
    s = mcperm.Signature([3, 2, 2, 3])
    a = mcperm.Element.from_rows(s, [3, 2, 1], [[0, 1, 0, 2], [2, 0, 1, 2], [1, 1, 0, 1]])
    b = mcperm.Element.from_rows(s, [2, 3, 1], [[0, 0, 1, 0], [0, 1, 1, 1], [2, 1, 0, 2]])
    ab = a * b
    assert ab.sigma == [2, 1, 3]
    assert ab.colors == [[2, 0, 0, 2], [1, 0, 1, 2], [2, 0, 0, 1]]
    assert a * a.inverse() == mcperm.Element.identity(s, 3)


def test_enumeration_sizes():
    s = mcperm.Signature.parse("2")
    assert len(mcperm.enumerate(s, 2)) == 8
    assert len(mcperm.enumerate(s, 2, "derangements")) == 4
    assert len(mcperm.enumerate(s, 2, "involutions")) == 6
    with pytest.raises(mcperm.BudgetExceeded):
        mcperm.enumerate(mcperm.Signature.parse("3,2"), 4, budget=100)


def test_polynomials():
    one = mcperm.Signature.parse("1")
    assert mcperm.oracle_polynomial(one, 3, "derangement", "s=-1") == "-q - q^2"
    assert mcperm.K(mcperm.Signature.parse("3,2")) == "2*q^2 + q^3 + 2*q^4"
    assert mcperm.thm2_closed(one, 2, "printed") == "q"
    assert mcperm.thm2_closed(one, 2) == "-q"
    assert mcperm.involution_polynomial(mcperm.Signature.parse("2"), 1, "printed") == "u + 2*u*w"
    assert mcperm.poly_normalize("u^2*(1 + w)^2") == "u^2 + 2*u^2*w + u^2*w^2"
    assert mcperm.corollary_exc_count(one, 3, 1) == "3"


def test_verify_report():
    report = mcperm.verify("1;2", 3, "THM1_CLOSED,THM2_CLOSED_PRINTED")
    assert report["schema"] == 1
    assert report["summary"]["hard_mismatch"] == 0
    printed = [
        c
        for c in report["claims"]
        if c["formula_id"] == "THM2_CLOSED_PRINTED" and c["signature"] == "1" and c["n"] == 2
    ]
    assert printed[0]["status"] == "mismatch"
    assert printed[0]["kind"] == "audit"
