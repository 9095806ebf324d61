import pytest

import cycloseq


def test_worked_example_reaches_full_complexity():
    rep = cycloseq.analyze(3, 5, 1, 1)
    assert rep["lc_bm"] == rep["lc_gcd"] == 30
    assert rep["theorem_holds"]


def test_generate_round_trip():
    digits = cycloseq.generate(3, 7, 1, 1)
    assert len(digits) == 42
    assert digits[0] == "0" and digits[21] == "1"
    assert cycloseq.linear_complexity(digits)["lc_gcd"] == 42


def test_constants_and_classes():
    c = cycloseq.constants(3, 5, 1, 1)
    assert (c["g"], c["y"], c["period"]) == (23, 11, 30)
    assert cycloseq.classes(3, 5, 1, 1)["buckets"]["a"] == [1, 3, 5, 11, 19, 27, 29]


def test_mapping_rules():
    assert cycloseq.validate_mapping(3, "2,3,1,0,1") == []
    assert cycloseq.validate_mapping(3, "2,3,1,0,2")
    assert not cycloseq.attains_full_complexity(3, 7, "0,1,2,3,2")
    assert cycloseq.analyze(3, 7, 1, 1, "0,1,2,3,2")["lc_gcd"] == 36


def test_degenerate_report():
    rep = cycloseq.analyze(3, 7, 1, 1, "2,3,1,0,2", degenerate=True)
    assert rep["bound"] == cycloseq.degenerate_lower_bound(3, 7, 1, 1) == 16
    assert rep["lc_gcd"] == 28


def test_checks():
    assert cycloseq.structural_lemmas(3, 5, 2, 1)["ok"]
    ev = cycloseq.root_evaluations(3, 5, 1, 1)
    assert ev["char_sums"]["ok"]
    assert ev["case_table"]["case_table_holds"]


def test_errors():
    with pytest.raises(cycloseq.InvalidParams):
        cycloseq.generate(3, 3, 1, 1)
    with pytest.raises(cycloseq.CapExceeded):
        cycloseq.generate(3, 5, 3, 3, cap=100)
    with pytest.raises(cycloseq.InvalidMapping):
        cycloseq.generate(3, 5, 1, 1, "2,3,1,0,2")
    with pytest.raises(cycloseq.MalformedSequence):
        cycloseq.linear_complexity("0129")
    assert issubclass(cycloseq.InvalidParams, cycloseq.Error)
