import json

import pytest

import debruijn

GOLDEN = "0000011101010010001011001101111100000101101111101001"


def test_generate_and_verify():
    s = debruijn.generate(52, 5, 2)
    assert len(s) == 52
    report = debruijn.verify(s, 5, 2)
    assert report["pass"]
    assert report["zeros"] == report["ones"] == 26


def test_golden_sequence():
    assert debruijn.builtin_sequence() == GOLDEN
    report = debruijn.verify(GOLDEN, 5, 1)
    assert not report["pass"]
    assert report["max_multiplicity"] == 2
    counts = debruijn.window_histogram(GOLDEN, 5)
    assert counts.count(1) == 12 and counts.count(2) == 20


def test_almost_balanced():
    s = debruijn.generate(7, 3, 1, mode="almost")
    assert debruijn.verify(s, 3, 1, mode="almost")["pass"]
    t = debruijn.generate(7, 3, 1, mode="almost", imbalance=-1)
    assert t == debruijn.complement(s)


def test_feasibility_and_errors():
    assert debruijn.feasible(10, 2, 2) == (False, "k < n/2^l")
    with pytest.raises(debruijn.Infeasible):
        debruijn.generate(10, 2, 2)
    with pytest.raises(debruijn.ParseError):
        debruijn.verify("0102", 2, 1)
    with pytest.raises(debruijn.GuardExceeded):
        debruijn.count(29, 5, 1)
    assert issubclass(debruijn.Infeasible, debruijn.Error)


def test_census():
    assert debruijn.count(8, 3, 1, up_to_rotation=True) == 2
    assert debruijn.count(10, 3, 2) == 200
    assert debruijn.enumerate(6, 2, 2, up_to_rotation=True) == ["000111", "001011", "001101"]
    assert debruijn.canonical_rotation("10110") == "01011"
    assert debruijn.period("0101") == 2


def test_graph():
    seq = debruijn.eulerian_sequence(4)
    assert debruijn.verify(seq, 4, 1)["pass"]
    assert len(debruijn.build_circuit(6, 3, 0)) == 6


def test_crib_and_lookup():
    crib = json.loads(debruijn.crib_json())
    assert crib["order"][0] == "AH"
    assert crib["table"]["01011"] == ["9H", "9D"]
    r = debruijn.lookup("RBRBB")
    assert r["candidates"] == ["9H", "9D"]
    assert r["question"] == "hearts?"
    assert debruijn.reveal("RBRBB", answer_yes=False) == ["9D", "QS", "4H", "2S", "6S"]
    assert debruijn.lookup("RBRBB", crib=debruijn.crib_json())["candidates"] == ["9H", "9D"]
    with pytest.raises(debruijn.ParseError):
        debruijn.lookup("XYZ")


def test_cli():
    status, out, _ = debruijn.run_cli(["lookup", "--builtin", "--colors", "RBRBB", "--answer", "no"])
    assert status == 0
    assert out == "9D QS 4H 2S 6S\n"
    status, out, _ = debruijn.run_cli(["verify", "-l", "5", "-k", "2"], stdin=GOLDEN)
    assert status == 0 and out.startswith("result: pass")
