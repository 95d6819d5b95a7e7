import pytest

import electsys


def borda_election():
    rankings = [["a", "b", "c"]] * 5 + [["b", "a", "c"]] * 5 + [["c", "a", "b"]]
    return electsys.Election(["a", "b", "c"], rankings)


def test_borda_scores():
    assert electsys.scores(borda_election(), [2, 1, 0]) == [16, 15, 2]


def test_queens_court_dodgson():
    e = electsys.Election(
        ["Hatter", "MarchHare", "Dormouse"],
        [["Hatter", "MarchHare", "Dormouse"], ["MarchHare", "Dormouse", "Hatter"], ["Dormouse", "Hatter", "MarchHare"]],
    )
    assert electsys.condorcet_winner(e) is None
    assert [electsys.dodgson_score(e, c) for c in e.candidates] == [1, 1, 1]


def test_classify():
    assert electsys.classify_manipulation([1, 0, 0]) == "P"
    assert electsys.classify_manipulation([2, 1, 0]) == "NP-complete"
    assert electsys.classify_control("condorcet", "add-candidates", "constructive") == "immune"


def test_manipulate_borda():
    sincere = electsys.Election(["a", "b", "c"], [["a", "b", "c"]] * 5 + [["c", "a", "b"]])
    v = electsys.manipulate(sincere, "b", [1] * 5, [2, 1, 0], mode="unique")
    assert v["yes"]
    assert len(v["ballots"]) == 5


def test_round_trip():
    text = "candidates: a b c\nspoilers: c\nvoters:\nballot: 2 3 : a > b > c\nvoterpool:\napprove: 1 0 : b\n"
    f = electsys.parse_election(text)
    again = electsys.parse_election(electsys.serialize_election(f))
    assert again.election == f.election
    assert again.spoilers == ["c"]
    assert again.pool_size == 1


def test_parse_error():
    with pytest.raises(ValueError):
        electsys.parse_election("candidates: a b\nballot: a > z\n")


def test_run_cli():
    code, out, _ = electsys.run_cli(["classify", "--problem", "manipulation", "--alpha", "1,0,0"])
    assert code == 0
    assert "P" in out


def test_equivalence_small():
    r = electsys.check_equivalence("dodgson", instances=50)
    assert r["mismatches"] == 0
