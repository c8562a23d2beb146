"""Smoke tests for the python binding."""

import dcx


def test_classify_set():
    report = dcx.classify({"dim": 2, "points": [[0, 0], [1, 1]]})
    assert report["gdmc"]["status"] == "Yes"
    assert report["ddmc"]["status"] == "Yes"
    assert report["Mnat"]["status"] == "No"
    assert report["M2nat"]["status"] == "No"


def test_classify_function():
    entries = [{"x": [t], "v": str(t * t)} for t in range(-2, 3)]
    report = dcx.classify({"dim": 1, "entries": entries})
    assert report["sep"]["status"] == "Yes"
    assert report["Lnat"]["status"] == "Yes"


def test_paper_example_round_trip():
    entry = dcx.paper_example("fig1a")
    assert entry["expected"]["mm"] == "Yes"
    assert entry["expected"]["Mnat"] == "Yes"
    assert entry["expected"]["sep"] == "No"
    report = dcx.classify(entry["object"])
    for cls, want in entry["expected"].items():
        assert report[cls]["status"] == want, cls


def test_generate_is_deterministic_and_sound():
    a = dcx.generate("lnat_set", dim=2, radius=2, seed=11)
    b = dcx.generate("lnat_set", dim=2, radius=2, seed=11)
    assert a == b
    assert dcx.classify(a)["Lnat"]["status"] == "Yes"


def test_operations():
    s1 = {"dim": 2, "points": [[0, 0], [0, 1]]}
    s2 = {"dim": 2, "points": [[0, 0], [1, 0]]}
    total = dcx.binary_op("minkowski_sum", s1, s2)
    assert sorted(map(tuple, total["points"])) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    t = dcx.d_transform({"dim": 3, "points": [[1, 1, 1]]}, "to_lnat")
    assert t["points"] == [[1, 2, 3]]


def test_table_and_catalog():
    text = dcx.table_text()
    assert "ddmc" in text and "^* >sep" in text
    assert "fig1a" in dcx.catalog_ids()
