import json
import pathlib

import pytest

import monadforge as mf

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def verdicts(report):
    return {c["id"]: c["verdict"] for c in report["conditions"]}


def test_dims_closed_forms():
    rows = mf.dims(4)
    assert [r["n"] for r in rows] == [1, 2, 3, 4]
    for r in rows:
        n = r["n"]
        assert r["dimS"] == 3 * n * (n + 1)
        assert r["wDim"] == 2 * n + 2


def test_null_correlation_passes():
    rep = mf.verify("net", load("null_correlation.json"))
    assert set(verdicts(rep).values()) == {"PASS"}


def test_bad_octuple_fails_the_pencil_identity():
    rep = mf.verify("octuple", load("bad_octuple.json"))
    assert "FAIL" in verdicts(rep).values()


def test_generated_octuple_is_deterministic_and_closed():
    a = mf.generate(2, 11, 3)
    assert a == mf.generate(2, 11, 3)
    rep = mf.verify("octuple", a, mode="fast")
    assert verdicts(rep)["i_gamma"] == "PASS"


def test_cohomology_of_null_correlation():
    table = mf.cohomology(load("null_correlation.json"), -2, 0)
    assert [r["h"] for r in table["rows"]] == [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]


def test_search_ignores_thread_count():
    one = mf.search(2, 5, 6, mode="fast", threads=1)
    two = mf.search(2, 5, 6, mode="fast", threads=2)
    assert one == two


def test_exact_rank():
    assert mf.rank([[1, 2], [2, 4]]) == 1
    assert mf.rank([["1/3", "1/2"], ["1/2", "1/3"]]) == 2
    assert mf.rank([]) == 0


def test_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        mf.verify("net", {"schema": "nonsense"})
    with pytest.raises(ValueError):
        mf.rank([[1, 2], [3]])
    with pytest.raises(ValueError):
        mf.verify("net", load("null_correlation.json"), prime=91)
