import pathlib

import pytest

import maymust

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_chain_exact():
    got = maymust.solve_file(DATA / "example1.mmaf", "exact")
    assert len(got) == 3
    assert {"a1": "in", "a2": "out", "a3": "in", "a4": "out", "a5": "in"} in got


def test_chain_grounded_engines_agree():
    f = maymust.Framework.load(str(DATA / "example1.mmaf"))
    brute = f.solve("maxi-grounded")
    scc = f.solve("maxi-grounded", engine="scc")
    assert brute == scc == [{"a1": "in", "a2": "undec", "a3": "undec", "a4": "out", "a5": "in"}]


def test_self_attack():
    f = maymust.Framework.parse("arg a1 0 0 1 1\natt a1 a1\n")
    assert f.solve("exact") == []
    assert f.solve("maxi-complete") == [{"a1": "undec"}]
    assert f.tuple("a1") == ((0, 0), (1, 1))


def test_mutual_adf():
    f = maymust.Framework.load(str(DATA / "mutual.mmaf"))
    assert f.solve("adf-grounded") == [{"ap": "undec", "aq": "undec"}]
    assert all(l not in f.solve("adf-complete") for l in f.solve("exact"))


def test_errors():
    with pytest.raises(maymust.MayMustError, match="MayExceedsMust"):
        maymust.Framework.parse("arg a 2 1 0 0\n")
    with pytest.raises(maymust.MayMustError, match="NoMaximallyProper"):
        maymust.Framework.parse(
            "arg a1 1 1 0 0\narg a2 2 2 0 0\natt a1 a2\natt a2 a2\n"
        ).solve("maxi-complete")
    with pytest.raises(maymust.MayMustError, match="UnknownSemantics"):
        maymust.Framework.parse("arg a 0 0 1 1\n").solve("nope")


def test_random_round_trip():
    f = maymust.Framework.random(6, "0.3", "dung", seed=42)
    g = maymust.Framework.parse(f.to_mmaf())
    assert f.names == g.names and f.attacks == g.attacks
    assert all(f.check().values())


def test_render_json():
    import json

    f = maymust.Framework.load(str(DATA / "example1.mmaf"))
    doc = json.loads(f.render("maxi-stable"))
    assert doc["count"] == 1 and doc["semantics"] == "maxi-stable"
