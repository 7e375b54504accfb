import os

import pytest

sp = pytest.importorskip("sigmapi")

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def test_types():
    t = sp.parse_type("1 + 1*0")
    assert t.size == 5
    assert t == sp.Type("1+(1*0)")
    assert t.pointed and not t.copointed


def test_decide_projections():
    f = sp.term("p0 ?", "0*0", "0")
    g = sp.term("p1 ?", "0*0", "0")
    assert sp.decide(f, g)["outcome"] == "NotEqual"
    f1 = sp.term("s0 p0 ?", "0*0", "0+1")
    g1 = sp.term("s0 p1 ?", "0*0", "0+1")
    v = sp.decide(f1, g1)
    assert v["equal"] and v["steps"] > 0


def test_oracle_agrees():
    o = sp.Oracle()
    terms = o.enumerate("1*1", "1+1")
    assert len(terms) == 10
    assert o.class_count("1*1", "1+1") == 2
    for f in terms:
        for g in terms:
            assert sp.decide(f, g)["equal"] == o.same_class(f, g)


def test_compose_and_factor():
    swap = sp.term("{s1 !, s0 !}", "1+1", "1+1")
    ident = sp.compose(swap, swap)
    assert sp.decide(ident, sp.identity("1+1"))["equal"]
    assert sp.factor_inj(sp.term("s0 !", "1", "1+1"), 0) is not None
    assert sp.factor_inj(sp.term("s0 !", "1", "1+1"), 1) is None


def test_annotate():
    a = sp.annotate(sp.term("p0 ?", "0*1", "1+1"))
    assert a["copointed"] and a["pointed"]


def test_errors():
    with pytest.raises(sp.ParseError):
        sp.parse_type("1 + ")
    with pytest.raises(sp.TypingError):
        sp.term("p0 !", "1", "0")
    with pytest.raises(sp.GuardExceeded):
        sp.Oracle(guard=10).enumerate("(1+1)*(1+1)", "(1+1)*(1+1)")


def test_module_and_oracle_generators():
    graph, terms = sp.load_module(os.path.join(DATA, "bouncer.spt"))
    assert sp.decide(terms["f"], terms["g"])["outcome"] == "RequiresOracle"
    o = sp.Oracle(graph)
    assert o.same_class(terms["f"], terms["g"])
    hs = o.find_bouncers(terms["pG"], terms["sF"], 0, 0)
    assert terms["H"] in hs


def test_cli():
    code, out, _ = sp.run_cli(["decide", os.path.join(DATA, "intro.spt"), "--left", "f", "--right", "g"])
    assert code == 0 and "Equal" in out
    code, _, _ = sp.run_cli(["check", os.path.join(DATA, "bad.spt")])
    assert code == 66
