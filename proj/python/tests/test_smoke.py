import pytest

import amcm


def test_parse_canonical_text():
    assert amcm.parse("x=0;y=x // done") == "x = 0; y = x"
    assert amcm.parse("  // nothing\n") == ""


def test_parse_errors():
    with pytest.raises(amcm.ParseError, match="line 1"):
        amcm.parse("x = ;")
    with pytest.raises(amcm.StrictModeError):
        amcm.parse("x = 2", strict=True)
    assert issubclass(amcm.StrictModeError, amcm.ParseError)


def test_run_success():
    r = amcm.run('read(x); write(x); y = true; write("s")', input=[7])
    assert r["ok"]
    assert r["memory"] == {"x": 7, "y": True}
    assert r["output"] == [7, "s"]
    assert r["input"] == []


def test_run_keeps_bools_distinct_from_ints():
    r = amcm.run("read(b); if (b) x = 1 else x = 0", input=[True])
    assert r["memory"]["x"] == 1
    r = amcm.run("read(b); if (b) x = 1 else x = 0", input=[1])
    assert not r["ok"]
    assert r["error_kind"] == "TypeMismatch"


def test_run_errors():
    assert amcm.run("x = y")["error"] == "UnboundIdentifier(y)"
    assert amcm.run("read(x)")["error_kind"] == "InputExhausted"


def test_trace_lines():
    lines = amcm.trace("x = 0")
    assert len(lines) == 3
    assert lines[0].startswith("#0 code=2")
    assert lines[-1].endswith("status=Halted")


def test_check_type():
    assert amcm.check_type("prod<int,str>", '(1, "a")') is None
    assert amcm.check_type("prod<int,str>", "(1, 2)") == ("expected Str", "/2")


def test_render_and_slots():
    tpl = "Hi {{name:str}}, {{n:int}} new."
    assert amcm.render(tpl, 'name = "Ann"\nn = 3\n') == "Hi Ann, 3 new."
    assert amcm.check_slots(tpl, "n = true\n") == [
        ("name", "UNBOUND"),
        ("n", "TYPE MISMATCH expected Int at /"),
    ]
    with pytest.raises(amcm.BindError, match="name: UNBOUND"):
        amcm.render(tpl, "n = 3\n")
