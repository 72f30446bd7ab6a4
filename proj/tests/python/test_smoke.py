import hyperspec as hs


def test_builtins_present():
    names = hs.builtin_names()
    for name in ("K2", "sign", "Z6", "Z5modG", "degenerate1", "broken-A4"):
        assert name in names


def test_axiom_check_pass_and_fail():
    assert hs.check(hs.builtin("Z6"))["pass"]
    rep = hs.check(hs.builtin("broken-A4"))
    assert not rep["pass"]
    by_axiom = {c["axiom"]: c for c in rep["checks"]}
    assert not by_axiom["A4"]["pass"]
    assert by_axiom["A4"]["witness"] == ["1"]
    assert all(c["pass"] for a, c in by_axiom.items() if a != "A4")


def test_ideal_lattice_z6():
    lat = hs.ideals(hs.builtin("Z6"))
    assert lat["count"] == 4
    members = [tuple(e["members"]) for e in lat["ideals"]]
    assert ("0",) in members and ("0", "2", "4") in members


def test_theorem_end_to_end():
    rep = hs.theorem(hs.builtin("Z6"))
    assert rep["overall"] is True
    assert rep["step2_quasi_compact"]["ok"] is True
    assert rep["step4_open"]["ok"] is True


def test_spectral_proper_k2():
    rep = hs.spectral(hs.builtin("K2"), "proper")
    assert rep["spectral"] is True
    assert len(rep["points"]) == 1


def test_quotient_and_roundtrip():
    q = hs.quotient(5, [1, 4])
    assert q.size == 3
    assert "{1,4}" in q.labels
    doc = hs.emit(q)
    assert hs.emit(hs.parse(doc)) == doc


def test_parse_diagnostics():
    try:
        hs.parse("this is not a document")
    except hs.EngineError as e:
        assert "MALFORMED" in str(e)
    else:
        raise AssertionError("parser accepted junk")


def test_cli_passthrough():
    code, out, err = hs.run(["theorem", "--builtin", "K2"])
    assert code == 0 and "VERIFIED" in out and err == ""
    code, out, err = hs.run(["check", "--builtin", "broken-A4"])
    assert code == 1
