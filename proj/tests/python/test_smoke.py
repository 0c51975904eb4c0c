"""Smoke tests for the python bindings."""

import json

import pytest

import ssg


def test_builtins():
    names = ssg.builtin_names()
    assert "grigorchuk" in names and "odometer" in names
    g = ssg.builtin_group("grigorchuk")
    assert g.d == 2
    assert g.states == ["a", "b", "c", "d"]


def test_word_problem():
    g = ssg.builtin_group("grigorchuk")
    aa = ssg.parse_word(g, "a.a")
    assert aa.is_trivial()
    assert ssg.parse_word(g, "b.c.d").is_trivial()
    assert not ssg.parse_word(g, "a.b").is_trivial()
    assert ssg.parse_word(g, "b.c").equal(ssg.parse_word(g, "d"))


def test_restriction_and_apply():
    odo = ssg.builtin_group("odometer")
    a = ssg.parse_word(odo, "a")
    assert a.apply("111") == "000"
    assert a.restriction("0").is_identity_word()
    assert a.restriction("1").equal(a)


def test_nucleus():
    nuc = ssg.nucleus(ssg.builtin_group("grigorchuk"))
    assert len(nuc.elements) == 5
    assert nuc.depth_certificate >= 0
    odo = ssg.builtin_group("odometer")
    assert len(ssg.nucleus(odo).elements) == 3
    with pytest.raises(RuntimeError):
        ssg.nucleus(ssg.builtin_group("grigorchuk"), max_size=2)


def test_elements_and_evaluation():
    odo = ssg.builtin_group("odometer")
    a_global = ssg.parse_element(odo, "rn a over odometer\nrow ^ -> ^ act a\n")
    p = ssg.parse_point(odo, "(1)")
    assert str(a_global.evaluate(p)) == "(0)"
    twice = a_global * a_global
    assert str(twice.evaluate(ssg.parse_point(odo, "(0)"))) == "01(0)"
    assert (a_global * a_global.inverse()).equal(ssg.identity_element(odo))


def test_make_element_and_germ():
    refl = ssg.builtin_group("reflection")
    h = ssg.make_element(refl, [("0", "01", ssg.parse_word(refl, "a"))])
    p = ssg.parse_point(refl, "(01)")
    assert h.fixes(p)
    data = ssg.periodic_nucleus(ssg.nucleus(refl), refl, "01")
    assert data.M == 1
    sig = ssg.germ_signature(h, p, data)
    assert sig.delta == 1
    assert str(sig) == "germ(point=01(01), n=a, delta=1, depth=2)"

    system = ssg.separate_points(refl, [p])
    f = ssg.build_f(refl, system)
    assert ssg.germ_signature(f, p, data).delta == 2
    assert ssg.coset_witness(h, f * h, p, f, data) == 1
    assert ssg.coset_witness(h, f, p, f, data) is None  # different fibers
    assert not ssg.germ_equal(h, f, p, data)


def test_witness_pipeline():
    g = ssg.builtin_group("grigorchuk")
    p = ssg.parse_point(g, "(1)")
    system = ssg.separate_points(g, [p])
    assert system.cones == ["1"]
    frame = ssg.build_e_prime(system)
    assert frame.gamma == ["0"]
    h = ssg.parse_element(g, "rn g over grigorchuk\nrow 0 -> 1 act b\nrow 1 -> 0 act a\n")
    image = ssg.phi(h, frame)
    assert image.evaluate(p) == p
    assert not image.equal(ssg.identity_element(g))


def test_transporter():
    refl = ssg.builtin_group("reflection")
    p = ssg.parse_point(refl, "(0)")
    q = ssg.parse_point(refl, "(1)")
    mover = ssg.parse_element(refl, "rn a over reflection\nrow ^ -> ^ act a\n")
    h = ssg.tuple_transporter(refl, [(p, q), (q, p)], [mover, mover])
    assert h.evaluate(p) == q
    assert h.evaluate(q) == p


def test_errors():
    with pytest.raises(ValueError):
        ssg.parse_group("group g\nalphabet 1\n")
    odo = ssg.builtin_group("odometer")
    with pytest.raises(ValueError):
        ssg.parse_point(odo, "(2)")
    with pytest.raises(ValueError):
        ssg.parse_word(odo, "nope")


def test_suite_runner():
    report = json.loads(ssg.run_suite("nucleus", seed=1))
    assert report["passed"] is True
    assert {c["id"] for c in report["checks"]} == {
        "nucleus.grigorchuk", "nucleus.odometer", "nucleus.trivial"}
    assert "germ" in ssg.suite_names()
