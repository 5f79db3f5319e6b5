"""Smoke tests for the python bindings, driven through the same pipeline the
CLI exposes. Golden values follow the worked examples."""

import newtcut

F1 = "x1^2+x1*x2^4+x2^3*x3+x3^3"
F2 = "x1^2+x2*x3"
F3 = "x2*x3+x1^2*x2^2+x1^2*x3^2"


def test_analyze_facet_table():
    report = newtcut.analyze(F1, 3)
    assert report["ok"]
    rows = {
        tuple(r["u"]): (r["N"], r.get("slope"))
        for r in report["facetTable"]
        if "slope" in r
    }
    assert rows[(9, 4, 6)] == ("18", "-19/18")
    assert rows[(4, 1, 5)] == ("8", "-5/4")
    assert rows[(1, 0, 1)] == ("1", "-2")


def test_b1_and_slope_classes():
    report = newtcut.b1(F2, 3)
    classes = report["slopeClasses"]
    assert len(classes) == 1
    cls = classes[0]
    assert cls["slope"] == "-3/2"
    assert cls["allB1"]
    assert not cls["consistentAccepted"]
    assert not cls["compatibleAccepted"]


def test_verify_example_3():
    report = newtcut.verify(F3, 3, drop="auto")
    assert report["ok"]
    assert report["certificate"]["pass"]
    assert report["reducedPoles"]["values"] == ["-1"]
    assert report["certificate"]["numericalData"] == [[1, 1], [2, 2]]


def test_verify_example_1_case_b():
    report = newtcut.verify(F1, 3, drop="auto")
    assert report["certificate"]["pass"]
    cases = {o["case"] for o in report["certificate"]["orbits"]}
    assert cases == {"A", "B"}
    assert report["certificate"]["numericalData"] == [[1, 1], [18, 19]]


def test_refusal_is_reported():
    report = newtcut.bcut(F2, 3, drop="(1,2,0),(1,0,2)")
    assert not report["ok"]
    assert len(report["refusal"]["blockingFacets"]) == 2


def test_ztop():
    strata = [
        {"chi": 1, "divisors": [[2, 3]]},
        {"chi": 2, "divisors": [[1, 1], [2, 3]]},
    ]
    report = newtcut.ztop(strata)
    assert report["zeta"]["rendered"] == "(s+3)/((s+1)(2s+3))"
    assert report["actualPoles"] == ["-3/2", "-1"]


def test_input_errors_raise():
    try:
        newtcut.analyze("1 + x1", 1)
    except newtcut.InputError:
        pass
    else:
        raise AssertionError("constant term was not rejected")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
