import pytest

import knotlab

TREFOIL = "X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n"


def test_parse_and_round_trip():
    pd = knotlab.parse_pd(TREFOIL)
    assert len(pd) == 3
    assert str(pd) == TREFOIL
    assert knotlab.PlanarDiagram(pd.crossings) == pd
    assert knotlab.validate(pd)["ok"]


def test_parse_error_type():
    with pytest.raises(knotlab.ParseError):
        knotlab.parse_pd("X 1,2,3\n")
    assert issubclass(knotlab.ParseError, knotlab.KnotlabError)


def test_trefoil_invariants():
    inv = knotlab.invariants(knotlab.parse_pd(TREFOIL))
    assert inv == {"alexander": [1, -1, 1], "determinant": 3, "signature": -2, "genus_lower_bound": 1}
    assert knotlab.signature(knotlab.mirror(knotlab.parse_pd(TREFOIL))) == 2


@pytest.mark.parametrize("m", range(1, 6))
def test_twist_knot_family(m):
    pd = knotlab.rational_knot([2, 2 * m])
    assert knotlab.determinant(pd) == 4 * m + 1
    assert knotlab.alexander(pd) == [m, -(2 * m + 1), m]


@pytest.mark.parametrize("n,name", [(0, "6_1"), (1, "8_1"), (2, "10_1")])
def test_family_identifies(n, name):
    pd, expected, _ = knotlab.paper_family(n)
    assert expected == name
    assert knotlab.identify(pd) == [(name, "same")]
    assert knotlab.invariants(pd) == knotlab.invariants(knotlab.twist_knot(2 * n + 6))


def test_perturbation_keeps_invariants():
    pd = knotlab.rational_knot([2, 1, 3])
    ref = knotlab.invariants(pd)
    for seed in range(10):
        assert knotlab.invariants(knotlab.reidemeister_perturb(pd, seed)) == ref


def test_constructions_and_errors():
    assert knotlab.determinant(knotlab.cable2(knotlab.twist_knot(4), 3)) == 3
    assert knotlab.validate(knotlab.whitehead_double(knotlab.unknot_kink(), twists=2))["ok"]
    with pytest.raises(knotlab.DomainError):
        knotlab.torus_2n(4)


def test_seifert_and_bf():
    s = knotlab.seifert(knotlab.parse_pd(TREFOIL))
    assert (s["circles"], s["genus"], s["method"]) == (2, 1, "alternating")
    assert knotlab.bf_certificate(5)["verdict"] == "persistently-laminar"
    assert knotlab.bf_certificate(5, certified=False)["verdict"] == "essential-only-unknown"


def test_paper_list_and_cli():
    names = knotlab.paper_list()
    assert "9_46" in names and "10_139" not in names
    code, out, _ = knotlab.run_cli(["paperlist", "--check"])
    assert code == 0 and "check: pass" in out
    code, out, _ = knotlab.run_cli(["invariants", "-"], TREFOIL)
    assert code == 0 and "determinant: 3" in out
