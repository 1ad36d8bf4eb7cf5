import pytest

import nfold_py as nf


def test_sd_delta_iterated_has_five_vertices():
    sd2 = nf.sd_delta(1, iterate=2)
    assert len(sd2["nondeg"][0]) == 5
    assert [len(level) for level in sd2["nondeg"]] == [5, 4]


def test_homology_of_boundary_is_a_sphere():
    h = nf.homology(nf.boundary(3))
    assert h["betti"] == [1, 0, 1]


def test_poset_homology_uses_the_nerve():
    assert nf.homology(nf.psd_delta(2))["betti"][:3] == [1, 0, 0]


def test_pushout_axiom_reports():
    r = nf.pushout_axiom(2, 1, 0, "terminal")
    assert r["status"] == "pass"
    assert {a["name"] for a in r["assertions"]} >= {"decomposition", "nerve-pushout", "j-equivalence"}
    h = nf.pushout_axiom(2, 2, 1, "horn")
    assert h["status"] == "fail"
    alpha = next(a for a in h["assertions"] if a["name"] == "alpha")
    assert "no transformation exists" in alpha["detail"]


def test_bad_arguments_raise():
    with pytest.raises(ValueError):
        nf.pushout_axiom(1, 1, 0, "nonsense")
    with pytest.raises(ValueError):
        nf.homology({"kind": "simplicial_set", "nondeg": [["v"], ["e"]], "faces": [[[]], [[[0, 3, [0]], [0, 0, [0]]]]]})


def test_unit_counit_and_ez():
    assert nf.unit_counit(nf.boundary(2), 2)["status"] == "pass"
    assert nf.multi_ez(trials=50, seed=1)["status"] == "pass"


def test_grid_listing_and_a_small_run():
    entries = nf.grid()
    assert sum(1 for e in entries if e[0] == 7) == 27
    out = nf.run_grid([1, 2])
    assert out["failed"] == 0
    assert out["passed"] == len(out["checks"]) == 10


def test_dot_classes():
    dot = nf.sd_dot(2, 1)
    assert 'class="out", style=solid' in dot
