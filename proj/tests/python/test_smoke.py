"""Smoke tests for the python module against known exact values."""

import json

import parabolic_lab as pl


def test_cohomology_dims():
    assert pl.cohomology_dim("hyperbolic", 2, 1) == 12
    assert pl.cohomology_dim("hyperbolic", 2, 4) == 4
    assert pl.cohomology_dim("elliptic", 2, 1) == 12
    assert pl.cohomology_dim("sl3sl3", 2, 1) == 24
    assert pl.harmonic_dim("elliptic", 2, 4) == 4
    for ell in pl.slice_homogeneities("elliptic", 1):
        if ell > 0:
            assert pl.cohomology_dim("elliptic", 1, ell) == 0


def test_direct_matches_kostant():
    for kind in ("sl3", "sl3sl3"):
        for p in (0, 1, 2):
            for ell in range(-6, 7):
                assert pl.cohomology_dim(kind, p, ell) == pl.kostant_dim(kind, p, ell)


def test_kostant_weights():
    assert pl.affine_action([1], 1, 1) == (-3, 3)
    assert pl.affine_action([1, 2], 1, 1) == (-5, 1)
    assert sorted(pl.kostant_weights(1, 1, 2)) == [(-5, 1), (1, -5)]
    assert sorted(pl.kostant_weights(0, 0, 1)) == [(-2, 1), (1, -2)]


def test_tables():
    t3 = pl.table(3)
    entries = {(e["module"], e["degree"]): sorted(map(tuple, e["weights"])) for e in t3["entries"]}
    assert entries[("sl3", 2)] == [(-5, 1), (1, -5)]
    t4 = pl.table(4)
    assert len(t4["components"]) == 16
    t1 = pl.table(1)
    assert len(t1["rows"]) == 8
    comments = sorted(r["linearity"]["comment"] for r in t1["rows"])
    assert comments.count("sesquilinear") == 2
    assert comments.count("antilinear in both arguments") == 2


def test_classify_labels():
    rows = pl.classify("elliptic")["components"]
    labels = sorted(r["torsion_label"] for r in rows)
    assert labels.count("curvature-homog-4") == 2
    assert "elliptic-J-obstruction-1" in labels
    flagged = [r for r in rows if r["embedded_vanishing"]]
    assert len(flagged) == 4


def test_quadric_and_chain():
    point = {"z1": ["1/1", "0/1"], "z2": ["0/1", "0/1"], "w1": ["0/1", "1/1"], "w2": ["0/1", "0/1"]}
    assert pl.on_quadric("hyperbolic", json.dumps(point))
    point["w1"] = ["0/1", "2/1"]
    assert not pl.on_quadric("hyperbolic", json.dumps(point))
    pts = pl.one_chain("hyperbolic", "1", "0", 4)
    assert len(pts) == 4
    for p in pts:
        assert p["w1"][0] == p["w2"][0]  # u1 = u2 on the alpha = 1 line


def test_heisenberg():
    origin = {"z1": ["0/1", "0/1"], "z2": ["0/1", "0/1"], "w1": ["0/1", "0/1"], "w2": ["0/1", "0/1"]}
    param = {"z1": ["1/1", "0/1"], "z2": ["0/1", "0/1"], "w1": ["2/1", "1/1"], "w2": ["0/1", "0/1"]}
    moved = pl.heisenberg_translate("hyperbolic", param, origin)
    assert moved == {"kind": "hyperbolic", **param}


def test_normal_form():
    rep = pl.normal_form_report("hyperbolic", "N1: z1 z2 zb2 + z2 zb1 zb2 N2: 0")
    assert [v["condition"] for v in rep["violations"]] == ["d^2 N1_{21} / dz1 dz2"]
    assert rep["torsion_free"] == {"N1": False, "N2": True}
    rep2 = pl.normal_form_report("elliptic", "N: z1^2 zb2^3 U")
    assert rep2["in_normal_form"] and rep2["torsion_free"]["N"]


def test_algebra_dump():
    dump = pl.algebra("hyperbolic")
    assert dump["dim"] == 16
    assert len(dump["basis"]) == 16
    assert dump["schema_version"] == 1
