import json
import math

import pytest

import zetanet as zn


def test_zeta_value():
    value, bound = zn.LSeries.zeta().eval(3.0)
    assert value == pytest.approx(1.2020569031595942, rel=1e-13)
    assert bound <= 1e-12


def test_aiello_root():
    z = zn.LSeries.zeta()
    root = zn.critical_exponent(lambda a: zn.unipartite_margin(z, a)["margin"], 3.1, 4.0)
    assert root == pytest.approx(3.4787507857339603, abs=1e-10)
    sym = zn.critical_exponent(lambda a: zn.psi_bipartite(z, a, z, a)["margin"], 3.1, 4.0)
    assert sym == pytest.approx(root, abs=1e-10)


def test_convergence_error():
    z = zn.LSeries.zeta()
    with pytest.raises(zn.ConvergenceError):
        zn.psi_bipartite(z, 2.9, z, 3.5)
    with pytest.raises(ValueError):
        zn.psi_bipartite(z, 2.9, z, 3.5)


def test_epidemic_threshold():
    z = zn.LSeries.zeta()
    tc = zn.critical_transmissibility(z, 3.3)
    assert tc == pytest.approx(0.57307453395272575, rel=1e-12)
    assert zn.epidemic_threshold_product(z, 3.3, z, 3.3) == pytest.approx(tc * tc, rel=1e-14)


def test_sampling_is_deterministic():
    z = zn.LSeries.zeta()
    p = zn.DegreeDistribution.from_lseries(z, 3.1, 500)
    g1 = zn.sample_bipartite(p, p, 2000, 2000, 7)
    g2 = zn.sample_bipartite(p, p, 2000, 2000, 7)
    assert g1.edges == g2.edges
    assert json.loads(g1.manifest())["seed"] == 7
    assert 0.0 < zn.giant_component_fraction(g1) <= 1.0
    stats = zn.sir_percolation(g1, 0.0, 0.0, 50, 3)
    assert stats["mean_outbreak_a"] == 1.0


def test_signed_sampling_rejected():
    mu = zn.DegreeDistribution.from_lseries(zn.LSeries.mobius(), 3.0, 100)
    with pytest.raises(zn.SignedDistributionError):
        zn.sample_bipartite(mu, mu, 10, 10, 1)


def test_scan_round_trip(tmp_path):
    r = zn.scan("zeta_psi", resolution=21, threads=2)
    assert "zeta_psi" in zn.known_formula_tags()
    assert r.zero_curve
    z = zn.LSeries.zeta()
    for a, b in r.zero_curve:
        assert abs(zn.psi_bipartite(z, a, z, b)["margin"]) <= 1e-9
    path = tmp_path / "scan.csv"
    r.export_csv(str(path))
    back = zn.import_csv(str(path))
    assert back.margin == r.margin
    r.export_json(str(tmp_path / "scan.json"))
    data = json.loads((tmp_path / "scan.json").read_text())
    assert data["schema_version"] == 1
    assert len(data["cells"]) == 21 * 21
    assert r.label(0, 0) == "SUPER"
    assert math.isfinite(r.margin[0])
