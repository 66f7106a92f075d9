import numpy as np
import pytest

import latdim


def test_groups_and_subgroups():
    s3 = latdim.Group.named("S3")
    assert s3.order == 6
    assert not s3.is_abelian()
    assert len(s3.subgroups()) == 6
    assert len(latdim.Group.named("Z4xZ4").subgroups()) == 15


def test_kleppner_and_center():
    wh = latdim.Cocycle.weyl_heisenberg(latdim.Group.cyclic(4))
    assert wh.is_valid()
    assert wh.kleppner()
    assert wh.center_dimension() == 1
    assert latdim.Cocycle.trivial(latdim.Group.named("S3")).center_dimension() == 3


def test_center_valued_trace_on_s3_transposition():
    c = latdim.Cocycle.trivial(latdim.Group.named("S3"))
    delta = np.zeros(6, dtype=complex)
    delta[1] = 1
    expected = np.zeros(6)
    expected[[1, 2, 5]] = 1 / 3
    assert np.allclose(latdim.center_valued_trace(c, delta), expected)


def test_phi_matches_oracle_and_character():
    types = latdim.irreducible_types(latdim.Cocycle.trivial(latdim.Group.named("D4")))
    rep = types[-1]
    assert rep.dim == 2
    window = np.array([0.6, 0.8j])
    a = latdim.phi(rep, "whole", window)
    b = latdim.phi(rep, "whole", oracle=True)
    assert np.allclose(a, b, atol=1e-10)
    chars = np.array([np.trace(rep.matrix(g)) for g in range(8)])
    assert np.allclose(a, np.conj(chars) / 8, atol=1e-10)


def test_gabor_decision_and_construction():
    tf = latdim.TimeFrequency(latdim.Group.cyclic(4))
    assert tf.rep.dim == 4
    assert tf.rep.formal_dimension() == pytest.approx(0.25)
    assert latdim.decide(tf.rep, "(2,0),(0,2)") == {"frame": True, "riesz": True, "basis": True, "dpi_vol": 1.0}
    gens, report = latdim.construct(tf.rep, "(2,0),(0,2)")
    assert gens.shape == (4, 1)
    assert report["lower"] == pytest.approx(1.0)
    assert report["upper"] == pytest.approx(1.0)
    with pytest.raises(latdim.LatdimError, match="Infeasible"):
        latdim.construct(tf.rep, "(2,0)")


def test_scan_has_no_violations():
    result = latdim.gabor_scan(latdim.Group.cyclic(3), 2, 2)
    assert result["violations"] == []
    assert result["construction_failures"] == []
    assert len(result["rows"]) == 6 * 4


def test_cli_roundtrip():
    code, out, _ = latdim.run_cli(["kleppner", "--group", "Z4xZ4", "--cocycle", "weyl-heisenberg"])
    assert code == 0
    assert out.strip() == "true"
    code, _, err = latdim.run_cli(["kleppner", "--group", "Nope"])
    assert code == 1
    assert "InvalidInput" in err
