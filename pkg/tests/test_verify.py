import json

import pytest

import qgauss as qg
from qgauss import QContext
from qgauss.verify import commutator_residual, random_chain


@pytest.mark.parametrize("suite", qg.SUITES)
def test_every_suite_passes_at_defaults(suite):
    result = qg.run_suite(suite)
    assert result.passed, (suite, result.max_deviation, result.failures[:3])
    assert result.max_deviation <= result.tolerance


def test_unknown_suite():
    with pytest.raises(ValueError):
        qg.run_suite("fourier-gram")


def test_result_serializes_to_json():
    result = qg.run_suite("dg-gram")
    text = json.dumps(result.to_dict())
    back = json.loads(text)
    assert back["suite"] == "dg-gram"
    assert back["passed"] is True
    assert back["params"]["nmax"] == 12


def test_commutator_on_seeded_chains():
    ctx = QContext(q=0.5)
    import numpy as np
    rng = np.random.default_rng(12345)
    for _ in range(5):
        f = random_chain(ctx, rng)
        assert commutator_residual(ctx, f, "dg") <= 1e-13
        assert commutator_residual(ctx, f, "mac") <= 1e-13


def test_mac_gram_fails_at_starved_precision():
    result = qg.run_suite("mac-gram", ctx=QContext(q=0.5, digits=8), nmax=12)
    assert not result.passed
    assert "precision_analysis" in result.notes
    assert "digits" in result.notes["precision_analysis"]


def test_poisson_suite_uses_c():
    result = qg.run_suite("poisson", c=2.0)
    assert result.passed
    assert result.params["c"] == 2.0


def test_circle_mac_conjugated_variant_fails():
    # the phase-conjugated form is the classical relation, which is not
    # diagonal for this family; the suite must report that honestly
    result = qg.run_suite("circle-mac", ctx=QContext(q=0.5), nmax=3,
                          conjugate_first=True)
    assert not result.passed
