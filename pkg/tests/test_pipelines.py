import pytest

from chernlab.errors import CertificateMismatch
from chernlab.pipelines import (
    nonpositive_divisor_witness,
    sdiv_checks,
    sigma3_pipeline,
    sigma4_pipeline,
)


@pytest.fixture(scope="module")
def sigma4_cert():
    return sigma4_pipeline()


def test_sigma3_pipeline_passes():
    cert = sigma3_pipeline()
    assert cert.status == "pass", cert.failed_clauses()
    cert.check()


def test_sdiv_pipeline_passes():
    cert = sdiv_checks()
    assert cert.status == "pass", cert.failed_clauses()


def test_witness_pipeline_passes():
    cert = nonpositive_divisor_witness(2)
    assert cert.status == "pass", cert.failed_clauses()


def test_witness_rejects_height_one():
    with pytest.raises(ValueError):
        nonpositive_divisor_witness(1)


def test_sigma4_pipeline_passes(sigma4_cert):
    assert sigma4_cert.status == "pass", sigma4_cert.failed_clauses()


def test_sigma4_r_values_byte_exact(sigma4_cert):
    by_name = {c.name: c for c in sigma4_cert.clauses}
    assert by_name["r1_bytematch"].witness["r1"] == "c2^8 + c2^4*w^2"
    assert by_name["r4_bytematch"].witness["r4"] == (
        "c2^8*w^3 + c2^5 + c2^2*w^3 + c2*w^2 + c3*w"
    )


def test_sigma4_socle_witness(sigma4_cert):
    by_name = {c.name: c for c in sigma4_cert.clauses}
    assert by_name["socle_generated_by_w3c3"].witness["socle"] == ["c3*w^3"]


def test_certificate_check_raises_on_failure():
    cert = sigma3_pipeline()
    cert.add("forced_failure", False, {})
    with pytest.raises(CertificateMismatch):
        cert.check()


def test_certificates_deterministic():
    a = sdiv_checks().to_json()
    b = sdiv_checks().to_json()
    assert a == b
