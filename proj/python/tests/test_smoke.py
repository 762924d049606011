import pytest

import starlax as s

ORDER = 4


def obs():
    return s.Observable.q(1, ORDER), s.Observable.p(1, ORDER)


def test_canonical_commutator_and_bracket():
    q, p = obs()
    assert str(s.star_commutator(q, p)) == "i*hbar"
    assert str(s.poisson(q, p)) == "1"


def test_orderings_and_intertwiner():
    q, p = obs()
    assert str(s.star_weyl(p, q)) == "-1/2*i*hbar + q1*p1"
    assert str(s.star_standard(p, q)) == "-i*hbar + q1*p1"
    assert s.n_transform(s.star_weyl(p, q)) == s.star_standard(p, q)


def test_disjoint_supports_multiply_pointwise():
    a = s.Observable.p(1, ORDER) * s.Observable.exp_q(1, "1/2", ORDER)
    b = s.Observable.p(2, ORDER) * s.Observable.exp_q(2, "-1", ORDER)
    assert s.star_weyl(a, b) == a * b


def test_rll_report_and_negative_control():
    ok = s.check_rll("A1", order=6)
    assert ok["pass"] and ok["residual_terms"] == 0 and ok["witness"] is None
    bad = s.check_rll("A1", r_override="B", order=6)
    assert not bad["pass"] and bad["witness"].startswith("entry (")


def test_commute_and_classical():
    assert s.check_char_commute("B2", 3, "tilde", params="g=3", order=6)["pass"]
    assert all(r["pass"] for r in s.classical_checks(3))


def test_corrections():
    corr = s.quantum_correction(3, 4, 8)
    assert str(corr) == "-1/4*hbar^2*exp(q1 - q2) - 1/4*hbar^2*exp(q2 - q3)"
    assert corr == s.closed_form_correction(3, 4, 8)
    assert s.quantum_correction(4, 5, 8) == s.closed_form_correction(4, 5, 8)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        s.check_rll("Z1")
    with pytest.raises(ValueError):
        s.check_rll("A1", params="eps=0.5")


def test_acceptance_subset():
    (c,) = s.run_acceptance(only=[1])
    assert c["id"] == 1 and c["pass"] and len(c["checks"]) == 2
