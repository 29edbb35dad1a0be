"""Smoke tests for the python extension: fixture values and invariants that
cross-check the bound surface against numpy."""

import math
import sys

import numpy as np

import fsdlab


def approx(a, b, tol=1e-10):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def test_delta_fixtures():
    x = np.array([1.0, 1.0]) / math.sqrt(2.0)
    approx(fsdlab.delta(np.diag([1.0, 4.0]).astype(complex), x.astype(complex)), 2.0)
    for t in (0.5, 1.0, 3.0):
        a = t * np.eye(3, dtype=complex)
        approx(fsdlab.delta(a, np.array([1, 1, 1], dtype=complex)), t, tol=1e-12)
    assert fsdlab.delta(np.diag([0.0, 4.0]).astype(complex), x.astype(complex)) == 0.0
    assert fsdlab.log_mean(np.diag([0.0, 4.0]).astype(complex), x.astype(complex)) == -math.inf


def test_constants():
    approx(fsdlab.specht(1.0), 1.0, tol=0.0)
    approx(fsdlab.specht(4.0), 1.2637407212158112, tol=1e-12)
    approx(fsdlab.kantorovich(4.0), 25.0 / 16.0, tol=1e-14)
    approx(fsdlab.specht_p(4.0, 0.5), fsdlab.specht(2.0), tol=1e-13)
    approx(fsdlab.additive_constant(1.0, 1.0), 0.0, tol=0.0)
    assert fsdlab.additive_constant(1.0, 6.0) > 1.0


def test_counterexample_pair():
    a, b = fsdlab.counterexample_pair()
    chaotic_holds, chaotic_margin = fsdlab.chaotic_leq(a, b)
    loewner_holds, loewner_margin = fsdlab.loewner_leq(a, b)
    assert chaotic_holds and chaotic_margin >= -1e-10
    assert not loewner_holds and loewner_margin <= -0.05
    # cross-check the margins against numpy's eigensolver
    la = np.linalg.eigvalsh(np.diag(np.log(np.linalg.eigvalsh(a))))
    lb, vb = np.linalg.eigh(b)
    logb = vb @ np.diag(np.log(lb)) @ vb.conj().T
    loga = np.zeros_like(logb)
    np.fill_diagonal(loga, np.log(np.diag(a).real))
    approx(chaotic_margin, np.linalg.eigvalsh(logb - loga)[0], tol=1e-10)
    approx(loewner_margin, np.linalg.eigvalsh(b - a)[0], tol=1e-12)


def test_matrix_functions_roundtrip():
    rng = np.random.default_rng(0)
    g = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    a = g @ g.conj().T / 5 + 0.5 * np.eye(5)
    back = fsdlab.matrix_exp(fsdlab.matrix_log(a))
    assert np.linalg.norm(back - a) <= 1e-10 * np.linalg.norm(a)
    half = fsdlab.matrix_power(a, 0.5)
    assert np.linalg.norm(half @ half - a) <= 1e-10 * np.linalg.norm(a)


def test_geometric_mean_endpoints():
    rng = np.random.default_rng(1)
    g = rng.normal(size=(4, 4))
    a = (g @ g.T / 4 + 0.3 * np.eye(4)).astype(complex)
    b = np.eye(4, dtype=complex)
    assert np.linalg.norm(fsdlab.geometric_mean(a, b, 0.0) - a) <= 1e-10
    assert np.linalg.norm(fsdlab.geometric_mean(a, b, 1.0) - b) <= 1e-10


def test_fsd_catalog():
    for n in (4, 8, 16):
        value, caveat = fsdlab.fsd("harmonic-quadratic", np.zeros(n, dtype=complex), dim=n)
        approx(value, 1.0 / n, tol=1e-12)
        assert caveat
    z = np.array([1.0, 1.0j, 0.0], dtype=complex)
    value, _ = fsdlab.fsd("quartic", z, dim=3)
    assert value == 0.0
    value, caveat = fsdlab.fsd("weighted", np.zeros(2, dtype=complex),
                               weights=np.array([0.3, 0.7]))
    approx(value, 0.3, tol=1e-12)
    assert not caveat


def test_levi_oracle_agreement():
    z = np.array([0.4 + 0.1j, -0.3j, 0.2], dtype=complex)
    analytic = fsdlab.levi_form("quartic", z, dim=3)
    numeric = fsdlab.levi_form_fd("quartic", z, dim=3)
    assert np.linalg.norm(analytic - numeric) <= 1e-5 * max(1.0, np.linalg.norm(analytic))
    assert "quartic" in fsdlab.catalog_kinds()


def test_error_surface():
    singular = np.diag([0.0, 1.0]).astype(complex)
    try:
        fsdlab.matrix_log(singular)
    except fsdlab.NotInvertibleError:
        pass
    else:
        raise AssertionError("expected NotInvertibleError")


def main():
    tests = [fn for name, fn in sorted(globals().items()) if name.startswith("test_")]
    for fn in tests:
        fn()
        print(f"ok {fn.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
