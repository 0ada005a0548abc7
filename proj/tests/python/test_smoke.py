import hspin


def quat(a=0.0, b=0.0, c=0.0, d=0.0):
    return hspin.Quaternion(a, b, c, d)


def test_lambda_of_standard_pair():
    k1 = hspin.make_spinor(quat(1), quat())
    k2 = hspin.make_spinor(quat(), quat(1))
    lam = hspin.lambda_pdet(k1, k2)
    assert (lam - quat(1)).norm() < 1e-15


def test_geometric_lambda_matches_pdet_up_to_sign():
    for seed in range(20):
        k1 = hspin.random_spinor(2 * seed)
        k2 = hspin.random_spinor(2 * seed + 1)
        lp = hspin.lambda_pdet(k1, k2)
        if lp.norm() < 1e-2:
            continue
        lg = hspin.lambda_geometric(k1, k2)
        assert min((lp - lg).norm(), (lp + lg).norm()) < 1e-8 * (1 + lp.norm())


def test_ptolemy_instance():
    ks = [
        hspin.make_spinor(quat(1), quat()),
        hspin.make_spinor(quat(), quat(1)),
        hspin.make_spinor(quat(1), quat(1)),
        hspin.make_spinor(quat(1), quat(-1)),
    ]
    assert hspin.ptolemy_residual(*ks).norm() < 1e-14


def test_decorated_horosphere():
    k = hspin.make_spinor(quat(), quat(2))
    h = hspin.decorated_horosphere_from_spinor(k)
    assert not h.center.inf
    assert abs(h.size - 0.25) < 1e-15


def test_suite_runs_and_passes():
    r = hspin.run_suite("antisym", 50, 1)
    assert r.passed
    assert r.trials == 50


def test_invalid_spinor_raises():
    import pytest

    with pytest.raises(ValueError):
        hspin.make_spinor(quat(1, 0, 0, 1), quat(1))
