"""Smoke tests for the python bindings."""
import _whitdaha as wd


def test_root_datum():
    d = wd.RootDatum("A", 2)
    assert d.rank == 2
    assert d.m_tilde == 3
    assert d.positive_root_count == 3
    assert d.minuscule_indices == [1, 2]
    assert '"positive_roots"' in d.json()


def test_polynomial_strings():
    assert wd.polynomial("A", 1, "barP", [-2]) == "X^2 + X^-2 + 1 + q"
    assert wd.polynomial("A", 1, "E", [0]) == "1"
    assert wd.polynomial("A", 1, "E", [1]) == "X"
    p2 = wd.polynomial("A", 1, "P", [-2])
    assert p2.startswith("X^2 + X^-2")


def test_relation_suite():
    rows = wd.relation_suite("A", 1, degree=2)
    assert rows and all(r["pass"] for r in rows)


def test_run_checks():
    rows = wd.run_checks("A", 1, task="verify_toda", cutoff=8)
    assert rows
    assert all(r["status"] in ("pass", "skipped") for r in rows)


if __name__ == "__main__":
    test_root_datum()
    test_polynomial_strings()
    test_relation_suite()
    test_run_checks()
    print("python smoke tests passed")
