import os
from fractions import Fraction
from pathlib import Path

import pytest

import e7dirac

FIXTURES = Path(os.environ.get("DIRAC_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def test_chambers_and_rho():
    ch = e7dirac.chambers()
    assert len(ch) == 56
    assert ch[0]["rho_j"] == e7dirac.rho()
    assert e7dirac.rho() == [0, 1, 2, 3, 4, 5, Fraction(-17, 2), Fraction(17, 2)]
    assert ch[0]["rho_n_j_varpi"] == (0, 0, 0, 0, 0, 0, 27)


def test_spin_module_dimension():
    assert e7dirac.spin_module_dimension() == 2**27


def test_norms():
    assert e7dirac.norm_sq([1] * 7) == Fraction(399, 2)
    assert e7dirac.norm_sq([1, 0, 1, 1, 0, 1, 0]) == 78
    assert e7dirac.spin_norm_sq((0, 0, 0, 0, 0, 0, -12)) == Fraction(231, 2)
    assert e7dirac.spin_norm_sq((0, 0, 0, 0, 0, 0, -24)) == Fraction(159, 2)
    assert e7dirac.dirac_inequality([1, 1, 1, 0, 1, 1, 1], (0, 0, 0, 0, 0, 0, -12)) == "equality"


def test_rational_inputs():
    assert e7dirac.norm_sq(["1/2"] * 7) == Fraction(399, 8)
    assert e7dirac.norm_sq([Fraction(1, 2)] * 7) == Fraction(399, 8)


def test_ktype_validation():
    assert not e7dirac.is_k_type((0, 0, 0, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        e7dirac.spin_norm_sq((0, 0, 0, 0, 0, 0, 1))
    k = (3, 1, 0, 0, 0, 1, 16)
    assert e7dirac.contragredient(e7dirac.contragredient(k)) == k
    assert e7dirac.spin_norm_sq(k) == e7dirac.spin_norm_sq(e7dirac.contragredient(k))


def test_usmall_examples():
    assert e7dirac.is_usmall((0, 0, 0, 0, 0, 0, 54))
    assert not e7dirac.is_usmall((0, 0, 0, 0, 0, 0, 57))


def test_omega_and_candidates():
    assert len(e7dirac.omega()) == 4676
    gammas = {g for g, _ in e7dirac.dirac_candidates([1, 1, 1, 0, 1, 0, 1])}
    assert gammas == {(0, 0, 0, 0, 0, 0, 3), (0, 0, 0, 0, 0, 0, -3)}


def test_wallach_family():
    fam = [((0, 0, 0, 0, 0, n, -12 - 2 * n), 1) for n in range(21)]
    m, achievers, hd = e7dirac.spin_lkts(fam, [1, 1, 1, 0, 1, 1, 1])
    assert m == Fraction(231, 2)
    assert achievers == list(range(6))
    assert hd


def test_parity():
    values, same = e7dirac.dirac_index_parity(
        (0, 0, 0, 0, 0, 0, 3), [(0, 0, 0, 0, 0, 1, 25), (4, 0, 0, 0, 0, 1, 9), (0, 0, 0, 0, 0, 5, -7)]
    )
    assert values == [11, 3, -5]
    assert same


def test_fixtures():
    norms = e7dirac.nu_norms(FIXTURES / "params_rho_minimal.txt", FIXTURES / "kgb_named.txt")
    assert norms == {3016: Fraction(371, 2), 2989: 97, 2988: 97}
    rows = e7dirac.verify_tables(FIXTURES / "tables.txt")
    assert len(rows) == 73 and all(ok for _, ok in rows)
    s = e7dirac.string_counts(FIXTURES / "dirac_counts.txt")
    assert s["n_i"][0] == 56 and s["n_i"][6] == 158 and s["total"] is None


def test_phi():
    r = e7dirac.phi_census(FIXTURES / "kgb_fs_involutions.txt")
    assert r["size"] == 178192
    assert len(r["phi1"]) == 23
    assert r["partition"][13] == 13


def test_missing_fixture():
    with pytest.raises(FileNotFoundError):
        e7dirac.verify_tables(FIXTURES / "nope.txt")


def test_criterion_runner():
    assert e7dirac.run_criterion(1) == (True, e7dirac.run_criterion(1)[1])
    passed, detail = e7dirac.run_criterion(8)
    assert not passed and "11,3,-5" in detail
    with pytest.raises(IndexError):
        e7dirac.run_criterion(14)
