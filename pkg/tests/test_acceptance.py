"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every comparison is exact rational or integer equality; there are no
tolerances anywhere.  Skipped rows are accepted only where the criterion
itself allows them (circulant caps on criterion 7).
"""

from domrat.verification import run_verification

NAMES = {
    1: "ratio formulas for {1,s}, s in [-12,14]",
    2: "divisor-pair reduction",
    3: "efficient-dominating-set characterization",
    4: "circulant values gamma(Z_{3k+2},{1,2}) and gamma(Z_{6k-1},{1,3k})",
    5: "circulant consecutive-steps formula",
    6: "circulant {+-1,+-3} formula",
    7: "period identity gamma(Z_p, S mod p) = ratio * p",
    8: "certificate periods within c*2^c",
    9: "randomized property suite",
    10: "circulant oracle cross-check",
    11: "block-notation round trip",
}

# criteria whose rows may legitimately be skipped at the default caps
SKIP_ALLOWED = {7}


def _run(criterion, **kw):
    rows = run_verification(criteria={criterion}, **kw)
    assert rows, f"criterion {criterion} produced no rows"
    failed = [r for r in rows if r.status == "FAIL"]
    skipped = [r for r in rows if r.status == "SKIP"]
    status = "FAIL" if failed else "PASS"
    print(f"\nACCEPTANCE {criterion:2d} [{status}] {NAMES[criterion]}: "
          f"{len(rows) - len(failed) - len(skipped)} passed, "
          f"{len(failed)} failed, {len(skipped)} skipped")
    for r in failed:
        print(f"  FAIL: {r.label} -- {r.detail}")
    assert not failed
    if criterion not in SKIP_ALLOWED:
        assert not skipped, [r.label for r in skipped]
    return rows


def test_criterion_01_one_s_sweep():
    rows = _run(1)
    assert len(rows) == 25  # every s in [-12,14] except 0 and 1


def test_criterion_02_divisor_pairs():
    rows = _run(2)
    assert len(rows) == 5


def test_criterion_03_eds_characterization():
    rows = _run(3)
    assert len(rows) == 25  # 5 pairs + 20 {1,s} sets


def test_criterion_04_cor_finite_values():
    rows = _run(4)
    assert len(rows) == 12


def test_criterion_05_consecutive_formula():
    _run(5)


def test_criterion_06_pm13_formula():
    rows = _run(6)
    assert len(rows) == 16


def test_criterion_07_period_identity():
    rows = _run(7)
    ran = [r for r in rows if r.status == "PASS"]
    assert len(ran) >= 8  # small-period families actually exercised


def test_criterion_08_period_bound():
    _run(8)


def test_criterion_09_property_suite():
    rows = _run(9, cases=500)
    randomized = [r for r in rows if "random sets" in r.detail]
    assert all("500 random sets" in r.detail for r in randomized)


def test_criterion_10_oracle_cross_check():
    rows = _run(10)
    assert len(rows) >= 20


def test_criterion_11_block_dsl():
    rows = _run(11)
    assert any("1000 random structures" in r.detail for r in rows)
