import pytest
from hypothesis import given, strategies as st

from satgenus.bounds import (
    FORMULA_IDS,
    QUANTITIES,
    BoundReport,
    bound_reports_to_csv,
    chi4_satellite_bound,
    lemma1_satellite_genus,
    orevkov_gap_report,
    qp_closure_euler,
    qp_closure_genus,
    schubert_bound,
    suggested_twist_count,
    thm1_knot_bound,
    thm1_link_bound,
)


def test_report_validation():
    with pytest.raises(ValueError, match="quantity"):
        BoundReport("genus5_lower", "thm1_knot", 0, 0, {})
    with pytest.raises(ValueError, match="formula"):
        BoundReport("genus4_lower", "thm9", 0, 0, {})


def test_report_to_json():
    r = thm1_knot_bound(1, 3)
    assert r.to_json() == {
        "quantity": "genus4_lower",
        "formula_id": "thm1_knot",
        "value": 2,
        "clamped": 2,
        "inputs": {"companion_g4": 1, "winding": 3},
    }


def test_schubert_frozen():
    r = schubert_bound(1, 3)
    assert (r.formula_id, r.quantity, r.value) == ("schubert_1", "genus3_lower", 3)
    r = schubert_bound(1, 3, genus_pattern=2)
    assert (r.formula_id, r.value) == ("schubert_2", 5)
    assert r.inputs == {"companion_genus": 1, "winding": 3, "pattern_genus": 2}
    # the classical bound uses |winding|
    assert schubert_bound(2, -3).value == 6


def test_thm1_frozen():
    assert thm1_knot_bound(1, 3).value == 2
    assert thm1_knot_bound(1, 2).value == 2
    assert thm1_knot_bound(2, 5).value == 8
    assert thm1_link_bound(1, 3).value == 1
    assert thm1_link_bound(1, 2).value == 1
    assert thm1_link_bound(2, 5).value == 6


def test_thm1_clamping():
    r = thm1_knot_bound(0, 5)
    assert r.value == -2
    assert r.clamped == 0
    r = thm1_link_bound(0, 4)
    assert (r.value, r.clamped) == (-3, 0)


def test_qp_closure_frozen():
    assert qp_closure_euler(4, 0).value == 4
    assert qp_closure_euler(2, 3).value == -1
    assert qp_closure_genus(2, 1).value == 0
    assert qp_closure_genus(2, 3).value == 1
    assert qp_closure_genus(9, 80).value == 36
    r = qp_closure_genus(3, 0)
    assert (r.value, r.clamped) == (-1, 0)


def test_qp_closure_parity_rejection():
    with pytest.raises(ValueError, match="odd"):
        qp_closure_genus(2, 2)
    with pytest.raises(ValueError, match="odd"):
        qp_closure_genus(3, 5)


def test_lemma1_frozen():
    assert lemma1_satellite_genus(1, 2, 1).value == 2
    assert lemma1_satellite_genus(1, 3, 2).value == 3
    assert lemma1_satellite_genus(36, 2, 123).value == 72 + 61
    with pytest.raises(ValueError, match="odd"):
        lemma1_satellite_genus(1, 2, 2)


def test_chi4_satellite_frozen():
    assert chi4_satellite_bound(-1, 2).value == -2
    assert chi4_satellite_bound(1, 4).value == 4
    with pytest.raises(ValueError):
        chi4_satellite_bound(-1, 0)


def test_input_validation():
    with pytest.raises(ValueError):
        schubert_bound(-1, 2)
    with pytest.raises(ValueError):
        thm1_knot_bound(-1, 2)
    with pytest.raises(ValueError):
        thm1_knot_bound(1, -2)
    with pytest.raises(ValueError):
        qp_closure_euler(0, 1)
    with pytest.raises(ValueError):
        lemma1_satellite_genus(1, 0, 1)


@given(st.integers(0, 5), st.integers(1, 6))
def test_knot_bound_dominates_link_bound(g, n):
    knot = thm1_knot_bound(g, n).value
    link = thm1_link_bound(g, n).value
    assert knot >= link
    assert (knot == link) == (n == 1)


@given(st.integers(0, 5), st.integers(1, 6), st.integers(0, 40))
def test_lemma1_meets_knot_bound(g, n, bands):
    if (bands - n + 1) % 2:
        bands += 1
    exact = lemma1_satellite_genus(g, n, bands).value
    lower = thm1_knot_bound(g, n).value
    assert exact >= lower


@given(st.integers(1, 12), st.integers(0, 60))
def test_euler_and_genus_agree_on_knots(strands, bands):
    if (bands - strands + 1) % 2:
        bands += 1
    chi = qp_closure_euler(strands, bands).value
    genus = qp_closure_genus(strands, bands).value
    assert chi == 1 - 2 * genus


def test_csv_rendering():
    reports = [
        thm1_knot_bound(1, 3),
        thm1_link_bound(1, 3),
        schubert_bound(1, 3),
    ]
    text = bound_reports_to_csv(reports)
    lines = text.splitlines()
    assert lines[0] == "formula,companion_g4,companion_genus,winding,value"
    assert lines[1] == "thm1_knot,1,,3,2"
    assert lines[2] == "thm1_link,1,,3,1"
    assert lines[3] == "schubert_1,,1,3,3"
    assert len(lines) == 4


def test_csv_no_reports():
    assert bound_reports_to_csv([]) == "formula,value\n"


def test_suggested_twist_count():
    assert suggested_twist_count(2) == 11
    assert suggested_twist_count(9) == 215
    assert suggested_twist_count(12) == 383
    for n in range(2, 30):
        t = suggested_twist_count(n)
        assert t % 2 == 1
        assert t <= (8 * n * n + 2) // 3 < t + 3


def test_gap_report_n9_frozen():
    r = orevkov_gap_report(9)
    assert r.twists == 215
    assert r.bands_k1 == 80
    assert r.g4_k1 == 36
    assert r.bands_k2 == 123
    assert r.g4_k2 == 53
    assert r.satellite_bound == 72
    assert r.gap is True


def test_gap_report_n12_frozen():
    r = orevkov_gap_report(12)
    assert r.twists == 383
    assert r.g4_k1 == 66
    assert r.g4_k2 == 95
    assert r.satellite_bound == 132
    assert r.gap is True


def test_gap_report_small_n_no_gap():
    r = orevkov_gap_report(2, twists=1)
    assert r.g4_k1 == 1
    assert r.g4_k2 == 6
    assert r.satellite_bound == 2
    assert r.gap is False


def test_gap_report_rejects_even_twists():
    with pytest.raises(ValueError):
        orevkov_gap_report(3, twists=4)
    with pytest.raises(ValueError):
        orevkov_gap_report(3, twists=0)


def test_gap_report_json_keys():
    r = orevkov_gap_report(4, twists=3)
    assert set(r.to_json()) == {
        "n",
        "twists",
        "bands_k1",
        "g4_k1",
        "bands_k2",
        "g4_k2",
        "satellite_bound",
        "gap",
    }


def test_registry_contents():
    assert "lemma1" in FORMULA_IDS
    assert "genus4_exact" in QUANTITIES
