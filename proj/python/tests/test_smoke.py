import json
import os
import subprocess

import pytest

import twistcolor as tc


def test_fm_counts_match_four_m_squared():
    for m in range(1, 5):
        assert tc.count_colorings(tc.fm(m), tc.standard_twisted_product(tc.dihedral(2 * m))) == 4 * m * m


def test_quandle_file_colors_through_standard_twisted_product():
    f2 = tc.fm(2)
    assert tc.count_colorings(f2, tc.dihedral(4)) == 16
    f1 = tc.fm(1)
    assert tc.count_colorings(f1, tc.dihedral(3)) == tc.brute_force_colorings(f1, tc.dihedral(3)) == 3


def test_structures_verify_and_round_trip():
    b = tc.standard_twisted_product(tc.dihedral(3))
    assert b.verified()
    assert b.size == 9 and b.pair_base == 3
    # (0,0) and (0,1) cross to ((0, 1*0), (0*0, 0)) = ((0,2), (0,0)).
    assert b.R(0, 1) == (2, 0)
    assert b.T(b.T(5)) == 5
    text = tc.dump_structure(b)
    assert tc.dump_structure(tc.load_structure(text)) == text
    assert all(r["pass"] for r in b.reports()["t"])


def test_remark_structure_is_refused_then_fails_t3():
    remark = tc.remark_structure(tc.alexander(5, 3))
    assert not remark.verified()
    with pytest.raises(tc.TwistcolorError) as info:
        tc.load_structure(tc.dump_structure(remark))
    assert info.value.kind == "axiom_violation"
    report = tc.check_moves(remark)
    assert [f["family"] for f in report["families"] if not f["pass"]] == ["T3"]


def test_moves_pass_for_b_d3():
    report = tc.check_moves(tc.standard_twisted_product(tc.dihedral(3)), ["R3", "T3"])
    assert report["pass"]
    assert [f["variants"] for f in report["families"]] == [48, 8]


def test_delta_and_detection():
    assert len(tc.delta_set(tc.dihedral(6), 3)) == 36
    assert (1, 0) not in tc.delta_set(tc.dihedral(7), 3)
    verdict = tc.detect_nonvirtual(tc.fm(3), tc.dihedral(7))
    assert verdict["nonvirtual"] and verdict["threshold"] == 49


def test_product_formula_and_parse():
    trefoil = tc.Diagram.parse("X+ a b c d\nX+ c d e f\nX+ e f a b\n")
    pf = tc.product_formula(trefoil, tc.dihedral(3))
    assert pf["equal"] and pf["lhs"] == 81
    with pytest.raises(tc.TwistcolorError) as info:
        tc.Diagram.parse("X+ a b c\n")
    assert info.value.kind == "parse"


def test_jones_and_random():
    text, terms = tc.fm_jones(2)
    assert text == "A^-12 - A^-6 - A^-4 - A^-2"
    assert terms == {-12: 1, -6: -1, -4: -1, -2: -1}
    assert str(tc.random_diagram(7)) == str(tc.random_diagram(7))


def test_big_counts_are_exact_python_ints():
    loops = tc.Diagram.parse("O 30\n")
    assert tc.count_colorings(loops, tc.dihedral(3)) == 9 ** 30


@pytest.mark.skipif("TWISTCOLOR_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees_with_module(tmp_path):
    cli = os.environ["TWISTCOLOR_CLI"]
    structure = tmp_path / "b4.json"
    structure.write_text(tc.dump_structure(tc.standard_twisted_product(tc.dihedral(4))))
    diagram = tmp_path / "f2.txt"
    diagram.write_text(str(tc.fm(2)))
    out = subprocess.run([cli, "color", str(diagram), str(structure)], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["count"] == "16"
