"""Command-line interface: exit codes, report formats, emitted documents."""

import json
from pathlib import Path

import pytest

from algebroids.cli import emit_report, main
from algebroids.exactfield import Matrix, RationalField
from algebroids.hopfcore import verify_hopf
from algebroids.report import Report
from algebroids.specfile import SpecBuilder, parse, parse_text, spec_from_hopf
from algebroids.catalog import pair_groupoid_weak_hopf
from algebroids.twistlab import apply_twist

QQ = RationalField()
SPECS = Path(__file__).resolve().parent.parent / "specs"

KZ2 = str(SPECS / "kz2.spec")
KZ2_TWISTED = str(SPECS / "kz2-twisted.spec")
KZ3_RB = str(SPECS / "kz3-rb.spec")
M2 = str(SPECS / "m2-groupoid.spec")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# check


def test_check_hopf_kz2(capsys):
    code, out, _ = run(capsys, "check", "--level", "hopf", KZ2)
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_check_hopf_m2(capsys):
    code, out, _ = run(capsys, "check", "--level", "hopf", M2)
    assert code == 0


def test_check_lu_twisted_fails_at_lu3(capsys):
    code, out, _ = run(capsys, "check", "--level", "lu", KZ2_TWISTED)
    assert code == 1
    assert "[FAIL]" in out
    fail_lines = [l for l in out.splitlines() if "[FAIL]" in l]
    assert len(fail_lines) == 1
    assert "lu3" in fail_lines[0]
    assert "-1" in out  # the counterexample certificate


def test_check_lu_untwisted_passes(capsys):
    code, out, _ = run(capsys, "check", "--level", "lu", KZ2)
    assert code == 0


@pytest.mark.parametrize("level,path", [
    ("algebra", KZ2),
    ("left-bialgebroid", KZ2),
    ("right-bialgebroid", KZ2),
    ("right-bialgebroid", KZ3_RB),
    ("hopf", KZ2),
])
def test_check_levels_pass(capsys, level, path):
    code, _, _ = run(capsys, "check", "--level", level, path)
    assert code == 0


def test_check_weak_hopf(capsys, tmp_path):
    b = SpecBuilder(QQ)
    b.add_weak_hopf(pair_groupoid_weak_hopf(2, QQ))
    p = tmp_path / "w.spec"
    p.write_text(b.emit())
    code, out, _ = run(capsys, "check", "--level", "weak-hopf", str(p))
    assert code == 0


def test_check_name_selects_assembly(capsys, tmp_path, kz2, kz3):
    b = SpecBuilder(QQ)
    b.add_hopf(kz2)
    b.add_hopf(kz3)
    p = tmp_path / "two.spec"
    p.write_text(b.emit())
    code, out, _ = run(capsys, "check", "--level", "hopf", str(p),
                       "--name", kz3.name)
    assert code == 0
    assert kz3.name in out and kz2.name not in out
    # without --name, check verifies every assembly in the file
    code, out, _ = run(capsys, "check", "--level", "hopf", str(p))
    assert code == 0
    assert kz2.name in out and kz3.name in out
    # single-assembly commands refuse the ambiguity instead
    code, _, err = run(capsys, "integrals", str(p))
    assert code == 2
    assert kz2.name in err and kz3.name in err


def test_check_field_override(capsys):
    code, _, _ = run(capsys, "check", "--level", "hopf", KZ2,
                     "--field", "gf:7")
    assert code == 0


# ---------------------------------------------------------------------------
# integrals


def test_integrals_m2(capsys):
    code, out, _ = run(capsys, "integrals", M2)
    assert code == 0
    assert "dimension 2" in out
    assert "nd-integral" in out


def test_integrals_flags_non_integral_element(capsys, tmp_path, kz2):
    b = SpecBuilder(QQ)
    b.add_hopf(kz2)
    b.add_element("unit", kz2.total, (1, 0))
    p = tmp_path / "bad.spec"
    p.write_text(b.emit())
    code, out, _ = run(capsys, "integrals", str(p))
    assert code == 1
    assert "member-unit" in out and "[FAIL]" in out


def test_integrals_without_elements_lists_basis(capsys, tmp_path, kz2):
    p = tmp_path / "noelem.spec"
    p.write_text(spec_from_hopf(kz2, name="kz2"))
    code, out, _ = run(capsys, "integrals", str(p))
    assert code == 0
    assert "basis-0" in out and "nondegenerate" in out


# ---------------------------------------------------------------------------
# ls-antipode


def test_ls_antipode_emits_inverse_antipode(capsys, tmp_path):
    out_path = tmp_path / "kz3-hopf.spec"
    code, out, _ = run(capsys, "ls-antipode", KZ3_RB,
                       "--out", str(out_path))
    assert code == 0
    assert "PASS" in out
    spec = parse(str(out_path))
    _, h = spec.hopf(None)
    names = h.total.basis_names
    g, g2 = names.index("g"), names.index("g2")
    assert h.S.col(g)[g2] == QQ.one  # S(g) = g^2
    assert h.S.col(g2)[g] == QQ.one  # S(g^2) = g
    assert verify_hopf(h).passed


def test_ls_antipode_output_reverifies_via_cli(capsys, tmp_path):
    out_path = tmp_path / "out.spec"
    run(capsys, "ls-antipode", KZ3_RB, "--out", str(out_path))
    code, _, _ = run(capsys, "check", "--level", "hopf", str(out_path))
    assert code == 0


def test_ls_antipode_stdout_mode(capsys):
    code, out, err = run(capsys, "ls-antipode", KZ3_RB)
    assert code == 0
    doc = json.loads(out)  # the spec document goes to stdout
    assert doc["format"] == "algebroid-spec/1"
    assert "PASS" in err  # the report goes to stderr


def test_ls_antipode_precondition_failure(capsys, tmp_path, kz2):
    b = SpecBuilder(QQ)
    b.add_bialgebroid(kz2.rb)
    b.add_element("unit", kz2.total, (1, 0))
    p = tmp_path / "bad.spec"
    p.write_text(b.emit())
    code, out, _ = run(capsys, "ls-antipode", str(p), "--integral", "unit")
    assert code == 1
    assert "[FAIL]" in out


# ---------------------------------------------------------------------------
# twist


@pytest.fixture()
def twist_pair(tmp_path, kz2):
    g = Matrix.from_rows(QQ, [[QQ.one, -QQ.one]])
    b = SpecBuilder(QQ)
    b.add_hopf(kz2)
    twisted = apply_twist(kz2.lb, kz2.S, g, name="kz2-signed")
    b.add_hopf(twisted)
    lb_name = next(iter(b.data["left_bialgebroids"]))
    b.add_functional("sign", lb_name, g)
    p = tmp_path / "pair.spec"
    p.write_text(b.emit())
    return str(p), kz2.name


def test_twist_verify(capsys, twist_pair):
    path, name = twist_pair
    code, out, _ = run(capsys, "twist", "verify", path,
                       "--name", name, "--functional", "sign")
    assert code == 0
    assert "tw1" in out and "tw2" in out and "tw3" in out


def test_twist_apply_and_reverify(capsys, twist_pair, tmp_path):
    path, name = twist_pair
    out_path = tmp_path / "applied.spec"
    code, out, _ = run(capsys, "twist", "apply", path,
                       "--name", name, "--functional", "sign",
                       "--out", str(out_path))
    assert code == 0
    code, _, _ = run(capsys, "check", "--level", "hopf", str(out_path))
    assert code == 0


def test_twist_recover(capsys, twist_pair):
    path, _ = twist_pair
    code, out, err = run(capsys, "twist", "recover", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["functionals"]["recovered-twist"]["matrix"] == [["1", "-1"]]
    assert "recover-roundtrip" in err


def test_twist_recover_needs_two(capsys, tmp_path, kz2):
    p = tmp_path / "one.spec"
    p.write_text(spec_from_hopf(kz2, name="solo"))
    code, _, err = run(capsys, "twist", "recover", str(p))
    assert code == 2
    assert "two" in err


# ---------------------------------------------------------------------------
# dualize / wha-decide / diagram


def test_dualize_kz2(capsys, tmp_path):
    out_path = tmp_path / "dual.spec"
    code, out, _ = run(capsys, "dualize", KZ2, "--out", str(out_path))
    assert code == 0
    spec = parse(str(out_path))
    _, hd = spec.hopf(None)
    assert verify_hopf(hd).passed
    name, coords = spec.element_for(hd.total, "kappa")
    assert name == "kappa"


def test_dualize_degenerate_integral(capsys, tmp_path, m2):
    b = SpecBuilder(QQ)
    b.add_hopf(m2)
    b.add_element("partial", m2.total, (1, 0, 1, 0))  # rank-deficient
    p = tmp_path / "m2.spec"
    p.write_text(b.emit())
    code, out, _ = run(capsys, "dualize", str(p), "--integral", "partial")
    assert code == 1
    assert "dualize-nondegenerate" in out


def test_wha_decide_kz2(capsys):
    code, out, _ = run(capsys, "wha-decide", KZ2)
    assert code == 0
    assert "decision: exact" in out


def test_diagram_kz2(capsys):
    code, out, _ = run(capsys, "diagram", KZ2)
    assert code == 0
    assert "diagram-commutes" in out


# ---------------------------------------------------------------------------
# report formats and determinism


def test_structured_report(capsys):
    code, out, _ = run(capsys, "check", "--level", "hopf", KZ2,
                       "--report", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "algebroid-report/1"
    assert doc["verdict"] == "PASS"
    assert all(c["verdict"] in ("PASS", "FAIL", "SKIP") for c in doc["checks"])


def test_structured_output_is_byte_stable(capsys):
    _, one, _ = run(capsys, "check", "--level", "lu", KZ2_TWISTED,
                    "--report", "structured")
    _, two, _ = run(capsys, "check", "--level", "lu", KZ2_TWISTED,
                    "--report", "structured")
    assert one == two
    doc = json.loads(one)
    assert doc["verdict"] == "FAIL"


def test_text_output_is_byte_stable(capsys):
    _, one, _ = run(capsys, "check", "--level", "hopf", M2)
    _, two, _ = run(capsys, "check", "--level", "hopf", M2)
    assert one == two


def test_certificate_limit(capsys, tmp_path, m2):
    b = SpecBuilder(QQ)
    b.add_hopf(m2)
    b.add_element("partial", m2.total, (1, 0, 1, 0))
    p = tmp_path / "m2.spec"
    p.write_text(b.emit())
    _, out, _ = run(capsys, "integrals", str(p),
                    "--report", "structured", "--certificate-limit", "1")
    doc = json.loads(out)
    for check in doc["checks"]:
        if check["verdict"] == "FAIL":
            assert len(check["certificates"]) <= 1


def test_emit_report_matches_to_dict():
    rep = Report("demo")
    rep.add("a", "first", True)
    rep.add("b", "second", False, ["bad"])
    doc = json.loads(emit_report(rep, "structured"))
    assert doc["schema"] == "algebroid-report/1"
    assert [c["id"] for c in doc["checks"]] == ["a", "b"]
    text = emit_report(rep, "text")
    assert "demo: FAIL" in text


# ---------------------------------------------------------------------------
# usage and parse errors exit 2


def test_unknown_command(capsys):
    assert run(capsys, "frobnicate", "x.spec")[0] == 2


def test_missing_level(capsys):
    assert run(capsys, "check", KZ2)[0] == 2


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", "--level", "hopf", "/no/such.spec")
    assert code == 2
    assert "error:" in err


def test_bad_field_value(capsys):
    code, _, err = run(capsys, "check", "--level", "hopf", KZ2,
                       "--field", "gf:4")
    assert code == 2
    assert "prime" in err


def test_syntax_error_location(capsys, tmp_path):
    p = tmp_path / "broken.spec"
    p.write_text('{\n  "format": nope\n}')
    code, _, err = run(capsys, "check", "--level", "hopf", str(p))
    assert code == 2
    assert "line 2" in err


def test_level_without_structures(capsys, tmp_path):
    p = tmp_path / "empty.spec"
    p.write_text(json.dumps({"format": "algebroid-spec/1",
                             "field": "rational"}))
    code, _, err = run(capsys, "check", "--level", "hopf", str(p))
    assert code == 2
    assert "declares no" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


# ---------------------------------------------------------------------------
# bundled fixtures stay canonical


@pytest.mark.parametrize("path", [KZ2, KZ2_TWISTED, KZ3_RB, M2])
def test_bundled_specs_parse_and_reemit(path):
    spec = parse(path)
    text = Path(path).read_text()
    doc = json.loads(text)
    assert doc["format"] == "algebroid-spec/1"
    assert text.endswith("\n")
    assert json.dumps(doc, indent=2, sort_keys=True) + "\n" == text


def test_bundled_twisted_spec_verifies_as_hopf(capsys):
    code, _, _ = run(capsys, "check", "--level", "hopf", KZ2_TWISTED)
    assert code == 0
