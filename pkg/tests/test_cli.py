from pathlib import Path

import pytest

from loci2d.cli import main

SCENES_DIR = Path(__file__).parent.parent / "scenes"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_apollonius_command(capsys):
    code, out, _ = run(capsys, "apollonius", "--a", "0,0", "--b", "5,0", "--ratio", "3/2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Circle center 9 0 radius 6"
    assert lines[1] == "AO 9"
    assert lines[2] == "OB 4"
    assert lines[3] == "conjugate internal 3 0"
    assert lines[4] == "conjugate external 15 0"


def test_apollonius_mediatrix_command(capsys):
    code, out, _ = run(capsys, "apollonius", "--a", "0,0", "--b", "5,0", "--ratio", "1")
    assert code == 0
    assert out.splitlines()[0] == "Line anchor 2.5 0 direction 0 1"


def test_apollonius_real_ratio(capsys):
    code, out, _ = run(capsys, "apollonius", "--a", "0,0", "--b", "5,0", "--ratio", "1.5")
    assert code == 0
    assert out.splitlines()[0] == "Circle center 9 0 radius 6"


def test_sumsq_commands(capsys):
    code, out, _ = run(capsys, "sumsq", "--a", "0,0", "--b", "4,0", "--k2", "4")
    assert code == 0
    assert out == "Empty\n"

    code, out, _ = run(capsys, "sumsq", "--a", "0,0", "--b", "4,0", "--k2", "8")
    assert code == 0
    assert out == "SinglePoint 2 0\n"

    code, out, _ = run(capsys, "sumsq", "--a", "0,0", "--b", "4,0", "--k2", "20")
    assert code == 0
    assert out.startswith("Circle center 2 0 radius 2.44948974")


def test_diffsq_command(capsys):
    code, out, _ = run(capsys, "diffsq", "--a", "0,0", "--b", "4,0", "--c", "8")
    assert code == 0
    assert out == "Line anchor 3 0 direction 0 1\n"


def test_harmonic_command(capsys):
    code, out, _ = run(capsys, "harmonic", "--a", "0,0", "--b", "5,0", "--ratio", "2/5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "internal 1.42857143 0"
    assert lines[1] == "external -3.33333333 0"


def test_triangle_command(capsys):
    code, out, _ = run(capsys, "triangle", "--a", "0,0", "--b", "4,0", "--c", "0,3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "sides 5 3 4"
    assert lines[2] == "centroid 1.33333333 1"
    assert lines[3] == "circumcenter 2 1.5"
    assert lines[4] == "circumradius 2.5"


def test_nine_significant_digits(capsys):
    _, out, _ = run(capsys, "sumsq", "--a", "0,0", "--b", "4,0", "--k2", "20")
    assert "2.44948974" in out and "2.449489742" not in out


def test_exit_code_flag_parse_error(capsys):
    code, _, err = run(capsys, "apollonius", "--a", "0,0", "--ratio", "3/2")
    assert code == 1 and err
    code, _, err = run(capsys, "apollonius", "--a", "zero,0", "--b", "5,0", "--ratio", "3/2")
    assert code == 1
    code, _, err = run(capsys, "apollonius", "--a", "0,0", "--b", "5,0", "--ratio", "3:2")
    assert code == 1
    code, _, err = run(capsys, "nosuch")
    assert code == 1


def test_exit_code_scene_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.scene"
    bad.write_text("point A 0 zero\n", encoding="utf-8")
    code, _, err = run(capsys, "render", "--scene", str(bad))
    assert code == 1
    assert "line 1" in err and "malformed number" in err


def test_exit_code_degeneracy(capsys):
    code, _, err = run(capsys, "apollonius", "--a", "0,0", "--b", "0,0", "--ratio", "3/2")
    assert code == 2 and "coincide" in err
    code, _, err = run(capsys, "diffsq", "--a", "1,1", "--b", "1,1", "--c", "0")
    assert code == 2
    code, _, err = run(capsys, "sumsq", "--a", "0,0", "--b", "4,0", "--k2", "-3")
    assert code == 2


def test_exit_code_verification_failure(tmp_path, capsys):
    scene = tmp_path / "skewed.scene"
    scene.write_text(
        "point A 0.25 0.125\npoint B 4.75 0.375\nlocus apollonius A B 3/2\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "verify", "--scene", str(scene), "--band", "1e-13")
    assert code == 3
    assert "FAIL" in out


def test_exit_code_io_failure(tmp_path, capsys):
    code, _, err = run(capsys, "render", "--scene", str(tmp_path / "missing.scene"))
    assert code == 4 and err
    scene = tmp_path / "ok.scene"
    scene.write_text("point A 0 0\npoint B 5 0\nlocus apollonius A B 3/2\n", encoding="utf-8")
    code, _, err = run(capsys, "render", "--scene", str(scene), "--out", str(tmp_path / "no" / "dir.svg"))
    assert code == 4


def test_render_writes_svg(tmp_path, capsys):
    scene = tmp_path / "ok.scene"
    scene.write_text("point A 0 0\npoint B 5 0\nlocus apollonius A B 3/2\n", encoding="utf-8")
    out_path = tmp_path / "figure.svg"
    code, _, _ = run(capsys, "render", "--scene", str(scene), "--out", str(out_path))
    assert code == 0
    data = out_path.read_bytes()
    assert data.startswith(b'<?xml version="1.0"')
    code, _, _ = run(capsys, "render", "--scene", str(scene), "--out", str(out_path))
    assert out_path.read_bytes() == data


def test_render_to_stdout(tmp_path, capsys):
    scene = tmp_path / "ok.scene"
    scene.write_text("point A 0 0\npoint B 5 0\nlocus apollonius A B 1/1\n", encoding="utf-8")
    code = main(["render", "--scene", str(scene)])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.count("<line") == 1


def test_verify_report_written_to_file(tmp_path, capsys):
    scene = tmp_path / "ok.scene"
    scene.write_text("point A 0 0\npoint B 5 0\nlocus apollonius A B 3/2\n", encoding="utf-8")
    report_path = tmp_path / "report.txt"
    code, out, _ = run(capsys, "verify", "--scene", str(scene), "--out", str(report_path))
    assert code == 0
    assert report_path.read_text(encoding="utf-8") == out
    assert out.startswith("ok locus apollonius A B 3/2")


def test_verify_bundled_scenes(capsys):
    for scene_path in sorted(SCENES_DIR.glob("*.scene")):
        code, out, _ = run(capsys, "verify", "--scene", str(scene_path))
        assert code == 0, (scene_path, out)


def test_verify_respects_explicit_grid_step(tmp_path, capsys):
    scene = tmp_path / "ok.scene"
    scene.write_text("point A 0 0\npoint B 4 0\nlocus sumsq A B 20\n", encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--scene", str(scene), "--grid-step", "0.05")
    assert code == 0
    assert "ok locus sumsq" in out
