"""Command line interface behavior and exit codes."""

from extremal_k3 import cli


def run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as e:
        code = e.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_one(capsys):
    code, out, _ = run(capsys, "classify-one", "6A3")
    assert code == 0
    assert out == "6A3;4.4;4;0;4\n"


def test_classify_one_two_rows(capsys):
    code, out, _ = run(capsys, "classify-one", "2A9")
    assert code == 0
    assert out.splitlines() == ["2A9;1;10;0;10", "2A9;5;2;0;2"]


def test_bad_sigma_exits_2(capsys):
    code, _, err = run(capsys, "classify-one", "Q7")
    assert code == 2
    assert "error" in err


def test_unknown_subcommand_exits_2(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_reduce_form(capsys):
    code, out, _ = run(capsys, "reduce-form", "4", "0", "2")
    assert code == 0
    assert out.strip() == "2 0 4"


def test_reduce_form_sl2(capsys):
    code, out, _ = run(capsys, "reduce-form", "--sl2", "6", "-2", "4")
    assert code == 0
    a, b, c = map(int, out.split())
    assert -a < 2 * b <= a <= c


def test_disc_form(capsys):
    code, out, _ = run(capsys, "disc-form", "A2")
    assert code == 0
    assert out.strip() == "3;4/3"


def test_count_roots(tmp_path, capsys):
    p = tmp_path / "gram.txt"
    p.write_text("-2 1\n1 -2\n")
    code, out, _ = run(capsys, "count-roots", str(p))
    assert code == 0
    assert out.strip() == "6"


def test_count_roots_missing_file(capsys):
    code, _, err = run(capsys, "count-roots", "/nonexistent/gram")
    assert code == 2


def test_embed_found_and_not_found(capsys):
    code, out, _ = run(capsys, "embed", "A2", "A3")
    assert code == 0 and "->" in out
    code, out, _ = run(capsys, "embed", "D4", "A10")
    assert code == 1 and out.strip() == "none"


def test_root_types_n2_rank18_count(capsys):
    code, out, err = run(capsys, "root-types", "--n2")
    assert code == 0
    assert len(out.splitlines()) == 297
    assert "count: 297" in err


def test_root_types_candidate_list(capsys):
    code, out, _ = run(capsys, "root-types")
    assert code == 0
    assert len(out.splitlines()) == 712


def test_verify_remark(capsys):
    code, out, _ = run(capsys, "verify-remark")
    assert code == 0
    assert "failures: 0" in out


def test_verify_table1_with_defaults(capsys):
    code, out, _ = run(capsys, "verify-table1")
    assert code == 0
    assert "failures: 0" in out


def test_jobs_validation(capsys):
    code, _, _ = run(capsys, "-j", "0", "verify-remark")
    assert code == 2


def test_output_is_deterministic(capsys):
    a = run(capsys, "root-types", "--n2")
    b = run(capsys, "root-types", "--n2")
    assert a == b
